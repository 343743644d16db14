"""
Text and JSON formats for polyominoes.

    # comment
    poly <width> <height>
    hole square <x> <y>
    hole slit2 <v|h> <x> <y>
    hole slit1 <v|h> <x> <y>
    hole L <x> <y> <r0|r90|r180|r270> [flip]
    hole U <x> <y> <r0|r90|r180|r270>
    cut <v|h> <x> <y>          (raw mode)
    remove <x> <y>             (raw mode)
    meta <key> <value...>
    faces:                     (grid block, top row first, '.' for removed cells)
    layers:

Grid rows are read character by character unless they contain whitespace,
in which case they are split into tokens.

The JSON form mirrors the text one: width, height, holes (or cuts and
removed), and optional faces, layers and meta entries.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..utils.errors import PolySyntaxError
from .grid import (
    Axis, CellCoord, CutSegment, HoleKind, HoleSpec, Polyomino, build, from_cuts,
)

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r'\S+')
_BLOCKS = ('faces', 'layers')


@dataclass
class PolyDocument:
    polyomino: Polyomino
    faces: Optional[Dict[CellCoord, int]] = None
    layers: Optional[Dict[CellCoord, int]] = None
    meta: Dict[str, str] = field(default_factory=dict)


def _tokens(line: str) -> List[Tuple[str, int]]:
    """Tokens with 1-based columns, comment stripped"""
    line = line.split('#', 1)[0]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]


def _int(tok: Tuple[str, int], lineno: int, what: str) -> int:
    text, col = tok
    try:
        return int(text)
    except ValueError:
        raise PolySyntaxError(f"expected integer {what}", lineno, col, text)


def _axis(tok: Tuple[str, int], lineno: int) -> Axis:
    text, col = tok
    if text.lower() not in ('v', 'h'):
        raise PolySyntaxError("expected axis v or h", lineno, col, text)
    return Axis(text.lower())


def _rotation(tok: Tuple[str, int], lineno: int) -> int:
    text, col = tok
    match = re.fullmatch(r'r(0|90|180|270)', text.lower())
    if not match:
        raise PolySyntaxError("expected rotation r0, r90, r180 or r270", lineno, col, text)
    return int(match.group(1))


def _expect(tokens, count, lineno, usage):
    if len(tokens) < count:
        last = tokens[-1]
        raise PolySyntaxError(f"too few fields, expected {usage}", lineno, last[1] + len(last[0]), last[0])
    if len(tokens) > count:
        text, col = tokens[count]
        raise PolySyntaxError(f"unexpected field, expected {usage}", lineno, col, text)


def _parse_hole(tokens, lineno) -> HoleSpec:
    if len(tokens) < 2:
        raise PolySyntaxError("missing hole kind", lineno, tokens[0][1], tokens[0][0])
    kind_text, kind_col = tokens[1]
    kind = {k.value.lower(): k for k in HoleKind}.get(kind_text.lower())
    if kind is None:
        raise PolySyntaxError("unknown hole kind", lineno, kind_col, kind_text)

    if kind is HoleKind.SQUARE:
        _expect(tokens, 4, lineno, "hole square <x> <y>")
        return HoleSpec(kind, _int(tokens[2], lineno, 'x'), _int(tokens[3], lineno, 'y'))
    if kind in (HoleKind.SLIT2, HoleKind.SLIT1):
        _expect(tokens, 5, lineno, f"hole {kind.value} <v|h> <x> <y>")
        return HoleSpec(kind, _int(tokens[3], lineno, 'x'), _int(tokens[4], lineno, 'y'),
                        axis=_axis(tokens[2], lineno))
    if kind is HoleKind.L:
        flipped = len(tokens) == 6 and tokens[5][0].lower() == 'flip'
        _expect(tokens, 6 if flipped else 5, lineno, "hole L <x> <y> <rotation> [flip]")
        return HoleSpec(kind, _int(tokens[2], lineno, 'x'), _int(tokens[3], lineno, 'y'),
                        rotation=_rotation(tokens[4], lineno), flipped=flipped)
    _expect(tokens, 5, lineno, "hole U <x> <y> <rotation>")
    return HoleSpec(kind, _int(tokens[2], lineno, 'x'), _int(tokens[3], lineno, 'y'),
                    rotation=_rotation(tokens[4], lineno))


def _parse_grid(rows: List[Tuple[int, str]], width: int, height: int, name: str) -> Dict[CellCoord, int]:
    if len(rows) != height:
        lineno = rows[-1][0] if rows else 0
        raise PolySyntaxError(f"{name} block has {len(rows)} rows, expected {height}", lineno, 1, name)
    values = {}
    for row_index, (lineno, text) in enumerate(rows):
        y = height - 1 - row_index
        stripped = text.split('#', 1)[0].strip()
        if re.search(r'\s', stripped):
            cells = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(stripped)]
        else:
            cells = [(ch, i + 1) for i, ch in enumerate(stripped)]
        if len(cells) != width:
            raise PolySyntaxError(f"{name} row has {len(cells)} cells, expected {width}",
                                  lineno, 1, stripped)
        for x, (tok, col) in enumerate(cells):
            if tok == '.':
                continue
            values[CellCoord(x, y)] = _int((tok, col), lineno, f"{name} value")
    return values


def parse_document(text: str) -> PolyDocument:
    header = None
    holes: List[HoleSpec] = []
    cuts: List[CutSegment] = []
    removed: List[CellCoord] = []
    meta: Dict[str, str] = {}
    blocks: Dict[str, List[Tuple[int, str]]] = {}
    current_block = None

    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = _tokens(line)
        if current_block is not None:
            if tokens and not tokens[0][0].endswith(':') and tokens[0][0] not in (
                    'poly', 'hole', 'cut', 'remove', 'meta'):
                blocks[current_block].append((lineno, line))
                continue
            current_block = None
        if not tokens:
            continue

        keyword, col = tokens[0]
        if keyword.endswith(':'):
            name = keyword[:-1].lower()
            if name not in _BLOCKS:
                raise PolySyntaxError("unknown block", lineno, col, keyword)
            if name in blocks:
                raise PolySyntaxError("duplicate block", lineno, col, keyword)
            blocks[name] = []
            current_block = name
            continue
        if header is None and keyword != 'poly':
            raise PolySyntaxError("expected 'poly <width> <height>' first", lineno, col, keyword)

        if keyword == 'poly':
            if header is not None:
                raise PolySyntaxError("duplicate header", lineno, col, keyword)
            _expect(tokens, 3, lineno, "poly <width> <height>")
            header = (_int(tokens[1], lineno, 'width'), _int(tokens[2], lineno, 'height'))
            if header[0] < 1 or header[1] < 1:
                raise PolySyntaxError("dimensions must be positive", lineno, tokens[1][1], tokens[1][0])
        elif keyword == 'hole':
            holes.append(_parse_hole(tokens, lineno))
        elif keyword == 'cut':
            _expect(tokens, 4, lineno, "cut <v|h> <x> <y>")
            cuts.append(CutSegment(_axis(tokens[1], lineno),
                                   _int(tokens[2], lineno, 'x'), _int(tokens[3], lineno, 'y')))
        elif keyword == 'remove':
            _expect(tokens, 3, lineno, "remove <x> <y>")
            removed.append(CellCoord(_int(tokens[1], lineno, 'x'), _int(tokens[2], lineno, 'y')))
        elif keyword == 'meta':
            if len(tokens) < 3:
                raise PolySyntaxError("expected 'meta <key> <value>'", lineno, col, keyword)
            meta[tokens[1][0]] = ' '.join(t for t, _ in tokens[2:])
        else:
            raise PolySyntaxError("unknown keyword", lineno, col, keyword)

    if header is None:
        raise PolySyntaxError("missing 'poly <width> <height>' header", 0, 0, '')
    if holes and (cuts or removed):
        raise PolySyntaxError("hole lines cannot be mixed with raw cut/remove lines", 0, 0, 'hole')

    width, height = header
    poly = build(width, height, holes) if holes or not (cuts or removed) else from_cuts(width, height, cuts, removed)

    faces = _parse_grid(blocks['faces'], width, height, 'faces') if 'faces' in blocks else None
    layers = _parse_grid(blocks['layers'], width, height, 'layers') if 'layers' in blocks else None
    for name, grid in (('faces', faces), ('layers', layers)):
        if grid is not None and set(grid) != poly.cell_set:
            raise PolySyntaxError(f"{name} block does not match the present cells", 0, 0, name)
    if faces and any(not 1 <= v <= 6 for v in faces.values()):
        raise PolySyntaxError("face labels must be 1..6", 0, 0, 'faces')

    return PolyDocument(poly, faces, layers, meta)


def parse(text: str) -> Polyomino:
    return parse_document(text).polyomino


def _format_hole(hole: HoleSpec) -> str:
    if hole.kind is HoleKind.SQUARE:
        return f"hole square {hole.x} {hole.y}"
    if hole.is_slit:
        return f"hole {hole.kind.value} {hole.axis.value} {hole.x} {hole.y}"
    return f"hole {hole.kind.value} {hole.x} {hole.y} r{hole.rotation}"


def format_grid(poly: Polyomino, values: Dict[CellCoord, int]) -> List[str]:
    wide = any(v > 9 for v in values.values())
    rows = []
    for y in reversed(range(poly.height)):
        cells = [str(values[CellCoord(x, y)]) if CellCoord(x, y) in values else '.'
                 for x in range(poly.width)]
        rows.append(' '.join(cells) if wide else ''.join(cells))
    return rows


def serialize(poly: Polyomino, faces: Optional[Dict[CellCoord, int]] = None,
              layers: Optional[Dict[CellCoord, int]] = None,
              meta: Optional[Dict[str, str]] = None) -> str:
    """Canonical text form"""
    lines = [f"poly {poly.width} {poly.height}"]
    for key, value in (meta or {}).items():
        lines.append(f"meta {key} {value}")
    if poly.holes:
        lines.extend(_format_hole(h) for h in poly.holes)
    else:
        lines.extend(f"cut {s.axis.value} {s.x} {s.y}" for s in sorted(poly.cuts))
        lines.extend(f"remove {c.x} {c.y}" for c in sorted(poly.removed))
    for name, grid in (('faces', faces), ('layers', layers)):
        if grid is not None:
            lines.append(f"{name}:")
            lines.extend(f"  {row}" for row in format_grid(poly, grid))
    return '\n'.join(lines) + '\n'


def polyomino_to_dict(poly: Polyomino) -> dict:
    data = {'width': poly.width, 'height': poly.height}
    if poly.holes:
        data['holes'] = [
            {k: v for k, v in (
                ('kind', h.kind.value), ('x', h.x), ('y', h.y),
                ('axis', h.axis.value if h.axis else None),
                ('rotation', h.rotation if h.kind in (HoleKind.L, HoleKind.U) else None),
            ) if v is not None}
            for h in poly.holes
        ]
    else:
        data['cuts'] = [{'axis': s.axis.value, 'x': s.x, 'y': s.y} for s in sorted(poly.cuts)]
        data['removed'] = [[c.x, c.y] for c in sorted(poly.removed)]
    return data


def polyomino_from_dict(data: dict) -> Polyomino:
    width, height = int(data['width']), int(data['height'])
    if data.get('holes'):
        return build(width, height, [
            HoleSpec(h['kind'], int(h['x']), int(h['y']), h.get('axis'),
                     int(h.get('rotation', 0)), bool(h.get('flip', False)))
            for h in data['holes']
        ])
    return from_cuts(
        width, height,
        [(c['axis'], int(c['x']), int(c['y'])) for c in data.get('cuts', [])],
        [tuple(c) for c in data.get('removed', [])],
    )


def _labels_to_dict(values: Dict[CellCoord, int], key: str) -> List[dict]:
    return [{'x': c.x, 'y': c.y, key: v} for c, v in sorted(values.items())]


def _labels_from_dict(entries, key: str) -> Dict[CellCoord, int]:
    return {CellCoord(int(e['x']), int(e['y'])): int(e[key]) for e in entries}


def document_to_dict(doc: PolyDocument) -> dict:
    """JSON form of a document: the polyomino dict plus optional faces, layers and meta"""
    data = polyomino_to_dict(doc.polyomino)
    if doc.faces:
        data['faces'] = _labels_to_dict(doc.faces, 'face')
    if doc.layers:
        data['layers'] = _labels_to_dict(doc.layers, 'layer')
    if doc.meta:
        data['meta'] = dict(doc.meta)
    return data


def document_from_dict(data: dict) -> PolyDocument:
    if not isinstance(data, dict):
        raise PolySyntaxError("expected a JSON object", 1, 1, type(data).__name__)
    try:
        poly = polyomino_from_dict(data)
        faces = _labels_from_dict(data['faces'], 'face') if data.get('faces') else None
        layers = _labels_from_dict(data['layers'], 'layer') if data.get('layers') else None
    except KeyError as e:
        raise PolySyntaxError("missing key", 1, 1, e.args[0])
    except (TypeError, ValueError) as e:
        raise PolySyntaxError(str(e), 1, 1, 'json')
    if faces is not None and any(not 1 <= f <= 6 for f in faces.values()):
        raise PolySyntaxError("face labels must be 1..6", 1, 1, 'faces')
    meta = {str(k): str(v) for k, v in data.get('meta', {}).items()}
    return PolyDocument(poly, faces, layers, meta)


def load_document(text: str) -> PolyDocument:
    """Parse either the text format or its JSON form"""
    if text.lstrip().startswith('{'):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise PolySyntaxError(e.msg, e.lineno, e.colno, 'json')
        return document_from_dict(data)
    return parse_document(text)
