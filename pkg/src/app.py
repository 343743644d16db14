"""
Command line front end for foldlab.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from .model.facemapping import Facemapping, faces_from_json
from .model.polyfile import PolyDocument, document_to_dict, load_document, serialize
from .tools.analyzer import CooperationSweep, FoldClassifier
from .tools.constructions import FixtureVerifier, fixture, generate_staircase, staircase_labels
from .tools.engine import covered_faces, is_consistent
from .tools.search import FacemappingSearch, SearchConfig, infer_orientations
from .utils.config import load_settings
from .utils.errors import (
    FacemappingMismatch, GuardExceeded, InconsistentEdge, NodeLimitExceeded, PolyominoError,
    PolySyntaxError, UnknownFixture, WrongFamily,
)
from .utils.utils import read_json, read_text, setup_logging
from .views.render import render_ascii, render_svg

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 64
EXIT_DATA = 65


class FoldlabArgumentParser(argparse.ArgumentParser):
    """Argument errors exit with the usage code instead of argparse's 2"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(path):
    return load_document(read_text(path))


def _dump(data):
    print(json.dumps(data, sort_keys=True))


def _search_config(settings, args, **overrides):
    return SearchConfig.from_settings(
        settings,
        node_limit=getattr(args, 'node_limit', None),
        parallel=True if getattr(args, 'parallel', False) else None,
        workers=getattr(args, 'workers', None),
        **overrides,
    )


def cmd_check(args, settings):
    doc = _load(args.file)
    classifier = FoldClassifier(settings, _search_config(settings, args))
    verdict = classifier.classify(doc.polyomino)
    if args.json:
        _dump(verdict.to_dict())
    else:
        print(f"{verdict.status.value}: {verdict.reason}")
        if verdict.provenance:
            print(f"provenance: {verdict.provenance}")
        if verdict.detail:
            print(verdict.detail)
        if verdict.witness is not None:
            print(render_ascii(doc.polyomino, verdict.witness.faces()), end='')
    return verdict.exit_code


def cmd_search(args, settings):
    doc = _load(args.file)
    config = _search_config(
        settings, args,
        enumerate_all=args.all,
        use_lemma_pruning=False if args.no_prune else None,
    )
    search = FacemappingSearch(doc.polyomino, config)
    found = 0
    try:
        for fm in search:
            found += 1
            _dump({'onto': len(covered_faces(fm)) == 6, 'cells': fm.to_json()})
    except NodeLimitExceeded as e:
        logger.error(f"{args.file}: {e} after {found} facemappings")
        return EXIT_UNDECIDED
    logger.info(f"{found} facemappings, {search.stats.nodes} nodes")
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_cooperate(args, settings):
    doc = _load(args.file)
    sweep = CooperationSweep(FoldClassifier(settings, _search_config(settings, args)))
    sweep.progress_updated.connect(lambda done, total: logger.debug(f"Subset {done}/{total}"))
    report = sweep.run(doc.polyomino, args.max_set_size, args.exhaustive)
    if args.json:
        _dump(report.to_dict())
    else:
        print(report)
    if report.minimal_sets:
        return EXIT_OK
    return EXIT_UNDECIDED if report.undecided_sets else EXIT_NEGATIVE


def cmd_generate(args, settings, parser):
    if args.kind == 'family':
        if args.name != 'staircase':
            parser.error(f"unknown family {args.name!r}, only 'staircase' can be generated")
        if args.k is None or args.k < 1:
            parser.error("--k must be a positive integer")
        doc = PolyDocument(generate_staircase(args.k),
                           staircase_labels(args.k) if args.witness else None,
                           meta={'family': 'staircase', 'k': str(args.k)})
    else:
        f = fixture(args.name)
        meta = {'id': f.fixture_id}
        if f.family:
            meta['family'] = f.family
        doc = PolyDocument(f.polyomino,
                           f.face_labels if args.witness and f.face_labels else None,
                           f.layer_labels if args.witness else None,
                           meta)
    if args.json:
        _dump(document_to_dict(doc))
    else:
        print(serialize(doc.polyomino, doc.faces, doc.layers, doc.meta), end='')
    return EXIT_OK


def _render_faces(doc, facemapping_path):
    poly = doc.polyomino
    if facemapping_path:
        data = read_json(facemapping_path)
        entries = data.get('cells', data) if isinstance(data, dict) else data
        if entries and all('corners' in e for e in entries):
            fm = Facemapping.from_json(entries)
            if not is_consistent(poly, fm):
                raise FacemappingMismatch(f"{facemapping_path} is not a consistent facemapping of {poly}")
            return fm.faces()
        faces = faces_from_json(entries)
    else:
        faces = doc.faces
    if faces is None:
        return None
    if set(faces) != poly.cell_set:
        raise FacemappingMismatch(f"face labels cover {len(faces)} cells, the polyomino has {len(poly.cells)}")
    if infer_orientations(poly, faces) is None:
        raise FacemappingMismatch("face labels admit no consistent facemapping")
    return faces


def cmd_render(args, settings):
    doc = _load(args.file)
    faces = _render_faces(doc, args.facemapping)
    if args.format == 'ascii':
        text = render_ascii(doc.polyomino, faces)
    else:
        render = settings.get('render', {})
        text = render_svg(doc.polyomino, faces,
                          cell_size=args.cell_size or render.get('cell_size', 40),
                          theme=render.get('theme', 'dark'),
                          title=Path(args.file).name)
    if args.output:
        Path(args.output).write_text(text, encoding='utf-8')
        logger.info(f"Wrote {args.output}")
    else:
        print(text, end='' if text.endswith('\n') else '\n')
    return EXIT_OK


def cmd_verify_fixtures(args, settings):
    selected = [fixture(i) for i in args.ids] if args.ids else None
    verifier = FixtureVerifier(SearchConfig.from_settings(settings))
    verifier.progress_updated.connect(lambda done, total: logger.debug(f"Fixture {done}/{total}"))
    reports = verifier.run(selected)
    if args.json:
        _dump([r.to_dict() for r in reports])
    else:
        for report in reports:
            print(report)
        print(f"{sum(r.passed for r in reports)}/{len(reports)} fixtures verified")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_NEGATIVE


def build_parser():
    common = FoldlabArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0, help='more logging (-vv for debug)')
    common.add_argument('--config', help='settings file (default ~/.config/foldlab/settings.toml)')
    common.add_argument('--json', action='store_true', help='machine readable output')

    limits = FoldlabArgumentParser(add_help=False)
    limits.add_argument('--node-limit', type=int, help='maximum search nodes')
    limits.add_argument('--parallel', action='store_true', help='split the search over worker processes')
    limits.add_argument('--workers', type=int, help='worker processes for --parallel')

    parser = FoldlabArgumentParser(prog='foldlab', description='Cube folding of polyominoes with holes')
    commands = parser.add_subparsers(dest='command', parser_class=FoldlabArgumentParser)
    commands.required = True

    check = commands.add_parser('check', parents=[common, limits], help='classify a polyomino')
    check.add_argument('file')

    search = commands.add_parser('search', parents=[common, limits], help='search for facemappings')
    search.add_argument('file')
    search.add_argument('--all', action='store_true', help='every consistent facemapping, not just the first onto one')
    search.add_argument('--no-prune', action='store_true', help='disable crease-rule pruning')

    cooperate = commands.add_parser('cooperate', parents=[common, limits], help='minimally cooperating hole sets')
    cooperate.add_argument('file')
    cooperate.add_argument('--max-set-size', type=int)
    cooperate.add_argument('--exhaustive', action='store_true', help='evaluate supersets of cooperating sets too')

    generate = commands.add_parser('generate', parents=[common], help='print a generated or stored polyomino')
    generate.add_argument('kind', choices=['family', 'fixture'])
    generate.add_argument('name')
    generate.add_argument('--k', type=int)
    generate.add_argument('--witness', action='store_true', help='include the face labels')

    render = commands.add_parser('render', parents=[common], help='draw a polyomino')
    render.add_argument('file')
    render.add_argument('--facemapping', help='facemapping JSON as written by search')
    render.add_argument('--format', choices=['ascii', 'svg'], default='ascii')
    render.add_argument('--output', '-o')
    render.add_argument('--cell-size', type=int)

    verify = commands.add_parser('verify-fixtures', parents=[common], help='check the stored witness foldings')
    verify.add_argument('ids', nargs='*')

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    settings = load_settings(args.config)
    if args.verbose >= 2:
        setup_logging('DEBUG')
    elif args.verbose == 1:
        setup_logging('INFO')
    else:
        setup_logging(settings.get('logging', {}).get('level', 'WARNING'))

    handlers = {
        'check': cmd_check,
        'search': cmd_search,
        'cooperate': cmd_cooperate,
        'render': cmd_render,
        'verify-fixtures': cmd_verify_fixtures,
    }
    try:
        if args.command == 'generate':
            return cmd_generate(args, settings, parser)
        return handlers[args.command](args, settings)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except (PolySyntaxError, PolyominoError, UnknownFixture, WrongFamily, OSError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except (FacemappingMismatch, InconsistentEdge) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_DATA
    except (NodeLimitExceeded, GuardExceeded) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_UNDECIDED


if __name__ == "__main__":
    sys.exit(main())
