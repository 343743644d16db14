"""
Diagrams of polyominoes with their face labels: ASCII boxes for the terminal
and SVG drawn with QPainter onto a QSvgGenerator.
"""

import logging
import os
from typing import Dict, Optional

from PyQt6.QtCore import QBuffer, QByteArray, QIODevice, QRectF, QSize, Qt
from PyQt6.QtGui import QColor, QFont, QGuiApplication, QPainter, QPen

from ..model.grid import CellCoord, CutSegment, H, Polyomino, V
from .themes import get_theme

logger = logging.getLogger(__name__)

_app = None


def _edge_drawn(poly: Polyomino, seg: CutSegment) -> bool:
    """Outline edges: the outer boundary, hole rims and cuts"""
    a, b = seg.cells
    present_a, present_b = a in poly.cell_set, b in poly.cell_set
    if present_a != present_b:
        return True
    return present_a and seg in poly.cuts


def render_ascii(poly: Polyomino, faces: Optional[Dict[CellCoord, int]] = None) -> str:
    """Box drawing of the grid, top row first; removed cells are hatched"""
    lines = []
    for y in range(poly.height, -1, -1):
        row = []
        for x in range(poly.width + 1):
            touching = [H(x - 1, y), H(x, y), V(x, y - 1), V(x, y)]
            row.append('+' if any(_edge_drawn(poly, s) for s in touching) else ' ')
            if x < poly.width:
                row.append('---' if _edge_drawn(poly, H(x, y)) else '   ')
        lines.append(''.join(row).rstrip())
        if y == 0:
            break
        row = []
        cy = y - 1
        for x in range(poly.width + 1):
            row.append('|' if _edge_drawn(poly, V(x, cy)) else ' ')
            if x < poly.width:
                cell = CellCoord(x, cy)
                if cell not in poly.cell_set:
                    row.append('///')
                elif faces and cell in faces:
                    row.append(f" {faces[cell]} ")
                else:
                    row.append('   ')
        lines.append(''.join(row).rstrip())
    return '\n'.join(lines) + '\n'


def _ensure_app():
    global _app
    app = QGuiApplication.instance()
    if app is None:
        os.environ.setdefault('QT_QPA_PLATFORM', 'offscreen')
        _app = app = QGuiApplication([])
        logger.debug("Started offscreen QGuiApplication for SVG output")
    return app


def render_svg(poly: Polyomino, faces: Optional[Dict[CellCoord, int]] = None,
               cell_size: int = 40, theme: str = 'dark', title: Optional[str] = None) -> str:
    """SVG document of the polyomino, cells tinted by face label"""
    from PyQt6.QtSvg import QSvgGenerator

    _ensure_app()
    colors = get_theme(theme)
    margin = cell_size // 2
    width = poly.width * cell_size + 2 * margin
    height = poly.height * cell_size + 2 * margin

    def point(x, y):
        return margin + x * cell_size, margin + (poly.height - y) * cell_size

    data = QByteArray()
    buffer = QBuffer(data)
    buffer.open(QIODevice.OpenModeFlag.WriteOnly)
    generator = QSvgGenerator()
    generator.setOutputDevice(buffer)
    generator.setSize(QSize(width, height))
    generator.setViewBox(QRectF(0, 0, width, height))
    generator.setTitle(title or str(poly))
    generator.setDescription('foldlab diagram')

    painter = QPainter(generator)
    try:
        painter.fillRect(QRectF(0, 0, width, height), QColor(colors['background']))
        font = QFont()
        font.setPixelSize(max(8, cell_size // 2))
        painter.setFont(font)

        for y in range(poly.height):
            for x in range(poly.width):
                cell = CellCoord(x, y)
                left, top = point(x, y + 1)
                rect = QRectF(left, top, cell_size, cell_size)
                if cell not in poly.cell_set:
                    painter.fillRect(rect, QColor(colors['removed']))
                    continue
                face = faces.get(cell) if faces else None
                painter.fillRect(rect, QColor(colors['faces'].get(face, colors['cell'])))
                if face is not None:
                    painter.setPen(QColor(colors['text']))
                    painter.drawText(rect, int(Qt.AlignmentFlag.AlignCenter), str(face))

        crease_pen = QPen(QColor(colors['crease']))
        crease_pen.setWidthF(1.0)
        outline_pen = QPen(QColor(colors['outline']))
        outline_pen.setWidthF(max(2.0, cell_size / 12))
        segments = [V(x, y) for x in range(poly.width + 1) for y in range(poly.height)]
        segments += [H(x, y) for x in range(poly.width) for y in range(poly.height + 1)]
        # creases first so outlines are drawn over them
        for drawn in (False, True):
            painter.setPen(outline_pen if drawn else crease_pen)
            for seg in segments:
                if _edge_drawn(poly, seg) is not drawn:
                    continue
                (ax, ay), (bx, by) = seg.endpoints
                x1, y1 = point(ax, ay)
                x2, y2 = point(bx, by)
                painter.drawLine(x1, y1, x2, y2)
    finally:
        painter.end()
    buffer.close()
    return bytes(data).decode('utf-8')
