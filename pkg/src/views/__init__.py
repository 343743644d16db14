"""
Views package for foldlab: terminal and SVG diagrams
"""

from .render import render_ascii, render_svg
from .themes import THEMES, get_theme

__all__ = ['render_ascii', 'render_svg', 'THEMES', 'get_theme']
