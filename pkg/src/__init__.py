"""
foldlab - cube folding of rectangular polyominoes with holes
"""

from .app import main

__version__ = "0.1.0"
