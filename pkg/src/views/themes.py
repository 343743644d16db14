"""
Colour themes for diagrams.
"""

import logging

logger = logging.getLogger(__name__)

THEMES = {
    'dark': {
        'background': '#1e1e1e',
        'cell': '#252526',
        'removed': '#1e1e1e',
        'crease': '#3d3d3d',
        'outline': '#569cd6',
        'text': '#d4d4d4',
        'faces': {
            1: '#264f78', 2: '#4e3a5e', 3: '#2d5e3a',
            4: '#6b4f2a', 5: '#5e2d2d', 6: '#2d4f5e',
        },
    },
    'light': {
        'background': '#ffffff',
        'cell': '#f3f3f3',
        'removed': '#ffffff',
        'crease': '#c8c8c8',
        'outline': '#0000ff',
        'text': '#333333',
        'faces': {
            1: '#cfe2f3', 2: '#e6d5f0', 3: '#d5ecd9',
            4: '#f6e3c5', 5: '#f3d0d0', 6: '#d0e6ec',
        },
    },
}


def get_theme(name):
    """Look up a theme by name, falling back to the dark one"""
    theme = THEMES.get(name)
    if theme is None:
        logger.warning(f"Unknown theme {name!r}, using dark")
        theme = THEMES['dark']
    return theme
