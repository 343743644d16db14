"""
Utility functions for foldlab.
This module contains helper functions used across the application.
"""

import json
import logging

import chardet

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def read_text(path):
    """Read a text file with encoding detection

    Args:
        path (str): Path to the file

    Returns:
        str: Decoded file content
    """
    with open(path, 'rb') as f:
        raw = f.read()
    encoding = chardet.detect(raw[:4096])['encoding'] or 'utf-8'
    try:
        return raw.decode(encoding)
    except (LookupError, UnicodeDecodeError):
        return raw.decode('utf-8', errors='replace')


def read_json(path):
    """Read a JSON document with encoding detection

    Args:
        path (str): Path to the file

    Returns:
        Parsed JSON value
    """
    return json.loads(read_text(path))


def format_duration(seconds):
    """Format elapsed time for log lines and reports

    Args:
        seconds (float): Elapsed seconds

    Returns:
        str: Duration with a fitting unit
    """
    if seconds < 1:
        return f"{seconds * 1000:.1f} ms"
    if seconds < 120:
        return f"{seconds:.2f} s"
    return f"{seconds / 60:.1f} min"


def setup_logging(level='WARNING'):
    """Configure root logging once for command line use

    Args:
        level (str | int): Level name or number
    """
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.WARNING)
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)
