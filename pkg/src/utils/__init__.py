"""
Utility functions for foldlab.
"""

from .config import DEFAULT_SETTINGS, load_settings
from .errors import FoldlabError
from .utils import format_duration, read_json, read_text, setup_logging
