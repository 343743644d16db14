"""
Settings for foldlab: built-in defaults merged with the user's TOML file.
"""

import copy
import logging
import os
from pathlib import Path

import tomli

logger = logging.getLogger(__name__)

CONFIG_PATH = Path.home() / '.config' / 'foldlab' / 'settings.toml'

DEFAULT_SETTINGS = {
    'search': {
        'node_limit': 10 ** 8,
        'use_lemma_pruning': True,
        'parallel': False,
        'workers': None,
        'split_depth': 6,
    },
    'analyzer': {
        'slit1_trivial': True,
        'max_holes': 12,
        'trust_prior_work': True,
        'max_reduction_states': 4000,
    },
    'render': {
        'cell_size': 40,
        'theme': 'dark',
    },
    'logging': {
        'level': 'WARNING',
    },
}


def _merge(base, override):
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


def config_path(path=None):
    """Resolve the settings file location

    Args:
        path (str): Explicit path, wins over FOLDLAB_CONFIG and the default

    Returns:
        Path: Location of the settings file (may not exist)
    """
    if path:
        return Path(path)
    env_path = os.environ.get('FOLDLAB_CONFIG')
    if env_path:
        return Path(env_path)
    return CONFIG_PATH


def load_settings(path=None):
    """Load settings, falling back to defaults when the file is absent

    Args:
        path (str): Optional settings file to read instead of the default

    Returns:
        dict: Nested settings dict with every default key present
    """
    settings = copy.deepcopy(DEFAULT_SETTINGS)
    settings_file = config_path(path)

    if settings_file.exists():
        try:
            with open(settings_file, 'rb') as f:
                _merge(settings, tomli.load(f))
            logger.debug(f"Loaded settings from {settings_file}")
        except (OSError, tomli.TOMLDecodeError) as e:
            logger.warning(f"Ignoring unreadable settings file {settings_file}: {e}")

    env_limit = os.environ.get('FOLDLAB_NODE_LIMIT')
    if env_limit:
        try:
            settings['search']['node_limit'] = int(env_limit)
        except ValueError:
            logger.warning(f"FOLDLAB_NODE_LIMIT is not an integer: {env_limit!r}")

    return settings
