from src.utils.config import DEFAULT_SETTINGS, load_settings
from src.utils.utils import format_duration, read_json, read_text


def test_defaults_without_a_file(settings):
    assert settings == DEFAULT_SETTINGS
    assert settings is not DEFAULT_SETTINGS


def test_user_file_is_merged(tmp_path, monkeypatch):
    monkeypatch.delenv('FOLDLAB_NODE_LIMIT', raising=False)
    path = tmp_path / 'settings.toml'
    path.write_text("[search]\nnode_limit = 500\n\n[render]\ntheme = 'light'\n", encoding='utf-8')
    settings = load_settings(str(path))
    assert settings['search']['node_limit'] == 500
    assert settings['search']['use_lemma_pruning'] is True
    assert settings['render'] == {'cell_size': 40, 'theme': 'light'}


def test_config_env_var(tmp_path, monkeypatch):
    path = tmp_path / 'env.toml'
    path.write_text("[analyzer]\nmax_holes = 4\n", encoding='utf-8')
    monkeypatch.setenv('FOLDLAB_CONFIG', str(path))
    assert load_settings()['analyzer']['max_holes'] == 4


def test_broken_file_is_ignored(tmp_path):
    path = tmp_path / 'broken.toml'
    path.write_text("[search\n", encoding='utf-8')
    assert load_settings(str(path))['search'] == DEFAULT_SETTINGS['search']


def test_node_limit_env(settings, monkeypatch):
    monkeypatch.setenv('FOLDLAB_NODE_LIMIT', '77')
    assert load_settings()['search']['node_limit'] == 77
    monkeypatch.setenv('FOLDLAB_NODE_LIMIT', 'lots')
    assert load_settings()['search']['node_limit'] == DEFAULT_SETTINGS['search']['node_limit']


def test_read_text_detects_utf16(tmp_path):
    path = tmp_path / 'wide.poly'
    path.write_bytes("poly 1 1\nmeta note café crème brûlée\n".encode('utf-16'))
    assert read_text(str(path)).startswith("poly 1 1")


def test_read_json(tmp_path):
    path = tmp_path / 'fm.json'
    path.write_text('{"cells": []}', encoding='utf-8')
    assert read_json(str(path)) == {'cells': []}


def test_format_duration():
    assert format_duration(0.0123) == "12.3 ms"
    assert format_duration(3) == "3.00 s"
    assert format_duration(600) == "10.0 min"
