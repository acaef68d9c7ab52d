import pytest

from hopf_forest import config
from hopf_forest.combinatorics import enumerate_objects
from hopf_forest.errors import ResourceLimitError


def test_defaults():
    assert config.load_limits(environ={}) == config.Limits()


def test_config_file(tmp_path):
    path = tmp_path / "caps.cfg"
    path.write_text("# caps\nmax_perm_degree = 5\nmax_tree_degree=6  # trees\n")
    assert config.load_limits(path, environ={}) == config.Limits(6, 5)
    path.write_text("max_degree = 3\n")
    assert config.load_limits(path, environ={}) == config.Limits(3, 3)


def test_environment_wins(tmp_path):
    path = tmp_path / "caps.cfg"
    path.write_text("max_degree = 3\n")
    assert config.load_limits(path, environ={config.ENV_VAR: "9"}) == config.Limits(9, 9)


def test_bad_config(tmp_path):
    path = tmp_path / "caps.cfg"
    path.write_text("max_nodes = 3\n")
    with pytest.raises(ValueError, match="unknown config keys"):
        config.load_limits(path, environ={})
    path.write_text("just words\n")
    with pytest.raises(ValueError, match="key=value"):
        config.load_limits(path, environ={})


def test_cap_applies_to_enumeration():
    config.set_limits(config.Limits(max_tree_degree=3, max_perm_degree=2))
    assert len(enumerate_objects("perm", 2)) == 2
    with pytest.raises(ResourceLimitError):
        enumerate_objects("heap", 3)
    with pytest.raises(ResourceLimitError):
        enumerate_objects("ordered", 4)
