from fractions import Fraction

import pytest

from urskit.config import RunConfig, load_config
from urskit.errors import ConfigError
from urskit.utils import content_hash, emit, fraction_str, parallel_map


@pytest.fixture(autouse=True)
def _env(monkeypatch):
    monkeypatch.setenv("URSKIT_THREADS", "1")
    monkeypatch.delenv("URSKIT_LOG_LEVEL", raising=False)


def test_run_config_overrides():
    run = RunConfig.from_sources({"nmax": 5, "radius": 9}, {"nmax": 3, "radius": None})
    assert run.nmax == 3
    assert run.radius == 9
    assert run.bound is None


def test_run_config_ignores_unknown_keys():
    run = RunConfig.from_sources({"threads": 4, "log_level": "DEBUG"})
    assert run == RunConfig()


@pytest.mark.parametrize("bad", [
    {"budget": -1},
    {"tol": 2},
    {"bound": -3},
    {"format": "svg"},
])
def test_run_config_rejects(bad):
    with pytest.raises(ConfigError):
        RunConfig.from_sources({}, bad)


def test_missing_config_uses_defaults(tmp_path):
    cfg = load_config(str(tmp_path / "absent.yaml"))
    assert cfg["nmax"] == 6
    assert cfg["action"] == "integers"
    assert cfg["threads"] == 1


def test_yaml_overrides_defaults(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("action: free2\nnmax: 4\nbound: 0\n")
    cfg = load_config(str(path))
    assert cfg["action"] == "free2"
    assert cfg["nmax"] == 4
    assert cfg["bound"] == 0
    assert cfg["radius"] == 16
    run = RunConfig.from_sources(cfg)
    assert run.bound == 0


def test_env_overrides(tmp_path, monkeypatch):
    monkeypatch.setenv("URSKIT_THREADS", "3")
    monkeypatch.setenv("URSKIT_LOG_LEVEL", "DEBUG")
    cfg = load_config(str(tmp_path / "absent.yaml"))
    assert cfg["threads"] == 3
    assert cfg["log_level"] == "DEBUG"


def test_config_path_from_env(tmp_path, monkeypatch):
    path = tmp_path / "other.yaml"
    path.write_text("nmax: 9\n")
    monkeypatch.setenv("URSKIT_CONFIG", str(path))
    assert load_config()["nmax"] == 9


# ── utils ────────────────────────────────────────────────────────────────────

def test_parallel_map_keeps_order(monkeypatch):
    monkeypatch.setenv("URSKIT_THREADS", "4")
    assert parallel_map(lambda x: x * x, range(50)) == [x * x for x in range(50)]
    assert parallel_map(str, []) == []


def test_parallel_map_bad_thread_count(monkeypatch):
    monkeypatch.setenv("URSKIT_THREADS", "many")
    assert parallel_map(str, [1, 2]) == ["1", "2"]


def test_content_hash_is_stable():
    a = content_hash({"b": 1, "a": [1, 2]})
    assert a == content_hash({"a": [1, 2], "b": 1})
    assert a != content_hash({"a": [2, 1], "b": 1})
    assert len(a) == 16


def test_fraction_str():
    assert fraction_str(Fraction(6, 3)) == "2"
    assert fraction_str(Fraction(-1, 96)) == "-1/96"
    assert fraction_str(0) == "0"


def test_emit_writes_file(tmp_path):
    out = tmp_path / "nested" / "report.json"
    text = emit({"outcome": "PASS"}, str(out))
    assert out.read_text() == text + "\n"
    assert emit("digraph g {}", str(tmp_path / "g.dot"), "dot") == "digraph g {}"
