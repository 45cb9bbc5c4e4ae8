import json

import pytest

from urskit.cli import COMMAND_MAP, build_parser, main


@pytest.fixture(autouse=True)
def _env(monkeypatch):
    # load_config pushes the thread cap into the environment
    monkeypatch.setenv("URSKIT_THREADS", "1")
    monkeypatch.delenv("URSKIT_CONFIG", raising=False)


def test_every_command_has_a_parser():
    parser = build_parser()
    for name in COMMAND_MAP:
        extra = ["show"] if name == "kernel" else ["check"] if name == "propa" else []
        args = parser.parse_args([name, *extra])
        assert args.command == name


def test_selftest_passes(tmp_path):
    out = tmp_path / "selftest.json"
    assert main(["selftest", "--action", "integers", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["outcome"] == "PASS"
    assert len(doc["reports"]) == 4


def test_selftest_unsaturated_is_undecided(tmp_path):
    out = tmp_path / "selftest.json"
    # radius 16 cannot saturate ten levels of the Grigorchuk ray
    assert main(["selftest", "--action", "grigorchuk", "--out", str(out)]) == 2
    doc = json.loads(out.read_text())
    assert doc["outcome"] == "UNDECIDED"
    assert doc["reports"][0]["check"] == "levels"
    assert not all(doc["reports"][0]["details"]["saturated"])


def test_norm_of_the_line(tmp_path):
    out = tmp_path / "norm.json"
    assert main(["norm", "--action", "integers", "--radius", "200", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["lower"] >= 1.99
    assert doc["sandwich_ok"]


def test_ball_as_dot(tmp_path):
    out = tmp_path / "ball.dot"
    code = main(["ball", "--action", "integers", "--radius", "2", "--format", "dot", "--out", str(out)])
    assert code == 0
    text = out.read_text()
    assert text.startswith("digraph")
    assert "doublecircle" in text


def test_ball_as_json(tmp_path):
    out = tmp_path / "ball.json"
    assert main(["ball", "--action", "two_cycle", "--radius", "1", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["radius"] == 1
    assert len(doc["vertices"]) == 2


def test_budget_is_undecided(tmp_path):
    out = tmp_path / "ball.json"
    assert main(["ball", "--action", "free2", "--radius", "8", "--budget", "100", "--out", str(out)]) == 2


def test_classes(tmp_path):
    out = tmp_path / "classes.json"
    assert main(["classes", "--action", "two_cycle", "--nmax", "3", "--radius", "6", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["sizes"] == [1, 1, 1, 1]


def test_quotient(tmp_path):
    out = tmp_path / "quotient.json"
    argv = ["quotient", "--action", "two_cycle", "--nmax", "3", "--radius", "6", "--max-len", "3",
            "--out", str(out)]
    assert main(argv) == 0


def test_propa_construct(tmp_path):
    out = tmp_path / "witness.json"
    assert main(["propa", "construct", "--action", "integers", "--n", "2", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["witness"]["n"] == 2
    # the emitted witness checks on its own
    assert main(["propa", "check", "--action", "integers", "--witness", str(out),
                 "--out", str(tmp_path / "check.json")]) == 0
    # so does the bare witness document
    bare = tmp_path / "bare.json"
    bare.write_text(json.dumps(doc["witness"]))
    assert main(["propa", "check", "--action", "integers", "--witness", str(bare),
                 "--out", str(tmp_path / "check_bare.json")]) == 0


def test_propa_small_radius_fails(tmp_path):
    out = tmp_path / "witness.json"
    argv = ["propa", "construct", "--action", "integers", "--n", "4", "--k", "4", "--out", str(out)]
    assert main(argv) == 1


def test_propa_check_needs_witness():
    assert main(["propa", "check", "--action", "integers"]) == 1


def test_invalid_flags_fail():
    assert main(["classes", "--action", "integers", "--nmax", "0"]) == 1
    assert main(["classes", "--action", "no_such_action"]) == 1


def test_urscheck(tmp_path):
    out = tmp_path / "urs.json"
    argv = ["urscheck", "--action", "two_cycle", "--nmax", "3", "--radius", "6", "--bound", "0",
            "--out", str(out)]
    assert main(argv) == 0
    assert json.loads(out.read_text())["D"] == [0, 0, 0, 0]


def test_isotropy(tmp_path):
    out = tmp_path / "isotropy.json"
    argv = ["isotropy", "--action", "two_cycle", "--nmax", "3", "--radius", "6", "--out", str(out)]
    assert main(argv) == 0
    words = {c["word"] for c in json.loads(out.read_text())["candidates"]}
    assert "a" in words


def test_kernel_show(tmp_path):
    out = tmp_path / "kernel.json"
    assert main(["kernel", "show", "--action", "integers", "--kernel", "adjacency", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["stored_width"] == 1
    assert doc["sup"] == 1.0
