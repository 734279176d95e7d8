import io
import json

import pytest

from s3quotient.cli import run


def _run(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_group_json():
    code, out = _run("group", "binary-tetrahedral", "--json")
    assert code == 0
    assert json.loads(out)["order"] == 24


def test_molien_text():
    code, out = _run("molien", "cyclic", "--n", "4", "--max-degree", "6")
    assert code == 0
    rows = [line.split() for line in out.splitlines()[2:]]
    assert rows[0] == ["0", "1"]
    assert len(rows) == 7


@pytest.mark.parametrize("argv", [
    ["molien", "cyclic"],
    ["molien", "cyclic", "--n", "7"],
    ["group", "binary-octahedral", "--n", "3"],
    ["molien", "binary-icosahedral", "--max-degree", "80"],
    ["verify", "klein"],
    ["group", "binary-octahedral", "--bogus"],
    ["decompose", "binary-tetrahedral", "--left", "nope"],
])
def test_usage_errors(argv):
    assert _run(*argv)[0] == 2


def test_decompose_text():
    code, out = _run("decompose", "binary-icosahedral")
    assert code == 0
    last = out.splitlines()[-1]
    assert "NormalizationConstant" in last and "25/84" in last and "~ 0.297619" in last


def test_multiplet_json():
    code, out = _run("multiplet", "binary-octahedral", "--json")
    data = json.loads(out)
    assert code == 0 and data["twoJ"] == 6 and len(data["components"]) == 7


def test_relations_json():
    code, out = _run("relations", "cyclic", "--n", "4", "--max-degree", "12", "--json")
    data = json.loads(out)
    assert code == 0 and data["components"]


def test_invariants_text():
    code, out = _run("invariants", "binary-octahedral", "--max-degree", "24")
    assert code == 0
    assert "syzygy" in out


def test_verify_json_schema(tmp_path):
    path = tmp_path / "report.json"
    code, out = _run("verify", "binary-tetrahedral", "--json", "--out", str(path))
    assert code == 0 and out == ""
    data = json.loads(path.read_text())
    assert data["group"] == "binary-tetrahedral"
    assert data["status"] == "pass"
    for claim in data["claims"]:
        assert set(claim) == {"id", "quote", "status", "witness"}


def test_verify_exit_code_on_failure(monkeypatch):
    from s3quotient import cli
    from s3quotient.algebra import ClaimReport

    monkeypatch.setattr(cli, "verify_claims",
                        lambda G, d: [ClaimReport(G.label, "x", "forced failure", False)])
    assert _run("verify", "cyclic", "--n", "2")[0] == 1


def test_certification_exit_code(monkeypatch):
    from s3quotient import cli
    from s3quotient.groups import CertificationError

    def boom(G, d):
        raise CertificationError("synthetic")

    monkeypatch.setattr(cli, "verify_claims", boom)
    assert _run("verify", "cyclic", "--n", "2")[0] == 3
