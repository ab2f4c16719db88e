import json

import pytest

from conftest import spec_of
from nichols_bichar.cli import SpecError, load_spec, main, spec_from_text
from nichols_bichar.expr import parse_element
from nichols_bichar.lie_closure import contains, dims, generate

M2 = {"n": 2, "conductor": 8, "exponents": [[4, 2], [2, 4]], "cap": 8}


@pytest.fixture
def m2_file(tmp_path):
    p = tmp_path / "m2.json"
    p.write_text(json.dumps(M2))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def payload(out):
    return json.loads(out)["payload"]


def test_spec_loading(tmp_path):
    s = spec_from_text(json.dumps(M2))
    assert s == spec_of(8, [[4, 2], [2, 4]])
    assert spec_from_text('{"n": 1, "conductor": 2, "exponents": [[1]]}').cap == 8


def test_spec_diagnostics():
    with pytest.raises(SpecError, match="missing field: conductor"):
        spec_from_text('{"n": 2, "exponents": [[0, 0], [0, 0]]}')
    text = '{\n  "n": 2,\n  "conductor": 4,\n  "exponents": [[0, 1], [1, "a"]]\n}'
    with pytest.raises(SpecError, match=r"^s\.json:4:\d+: exponents\[2\]\[2\] must be an integer"):
        spec_from_text(text, "s.json")
    with pytest.raises(SpecError, match=r"s\.json:1:\d+"):
        spec_from_text("{not json", "s.json")
    with pytest.raises(SpecError, match="must be a list of 2 rows"):
        spec_from_text('{"n": 2, "conductor": 4, "exponents": [[0, 1]]}')
    with pytest.raises(FileNotFoundError):
        load_spec("/nonexistent/spec.json")


def test_spec_command_examples(capsys, m2_file):
    code, out, _ = run(capsys, "lie", m2_file, "--bracket", "R", "--max-degree", "6", "--json")
    assert code == 0
    assert payload(out)["dims"] == [2, 1, 2, 0, 0, 0] and payload(out)["total"] == 5
    code, out, _ = run(capsys, "nichols-dims", m2_file, "--max-degree", "5", "--json")
    assert code == 0 and payload(out)["dims"] == [1, 2, 2, 2, 1, 0]
    code, out, _ = run(capsys, "check", m2_file, "--claim", "thm4.3", "--json")
    p = payload(out)
    assert code == 0 and p["status"] == "verified"
    assert p["details"]["branch"] == "-1" and p["details"]["dim"] == 5


def test_text_reports(capsys, m2_file):
    for argv in (
        ["info", m2_file],
        ["standard-words", m2_file, "--degree", "3"],
        ["roots", m2_file, "--max-degree", "5"],
        ["eval", m2_file, "--expr", "x1 x2 x1 x2", "--normal-form"],
        ["probe", m2_file, "--equality", "L,R", "--max-degree", "5"],
    ):
        code, out, err = run(capsys, *argv)
        assert code == 0 and out.strip() and not err


def test_info_fields(capsys, m2_file):
    _, out, _ = run(capsys, "info", m2_file, "--json")
    p = payload(out)
    assert p["connected"] and p["quantum_linear_space"] is False


def test_exit_codes(capsys, m2_file, tmp_path):
    assert run(capsys, "check", m2_file, "--claim", "lemma3.3")[0] == 2
    qls = tmp_path / "qls.json"
    qls.write_text(json.dumps({"n": 2, "conductor": 12, "exponents": [[6, 1], [11, 6]], "cap": 6}))
    code, out, _ = run(capsys, "check", str(qls), "--claim", "lemma3.8", "--words", "1;2", "--json")
    assert code == 1 and payload(out)["witness"]
    code, _, err = run(capsys, "check", m2_file, "--claim", "thm9.9")
    assert code == 64 and "invalid choice" in err
    assert run(capsys, "lie", m2_file, "--bracket", "R")[0] == 64
    assert run(capsys, "info", str(tmp_path / "missing.json"))[0] == 66
    code, _, err = run(capsys, "eval", m2_file, "--expr", "x1 +")
    assert code == 65 and "position" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2}')
    code, _, err = run(capsys, "info", str(bad))
    assert code == 65 and "missing field: conductor" in err
    code, _, err = run(capsys, "nichols-dims", m2_file, "--max-degree", "20")
    assert code == 68 and "refused" in err
    assert run(capsys, "nichols-dims", m2_file, "--max-degree", "9", "--cap", "9")[0] == 0


def test_json_payload_is_byte_stable(capsys, m2_file):
    argv = ["lie", m2_file, "--bracket", "c", "--max-degree", "5", "--basis", "--json"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    body = lambda s: s[: s.index(',"meta":')]  # noqa: E731
    assert body(a) == body(b)
    assert "timestamp" not in body(a) and "timestamp" in json.loads(a)["meta"]


@pytest.mark.parametrize("kind", ["L", "R", "c", "minus"])
def test_basis_elements_round_trip(capsys, m2_file, kind):
    s = load_spec(m2_file)
    _, out, _ = run(capsys, "lie", m2_file, "--bracket", kind, "--max-degree", "5", "--basis", "--json")
    p = payload(out)
    gs = generate(s, kind, 5)
    assert [len(p["basis"][str(d)]) for d in range(1, 6)] == dims(gs)[0][:5] == p["dims"]
    for elems in p["basis"].values():
        for text in elems:
            u = parse_element(text, s)
            assert u.to_string(s.conductor) == text
            assert contains(gs, u)
