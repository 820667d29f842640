import io
import json

import pytest

from lhomology.cli import run_command
from lhomology.complex import ComplexError, standard_complex
from lhomology.scx import ScxError, emit_scx, parse_scx

from conftest import corpus_params


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "tri": "a b\nb c\nc a\n",
        "square": "# a 4-cycle\na b\nb c\nc d\nd a\n",
        "b3": "vertices a b c d\na b c\na b d\na c d\nb c d\n",
        "bad": "vertices a b\na c\n",
        "empty": "vertices\n",
    }.items():
        p = tmp_path / f"{name}.scx"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def test_parse_examples():
    assert parse_scx("vertices a b c\na b c").f_vector() == (3, 3, 1)
    assert list(parse_scx("vertices\n")) == [()]
    assert parse_scx("a b\nb c\nc a").f_vector() == (3, 3)
    assert parse_scx("a b  # comment\n\n# only comment\n").f_vector() == (2, 1)


def test_parse_errors_have_positions():
    with pytest.raises(ScxError) as e:
        parse_scx("vertices a b\na  c\n")
    assert (e.value.line, e.value.column) == (2, 4)
    with pytest.raises(ScxError):
        parse_scx("a a\n")
    with pytest.raises(ScxError):
        parse_scx("a b\nvertices a b\n")
    assert issubclass(ScxError, ComplexError)


@corpus_params()
def test_round_trip(name, K):
    text = emit_scx(K)
    assert parse_scx(text) == K
    assert emit_scx(parse_scx(text)) == text


def test_lh_json(files):
    code, out, _ = run("lh", "--reduced", "--coeff", "Z", files["b3"], "--out", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["groups"] == [{"s": 2, "t": 2, "rank": 1, "torsion": []}]
    assert doc["complex"] == {"vertices": 4, "f_vector": [4, 6, 4]}
    assert doc["reduced"] is True and doc["coefficients"] == "Z"
    assert run("lh", files["b3"], "--out", "json")[1] == out


def test_compare_and_exit_codes(files):
    assert run("compare", files["tri"], files["square"], "--coeff", "Z")[0] == 0
    assert run("compare", files["tri"], files["b3"])[0] == 2
    assert run("lh", files["bad"])[0] == 1
    assert run("lh", "/nonexistent.scx")[0] == 1
    assert run("frobnicate")[0] == 1
    assert run("lh", "--coeff", "F4", files["tri"])[0] == 1
    assert run("lh", "--page", "3", files["tri"])[0] == 1


def test_check_commands(files):
    assert run("check", "ex7", "--n", "4")[0] == 0
    code, out, _ = run("check", "thm6", files["tri"])
    assert code == 0 and "literal closed form differs" in out
    assert run("check", "thm4", files["b3"], "--coeff", "F2")[0] == 0
    assert run("check", "thm11")[0] == 0


def test_construct_and_subdivide(files):
    code, out, _ = run("construct", "boundary", "--n", "2")
    assert code == 0 and parse_scx(out) == standard_complex("boundary", 2)
    code, out, _ = run("construct", "cone", files["tri"])
    assert parse_scx(out).f_vector() == (4, 6, 3)
    assert run("construct", "join", files["tri"])[0] == 1
    code, out, _ = run("subdivide", files["tri"], "--simplex", "a b")
    assert parse_scx(out).f_vector() == (4, 4)
    assert run("subdivide", files["tri"], "--simplex", "a b c")[0] == 1


def test_info_validate_homology(files):
    code, out, _ = run("info", files["b3"], "--out", "json")
    assert code == 0 and json.loads(out)["essential_dimension"] == 2
    assert run("validate", files["empty"])[0] == 0
    code, out, _ = run("homology", files["b3"], "--reduced", "--out", "json")
    assert json.loads(out)["homology"] == [{"degree": 2, "rank": 1, "torsion": []}]


def test_fuzz_and_oracle_commands(files):
    code, out, _ = run("fuzz", "--seed", "3", "--trials", "5", "--out", "json")
    assert code == 0 and json.loads(out)["passed"]
    assert run("fuzz", "--seed", "3", "--trials", "5", "--out", "json")[1] == out
    assert run("oracle-check", files["tri"], files["b3"])[0] == 0
