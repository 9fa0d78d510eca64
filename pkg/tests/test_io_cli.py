import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcat import quiver as qv
from weylcat.blocks import WeightModule, block_of, std_module
from weylcat.cli import main
from weylcat.errors import DomainError, RelationError
from weylcat.io import dumps, loads, read_module, write_module

H = Fraction(1, 2)


def test_round_trip_f0(tmp_path):
    m = std_module("F", [0])
    path = tmp_path / "f0.json"
    write_module(m, path)
    text = path.read_text()
    write_module(read_module(path), path)
    assert path.read_text() == text


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([[0, 0], [H, 0], [0, Fraction(2, 3)], [0]]))
def test_round_trip_random(seed, mu):
    block = block_of(mu)
    m = WeightModule(block, qv.random_rep(block.k, random.Random(seed)))
    assert dumps(loads(dumps(m))) == dumps(m)
    assert loads(dumps(m)) == m


def test_float_rejected():
    text = dumps(std_module("F", [0])).replace('"frac": [\n    "0"\n  ]', '"frac": [0.0]')
    with pytest.raises(DomainError, match="float"):
        loads(text)


def test_missing_edge_names_field():
    data = json.loads(dumps(std_module("F", [0])))
    del data["edges"]["1,d,0"]
    with pytest.raises(DomainError, match=r"\$\.edges\['1,d,0'\]: missing edge entry"):
        loads(json.dumps(data))


def test_syntax_error_reports_position():
    with pytest.raises(DomainError, match="line 1 column"):
        loads("{")


def test_relation_violation_rejected():
    data = json.loads(dumps(std_module("P", [0])))
    data["edges"]["1,t,1"] = [["1"]]
    with pytest.raises(RelationError):
        loads(json.dumps(data))


# --------------------------------------------------------------------------
# command line


def test_construct_and_decompose(tmp_path, capsys):
    out = tmp_path / "p0.json"
    assert main(["construct", "--kind", "P", "--mu", "0", "-n", "1", "-o", str(out)]) == 0
    assert out.exists()
    assert main(["decompose", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "indecomposable: V1 label (1,1)⁻"


def test_decompose_bad_file(tmp_path, capsys):
    data = json.loads(dumps(std_module("P", [0])))
    data["edges"]["1,t,1"] = [["1"]]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    assert main(["decompose", str(bad)]) == 1
    assert "should vanish" in capsys.readouterr().err


def test_usage_errors():
    for argv in (["frobnicate"], ["decompose"], ["catalog", "--bogus"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2


def test_decompose_sum(tmp_path, capsys):
    path = tmp_path / "sum.json"
    write_module(WeightModule(block_of([0]), qv.direct_sum(std_module("P", [0]).rep, std_module("F", [0]).rep)), path)
    assert main(["decompose", str(path)]) == 0
    out = capsys.readouterr().out
    assert "2 indecomposable summands" in out and "(1,1)⁺" in out and "(1,1)⁻" in out


def test_seeded_output_is_deterministic(capsys):
    main(["--seed", "4", "construct", "--kind", "random", "--mu", "0,0"])
    first = capsys.readouterr().out
    main(["construct", "--kind", "random", "--mu", "0,0", "--seed", "4"])
    assert capsys.readouterr().out == first


def test_localize_dual_support(tmp_path, capsys):
    l0 = tmp_path / "l0.json"
    main(["construct", "--kind", "L", "--mu", "0", "-o", str(l0)])
    assert main(["localize", str(l0), "--gamma", "t1", "--x", "1/2"]) == 0
    out = loads(capsys.readouterr().out)
    assert out.block == block_of([H]) and out.free_mult == 1
    assert main(["dual", str(l0)]) == 0
    assert loads(capsys.readouterr().out) == std_module("L", [0])
    assert main(["sp-support", str(l0), "--coset", "even", "--radius", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines and all("." not in line for line in lines)


def test_catalog_and_diagram(capsys):
    assert main(["catalog", "--type", "cuspidal", "--json"]) == 0
    entries = json.loads(capsys.readouterr().out)
    assert entries[0]["support"] == "full coset"
    assert main(["diagram", "--figure1"]) == 0
    assert capsys.readouterr().out.count("*") == 1
    assert main(["diagram"]) == 1
    assert main(["catalog", "--type", "nw-es", "--x", "2"]) == 1
