import json

import pytest

import pmsat


def test_instance_round_trip():
    inst = pmsat.Instance(3, [[1, -2, 3], [-1, 2]])
    text = pmsat.write_dimacs(inst)
    assert pmsat.parse_dimacs(text) == inst
    assert inst.clauses == [[1, -2, 3], [-1, 2]]
    assert not inst.multiset


def test_parse_error_is_value_error():
    with pytest.raises(pmsat.ParseError, match="line 2"):
        pmsat.parse_dimacs("p cnf 2 1\n1 3 0\n")
    with pytest.raises(ValueError):
        pmsat.Instance(2, [[1, -1]])


def test_classify_and_reduce():
    inst = pmsat.Instance(3, [[1, -2, 3], [-1, 2]])
    assert "PM23SAT" not in pmsat.classify(inst)["variants"]
    out, trace = pmsat.apply_rule("gold", inst)
    assert trace["rule"] == "gold"
    assert len(trace["clause_map"]) == out.num_clauses
    assert pmsat.classify(out)["all_monotone"]
    with pytest.raises(ValueError):
        pmsat.apply_rule("ring-t3", pmsat.Instance(2, [[1, 2]]))


def test_check_reduction_reports():
    report = pmsat.check_reduction("r1", pmsat.Instance(2, [[1, 2]]))
    assert report["ok"]
    assert not report["planarity_preserved"]
    fixture = pmsat.kratochvil_fixture(0)
    assert pmsat.check_reduction("ring-e5", fixture[1])["ok"]


def test_solvers_agree():
    for seed in range(5):
        inst = pmsat.gen_dahlhaus(seed, 6)
        a = pmsat.brute_force_sat(inst)
        b = pmsat.dpll_sat(inst)
        assert (a is None) == (b is None)
    assert pmsat.dpll_sat(pmsat.Instance(2, [[1, 2], [-1, -2], [1, -2], [-1, 2]])) is None
    assert pmsat.brute_force_sat(pmsat.Instance(2, [[1, 2]])) == [-1, 2]


def test_draw_formats():
    inst = pmsat.gen_planar_monotone(3, 6)
    assert pmsat.is_planar(inst)
    drawing = json.loads(pmsat.draw(inst, "json"))
    assert len(drawing["vertices"]) == inst.num_vars + inst.num_clauses
    assert pmsat.draw(inst, "svg", normalize_ports=True).startswith("<svg")
    assert "o" in pmsat.draw(inst, "ascii")
    assert pmsat.export_dot(inst).startswith("graph")


def test_rule_names():
    assert set(pmsat.rule_names()) == {
        "gold", "boost", "e3", "ring-t3", "pad-e4", "multiset-e4", "ring-e5", "r1",
    }
