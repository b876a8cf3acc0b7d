"""Planar monotone SAT reductions, verification and orthogonal drawings."""

import json

from ._pmsat import (
    CapExceeded,
    Instance,
    ParseError,
    brute_force_sat,
    dpll_sat,
    draw,
    export_dot,
    gen_dahlhaus,
    gen_planar_monotone,
    is_planar,
    kratochvil_fixture,
    kratochvil_fixture_count,
    parse_dimacs,
    rule_names,
    write_dimacs,
)
from . import _pmsat

__all__ = [
    "CapExceeded",
    "Instance",
    "ParseError",
    "apply_rule",
    "brute_force_sat",
    "check_reduction",
    "classify",
    "dpll_sat",
    "draw",
    "export_dot",
    "gen_dahlhaus",
    "gen_planar_monotone",
    "is_planar",
    "kratochvil_fixture",
    "kratochvil_fixture_count",
    "parse_dimacs",
    "rule_names",
    "write_dimacs",
]


def classify(instance):
    """Variant profile as a dict (same fields as `pmsat classify --json`)."""
    return json.loads(_pmsat.classify_json(instance))


def apply_rule(rule, instance, variable=None, clause_index=None):
    """Apply one reduction; returns (output instance, trace dict)."""
    out, trace = _pmsat.apply_rule_json(rule, instance, variable, clause_index)
    return out, json.loads(trace)


def check_reduction(rule, instance, cap=25):
    """Apply a reduction and check its claims; returns the report dict."""
    return json.loads(_pmsat.check_reduction_json(rule, instance, cap))
