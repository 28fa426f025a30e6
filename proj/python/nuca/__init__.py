"""Structural analysis of one-dimensional non-uniform cellular automata."""

import json as _json

from _nuca import (  # noqa: F401
    Configuration,
    Distribution,
    RuleSet,
    cantor_distance,
    debruijn_dot,
    is_pattern_surjective,
    iterate,
    load_rule_set,
    parse_configuration,
    parse_distribution,
    parse_rule_set,
    partial_charge,
    space_time_rows,
    step,
)
from _nuca import (
    conservation_report_json as _conservation_json,
    dynamics_report_json as _dynamics_json,
    injectivity_report_json as _injectivity_json,
    surjectivity_report_json as _surjectivity_json,
)


def surjectivity_report(rule_set, dist):
    return _json.loads(_surjectivity_json(rule_set, dist))


def injectivity_report(rule_set, dist):
    return _json.loads(_injectivity_json(rule_set, dist))


def conservation_report(rule_set, dist):
    return _json.loads(_conservation_json(rule_set, dist))


def dynamics_report(rule_set, dist, n_max=-1):
    return _json.loads(_dynamics_json(rule_set, dist, n_max))
