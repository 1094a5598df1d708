"""Twisted spin bordism in degrees <= 7 via Ext over A(1)."""

import json

from . import _core
from ._core import (
    DataError,
    InputError,
    InvariantError,
    RangeError,
    a1_degrees,
    expected_groups,
    group_names,
    invariants,
    manifold_names,
    sq,
)

__all__ = [
    "DataError",
    "InputError",
    "InvariantError",
    "RangeError",
    "a1_degrees",
    "chart",
    "expected_chart",
    "expected_groups",
    "group_names",
    "invariants",
    "manifold_names",
    "report",
    "report_text",
    "sq",
]


def _groups(groups):
    return [groups] if isinstance(groups, str) else list(groups)


def report(groups="all", window=(6, 7), no_odd_torsion=True):
    """Full pipeline report as a dict."""
    return json.loads(_core.report_json(_groups(groups), tuple(window), no_odd_torsion))


def report_text(groups="all", window=(6, 7)):
    return _core.report_text(_groups(groups), tuple(window))


def chart(group, window=(6, 7)):
    """Computed, colored chart as a dict with dots and edges."""
    return json.loads(_core.computed_chart(group, "json", tuple(window)))


def expected_chart(group):
    return json.loads(_core.expected_chart(group, "json"))
