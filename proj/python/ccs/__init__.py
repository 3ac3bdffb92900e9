"""Coherent configurations, Schur rings and the degree 4p^2 scheme family."""

import json

from ._core import (
    InputError,
    Scheme,
    SearchBudgetExceeded,
    __version__,
    candidate_involutions,
    is_fusion,
    is_wl_stable,
    meet,
    paper_scheme,
    scheme_from_colors,
    scheme_from_json,
    wl_stabilize,
)
from . import _core


def tensor(scheme):
    """Intersection numbers as {rank, valencies, transpose, entries}."""
    return json.loads(_core.tensor_json(scheme))


def automorphism_group(scheme, budget=200_000):
    """{degree, order, generators}; order is an int."""
    group = json.loads(_core.automorphism_group_json(scheme, budget))
    group["order"] = int(group["order"])
    return group


def schurity(scheme, budget=200_000):
    schurian, color, size, orbit_rank = _core.schurity(scheme, budget)
    return {"schurian": schurian, "witness_color": color, "witness_size": size, "orbit_rank": orbit_rank}


def separability_audit(scheme, budget=200_000):
    return json.loads(_core.separability_audit_json(scheme, budget))


def verify(p, fusion="", lemma="", budget=200_000):
    """Runs the verification battery and returns the report as a dict."""
    return json.loads(_core.verify_json(p, fusion, lemma, budget))


__all__ = [
    "InputError",
    "Scheme",
    "SearchBudgetExceeded",
    "__version__",
    "automorphism_group",
    "candidate_involutions",
    "is_fusion",
    "is_wl_stable",
    "meet",
    "paper_scheme",
    "scheme_from_colors",
    "scheme_from_json",
    "schurity",
    "separability_audit",
    "tensor",
    "verify",
    "wl_stabilize",
]
