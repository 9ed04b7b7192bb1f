"""Exact torsion-theory checks on finite-dimensional module categories."""

from torsionlab._core import (
    Category,
    CeilingExceeded,
    Error,
    FilterFamily,
    Module,
    NotAFilter,
    ParseError,
    RightIdeal,
    Universe,
    check_axioms,
    closure,
    cogenerator_check,
    dense_filter,
    enumerate_universe,
    filter_families,
    filter_from_class,
    right_ideals,
    roundtrip,
    run,
    sigma_member,
    torsion_member,
    verify_topology,
)

__all__ = [
    "Category",
    "CeilingExceeded",
    "Error",
    "FilterFamily",
    "Module",
    "NotAFilter",
    "ParseError",
    "RightIdeal",
    "Universe",
    "check_axioms",
    "closure",
    "cogenerator_check",
    "dense_filter",
    "enumerate_universe",
    "filter_families",
    "filter_from_class",
    "right_ideals",
    "roundtrip",
    "run",
    "sigma_member",
    "torsion_member",
    "verify_topology",
]
