"""Restriction checks for classical root systems, Weyl groups and invariants."""

from ._core import (
    SCHEMA,
    RankError,
    UnknownCheckError,
    WeightError,
    branch,
    catalog,
    catalog_lookup,
    check_invariants,
    check_restriction,
    class_one_weights,
    injectivity_radius,
    invariants,
    omega_contains,
    root_system,
    verify,
    weyl_dim,
    weyl_order,
)

__all__ = [
    "SCHEMA",
    "RankError",
    "UnknownCheckError",
    "WeightError",
    "branch",
    "catalog",
    "catalog_lookup",
    "check_invariants",
    "check_restriction",
    "class_one_weights",
    "injectivity_radius",
    "invariants",
    "omega_contains",
    "root_system",
    "verify",
    "weyl_dim",
    "weyl_order",
]
