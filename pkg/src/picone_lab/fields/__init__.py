"""Test fields, nonlinearities and hypothesis checkers."""

from picone_lab.fields.admissibility import admissible_pair, default_samples
from picone_lab.fields.catalog import CATALOG, boundary_kind, catalog, product2d, resolve_field
from picone_lab.fields.nonlinearity import (
    PROFILES,
    NonlinearityProfile,
    nonlinearity_C1_gap,
    nonlinearity_C2_check,
    resolve_profile,
)

__all__ = [
    "CATALOG",
    "PROFILES",
    "NonlinearityProfile",
    "admissible_pair",
    "boundary_kind",
    "catalog",
    "default_samples",
    "nonlinearity_C1_gap",
    "nonlinearity_C2_check",
    "product2d",
    "resolve_field",
    "resolve_profile",
]
