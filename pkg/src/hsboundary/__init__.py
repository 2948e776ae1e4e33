"""Boundary degeneration and weight avoidance for genus-2 Hilbert-Siegel local systems."""

from .avoidance import (
    AvoidanceReport,
    check_avoids,
    closed_form_avoidance,
    profile_avoidance,
    weights01_present,
)
from .errors import (
    DimensionMismatch,
    EmptyEmbeddingSet,
    InvalidBeta,
    NotDominant,
    ParityViolation,
    SizeLimit,
    UnsupportedField,
)
from .lattice import HighestWeight, classify_weight, kostant_parallel_presentations, make_weight
from .weyl import KLINGEN, SIEGEL

__all__ = [
    "AvoidanceReport",
    "DimensionMismatch",
    "EmptyEmbeddingSet",
    "HighestWeight",
    "InvalidBeta",
    "KLINGEN",
    "NotDominant",
    "ParityViolation",
    "SIEGEL",
    "SizeLimit",
    "UnsupportedField",
    "check_avoids",
    "classify_weight",
    "closed_form_avoidance",
    "kostant_parallel_presentations",
    "make_weight",
    "profile_avoidance",
    "weights01_present",
]
