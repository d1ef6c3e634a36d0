"""Harmonious, R-harmonious and matched sequences in finite groups."""

from __future__ import annotations

from .constructions import brh, matched_pair, mext, r_harmonious, symmetric_harmonious
from .errors import (
    BudgetExceeded,
    CertificationError,
    HarmoniousError,
    Impossible,
    InvalidArgument,
    NotConstructed,
    UnsupportedLength,
    UnsupportedQuotient,
)
from .groups import (
    FiniteGroup,
    hall_paige_check,
    make_cyclic,
    make_dihedral,
    make_direct_product,
    make_semidirect,
)
from .groupspec import group_from_spec
from .intseq import build_k, build_matched, sigma
from .search import Status, search_harmonious, search_matched, search_r_harmonious
from .verify import is_harmonious, is_matched_pair, is_r_harmonious

__all__ = [
    "BudgetExceeded",
    "CertificationError",
    "FiniteGroup",
    "HarmoniousError",
    "Impossible",
    "InvalidArgument",
    "NotConstructed",
    "Status",
    "UnsupportedLength",
    "UnsupportedQuotient",
    "brh",
    "build_k",
    "build_matched",
    "group_from_spec",
    "hall_paige_check",
    "is_harmonious",
    "is_matched_pair",
    "is_r_harmonious",
    "make_cyclic",
    "make_dihedral",
    "make_direct_product",
    "make_semidirect",
    "matched_pair",
    "mext",
    "r_harmonious",
    "search_harmonious",
    "search_matched",
    "search_r_harmonious",
    "sigma",
    "symmetric_harmonious",
]
