"""Transitivity, mixing and minimality checks for dynamical systems given by
a sequence or family of maps on a finite metric space or the full shift."""

from ._transit import (
    DocumentError,
    Error,
    Ndds,
    Report,
    cross_validate,
    decide,
    equivalence_suite,
    gds_decide,
    implication_lattice,
    parse_document,
    run,
)

__all__ = [
    "DocumentError",
    "Error",
    "Ndds",
    "Report",
    "cross_validate",
    "decide",
    "equivalence_suite",
    "gds_decide",
    "implication_lattice",
    "parse_document",
    "run",
]
