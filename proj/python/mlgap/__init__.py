"""Exact Markov values, gap constants, covering certificates and dimension
estimates for the Markov and Lagrange spectra."""

from ._mlgap import (
    cli,
    estimate_dimension,
    gap_constant,
    markov_value,
    pressure_bracket,
    report,
    verify_case,
)

__all__ = [
    "cli",
    "estimate_dimension",
    "gap_constant",
    "markov_value",
    "pressure_bracket",
    "report",
    "verify_case",
]
