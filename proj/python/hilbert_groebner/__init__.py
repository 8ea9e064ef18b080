"""Groebner bases and Hilbert series of finitely presented algebras."""

from ._core import (
    GradingError,
    HgbError,
    ParseError,
    SaturationError,
    chains,
    free_product_series,
    groebner_basis,
    hilbert_series,
    normal_word_counts,
    run,
    series_inverse,
)

__all__ = [
    "GradingError",
    "HgbError",
    "ParseError",
    "SaturationError",
    "chains",
    "free_product_series",
    "groebner_basis",
    "hilbert_series",
    "normal_word_counts",
    "run",
    "series_inverse",
]
