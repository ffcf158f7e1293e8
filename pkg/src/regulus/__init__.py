"""Exact q-series engine and congruence verifier for regular multipartitions."""

from .series import (
    ZZ,
    CoefficientRing,
    EtaQuotientSpec,
    TruncatedSeries,
    Zmod,
    dilate,
    eta_quotient,
    euler_E,
    extract_progression,
    invert,
    mul,
    power,
    reduce_mod,
    regular_quotient,
    series,
)

__all__ = [
    "ZZ",
    "CoefficientRing",
    "EtaQuotientSpec",
    "TruncatedSeries",
    "Zmod",
    "dilate",
    "eta_quotient",
    "euler_E",
    "extract_progression",
    "invert",
    "mul",
    "power",
    "reduce_mod",
    "regular_quotient",
    "series",
]

__version__ = "0.1.0"
