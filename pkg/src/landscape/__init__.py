"""Exact spectral analysis of generalized Boolean functions F_2^n -> Z_{2^k}.

Spectra live in Z[zeta_{2^k}] and are handled as integer coefficient vectors,
so every classification (landscape levels, plateau order, regularity, component
witnesses, moment tests) is decided without floating point.
"""

from . import _backend
from .classify import (
    LandscapeProfile,
    RegularityReport,
    SpectrumLevel,
    is_gbent,
    landscape_profile,
    plateau_order,
    regularity,
)
from .cyclotomic import CycInt
from .gbf import BoolFn, GenBoolFn
from .transforms import gwht, wht

__version__ = "0.1.0"


def backend() -> str:
    """Name of the active kernel backend ("cython" or "python")."""
    return _backend.name


__all__ = [
    "BoolFn",
    "CycInt",
    "GenBoolFn",
    "LandscapeProfile",
    "RegularityReport",
    "SpectrumLevel",
    "backend",
    "gwht",
    "is_gbent",
    "landscape_profile",
    "plateau_order",
    "regularity",
    "wht",
]
