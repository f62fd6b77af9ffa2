"""Plateaued tests through second-derivative sums and the fourth spectral moment."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _backend
from .classify import plateau_order
from .cyclotomic import CycInt, as_scalar, from_coeffs, from_exponent_counts
from .gbf import as_gen
from .transforms import gwht

DIRECT = "direct"
DERIVATIVE = "derivative"
MOMENT = "moment"


@dataclass(frozen=True)
class PlateauResult:
    order: Optional[int]
    method: str
    refutation: Optional[dict] = None

    def to_json_obj(self) -> dict:
        return {"order": self.order, "method": self.method, "refutation": self.refutation}


def second_derivative_sum(f, x: int) -> CycInt:
    """sum_{a,b} zeta^(D_b D_a f(x)), from the definition (O(4^n))."""
    f = as_gen(f)
    counts = _backend.kernels.second_derivative_counts(np.ascontiguousarray(f.values), f.k, x)
    return from_exponent_counts(counts, f.k)


def second_derivative_sums(f) -> list[CycInt]:
    f = as_gen(f)
    counts = _backend.kernels.all_second_derivative_counts(np.ascontiguousarray(f.values), f.k)
    return [from_exponent_counts(row, f.k) for row in counts]


def _power_of_two_exponent(value: Optional[int]) -> Optional[int]:
    if value is None or value <= 0 or value & (value - 1):
        return None
    return value.bit_length() - 1


def plateau_by_derivatives(f) -> PlateauResult:
    f = as_gen(f)
    common = None
    for x, total in enumerate(second_derivative_sums(f)):
        e = _power_of_two_exponent(as_scalar(total))
        s = None if e is None else e - f.n
        if s is None or not 0 <= s <= f.n or (common is not None and s != common):
            return PlateauResult(None, DERIVATIVE, {"x": x, "sum": list(total.coeffs)})
        common = s
    return PlateauResult(common, DERIVATIVE)


def fourth_moment(f) -> CycInt:
    """sum_d |H_f(d)|^4, exact in the ring."""
    f = as_gen(f)
    norms = gwht(f).norm_sq()
    rows = [from_coeffs(r, f.k) for r in norms.astype(object).tolist()]
    total = from_coeffs([0] * norms.shape[1], f.k)
    for r in rows:
        total = total + r * r
    return total


def plateau_by_moment(f) -> PlateauResult:
    f = as_gen(f)
    moment = fourth_moment(f)
    e = _power_of_two_exponent(as_scalar(moment))
    s = None if e is None else e - 3 * f.n
    if s is None or not 0 <= s <= f.n:
        return PlateauResult(None, MOMENT, {"moment": [int(c) for c in moment.coeffs]})
    return PlateauResult(s, MOMENT)


def plateau_direct(f) -> PlateauResult:
    return PlateauResult(plateau_order(f), DIRECT)


def derivative_moment_identity(f) -> bool:
    """2^n * sum_x sum_{a,b} zeta^(D_b D_a f(x)) == sum_d |H_f(d)|^4."""
    f = as_gen(f)
    total = from_coeffs([0] * (1 << (f.k - 1)), f.k)
    for s in second_derivative_sums(f):
        total = total + s
    return total * (1 << f.n) == fourth_moment(f)


def all_methods(f) -> dict[str, PlateauResult]:
    return {
        DIRECT: plateau_direct(f),
        DERIVATIVE: plateau_by_derivatives(f),
        MOMENT: plateau_by_moment(f),
    }


def methods_agree(f) -> bool:
    results = all_methods(f)
    return len({r.order for r in results.values()}) == 1
