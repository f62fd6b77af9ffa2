"""Exact arithmetic in Z[zeta] for zeta a primitive 2^k-th root of unity.

Elements are stored on the power basis 1, zeta, ..., zeta^(h-1) with
h = 2^(k-1); the single reduction rule is zeta^h = -1, so multiplication is
negacyclic convolution and equality is coefficient equality.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class LevelMismatch(ValueError):
    """Raised when combining elements of rings with different k."""


@dataclass(frozen=True)
class CycInt:
    level_exp: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.level_exp < 1:
            raise ValueError("level_exp must be >= 1")
        if len(self.coeffs) != 1 << (self.level_exp - 1):
            raise ValueError(
                f"expected {1 << (self.level_exp - 1)} coefficients, got {len(self.coeffs)}"
            )

    @property
    def half(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "CycInt") -> None:
        if self.level_exp != other.level_exp:
            raise LevelMismatch(f"k={self.level_exp} vs k={other.level_exp}")

    def __add__(self, other):
        if isinstance(other, int):
            other = scalar(other, self.level_exp)
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        if isinstance(other, int):
            other = scalar(other, self.level_exp)
        return add(self, neg(other))

    def __rsub__(self, other):
        return scalar(other, self.level_exp) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.level_exp, tuple(other * c for c in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_complex(self) -> complex:
        """Floating-point value, for display only."""
        z = cmath.exp(2j * cmath.pi / (1 << self.level_exp))
        return sum(c * z**j for j, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            elif j == 1:
                terms.append(f"{c}·ζ")
            else:
                terms.append(f"{c}·ζ^{j}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def zero(k: int) -> CycInt:
    return CycInt(k, (0,) * (1 << (k - 1)))


def scalar(c: int, k: int) -> CycInt:
    return CycInt(k, (c,) + (0,) * ((1 << (k - 1)) - 1))


def from_coeffs(coeffs: Iterable[int], k: int) -> CycInt:
    return CycInt(k, tuple(int(c) for c in coeffs))


def add(a: CycInt, b: CycInt) -> CycInt:
    a._check(b)
    return CycInt(a.level_exp, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def neg(a: CycInt) -> CycInt:
    return CycInt(a.level_exp, tuple(-x for x in a.coeffs))


def mul(a: CycInt, b: CycInt) -> CycInt:
    a._check(b)
    h = a.half
    out = [0] * h
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            idx = i + j
            if idx >= h:
                out[idx - h] -= x * y
            else:
                out[idx] += x * y
    return CycInt(a.level_exp, tuple(out))


def monomial(j: int, k: int) -> CycInt:
    """zeta^j for 0 <= j < 2^k."""
    q = 1 << k
    if not 0 <= j < q:
        raise ValueError(f"exponent {j} outside [0, {q})")
    h = q >> 1
    coeffs = [0] * h
    if j < h:
        coeffs[j] = 1
    else:
        coeffs[j - h] = -1
    return CycInt(k, tuple(coeffs))


def conj(a: CycInt) -> CycInt:
    # zeta^j -> zeta^-j = -zeta^(h-j) for j >= 1
    h = a.half
    out = [0] * h
    out[0] = a.coeffs[0]
    for j in range(1, h):
        out[h - j] = -a.coeffs[j]
    return CycInt(a.level_exp, tuple(out))


def norm_sq(a: CycInt) -> CycInt:
    return mul(a, conj(a))


def as_scalar(a: CycInt) -> Optional[int]:
    if any(a.coeffs[1:]):
        return None
    return a.coeffs[0]


def sqrt2_element(k: int) -> CycInt:
    """sqrt(2) = zeta_8 - zeta_8^3, available for k >= 3."""
    if k < 3:
        raise ValueError("sqrt(2) lies in Q(zeta_{2^k}) only for k >= 3")
    e = 1 << (k - 3)
    return add(monomial(e, k), neg(monomial(3 * e, k)))


def ring_sum(values: Sequence[CycInt], k: int) -> CycInt:
    h = 1 << (k - 1)
    acc = [0] * h
    for v in values:
        if v.level_exp != k:
            raise LevelMismatch(f"k={v.level_exp} vs k={k}")
        for j, c in enumerate(v.coeffs):
            acc[j] += c
    return CycInt(k, tuple(acc))


def from_exponent_counts(counts: Sequence[int], k: int) -> CycInt:
    """Sum_j counts[j] * zeta^j for a histogram over Z_{2^k}."""
    h = 1 << (k - 1)
    return CycInt(k, tuple(int(counts[j]) - int(counts[j + h]) for j in range(h)))


def gauss_sum(k: int) -> CycInt:
    q = 1 << k
    counts = [0] * q
    for i in range(q):
        counts[i * i % q] += 1
    return from_exponent_counts(counts, k)


# -- batched forms on coefficient arrays of shape (..., h) -----------------

def conj_array(a):
    out = a.copy()
    out[..., 1:] = -a[..., :0:-1]
    return out


def mul_array(a, b):
    """Negacyclic product of coefficient arrays along the last axis."""
    import numpy as np

    h = a.shape[-1]
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.result_type(a, b))
    for i in range(h):
        ai = a[..., i : i + 1]
        if not ai.any():
            continue
        # zeta^i * b: shift right by i with sign flip on wrap
        shifted = b.copy()
        if i:
            shifted[..., i:] = b[..., : h - i]
            shifted[..., :i] = -b[..., h - i :]
        out = out + ai * shifted
    return out


def norm_sq_array(a):
    return mul_array(a, conj_array(a))
