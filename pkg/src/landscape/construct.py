"""Generators of landscape functions.

New variables are always appended as the high-order coordinates: a function
h(x, y) with x in F_2^r, y in F_2^s is stored at index x + 2^r * y.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .classify import landscape_profile, plateau_order, plateau_order_of
from .gbf import BoolFn, DimensionError, GenBoolFn, as_gen, parity
from .transforms import wht


class ConstructionError(ValueError):
    """A precondition of a construction is not met."""


class VerificationError(AssertionError):
    """A construction's output does not have the claimed spectrum."""


def _concat_xy(fx: np.ndarray, gy: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Broadcast x-indexed and y-indexed tables onto index x + 2^r y."""
    return np.tile(fx, gy.size), np.repeat(gy, fx.size)


def is_bent(g) -> bool:
    g = as_gen(g)
    if g.k != 1 or g.n % 2:
        return False
    return bool(np.all(np.abs(wht(g).values) == 1 << (g.n // 2)))


# -- affine lift ----------------------------------------------------------

def affine_lift(f, a_bit: int) -> GenBoolFn:
    """g(x, y) = f(x) + 2^(k-1) a y on n+1 variables."""
    f = as_gen(f)
    if a_bit not in (0, 1):
        raise ConstructionError("a_bit must be 0 or 1")
    top = (f.values + (1 << (f.k - 1)) * a_bit) % f.q
    return GenBoolFn(f.n + 1, f.k, np.concatenate([f.values, top]))


# -- indirect sums --------------------------------------------------------

def indirect_sum_boolean(f1, f2, g1, g2) -> BoolFn:
    """h(x,y) = f1(x) + g1(y) + (f1(x) + f2(x))(g1(y) + g2(y)) over F_2."""
    f1, f2, g1, g2 = (as_gen(t) for t in (f1, f2, g1, g2))
    if any(t.k != 1 for t in (f1, f2, g1, g2)):
        raise ConstructionError("indirect_sum_boolean takes Boolean functions")
    if f1.n != f2.n or g1.n != g2.n:
        raise DimensionError("f-pair and g-pair must each share a dimension")
    a1, y1 = _concat_xy(f1.values, g1.values)
    a2, y2 = _concat_xy(f2.values, g2.values)
    return BoolFn(f1.n + g1.n, a1 ^ y1 ^ ((a1 ^ a2) & (y1 ^ y2)))


@dataclass(frozen=True)
class IndirectSumSpec:
    f1: GenBoolFn
    f2: GenBoolFn
    g1: BoolFn
    g2: BoolFn

    def __post_init__(self):
        object.__setattr__(self, "f1", as_gen(self.f1))
        object.__setattr__(self, "f2", as_gen(self.f2))
        for name in ("g1", "g2"):
            g = getattr(self, name)
            if isinstance(g, GenBoolFn):
                if g.k != 1:
                    raise ConstructionError(f"{name} must be Boolean")
                object.__setattr__(self, name, g.to_boolfn())

    @property
    def r(self) -> int:
        return self.f1.n

    @property
    def s_dim(self) -> int:
        return self.g1.n

    @property
    def n(self) -> int:
        return self.r + self.s_dim

    @property
    def k(self) -> int:
        return self.f1.k

    def validate(self, distinct: bool = False) -> None:
        f1, f2 = as_gen(self.f1), as_gen(self.f2)
        if f1.n != f2.n or f1.k != f2.k:
            raise ConstructionError("f1 and f2 must share n and k")
        if self.g1.n != self.g2.n:
            raise ConstructionError("g1 and g2 must share a dimension")
        for name, g in (("g1", self.g1), ("g2", self.g2)):
            if not is_bent(g):
                raise ConstructionError(f"{name} is not bent")
        if distinct and (self.g1 == self.g2 or self.g1 == self.g2.complement()):
            raise ConstructionError("g1 must differ from g2 and from the complement of g2")


def _indirect_values(spec: IndirectSumSpec, literal: bool) -> np.ndarray:
    f1, f2 = as_gen(spec.f1), as_gen(spec.f2)
    q = f1.q
    x1, y1 = _concat_xy(f1.values, spec.g1.table)
    x2, y2 = _concat_xy(f2.values, spec.g2.table)
    # the selector is g1 + g2 as an integer in {0,1,2} (literal) or g1 XOR g2
    selector = y1 + y2 if literal else y1 ^ y2
    return (x1 + (q >> 1) * y1 + (x2 - x1) * selector) % q


def indirect_sum_generalized(spec: IndirectSumSpec, claim: Optional[str] = None,
                             literal: bool = False) -> GenBoolFn:
    """h(x,y) = f1(x) + 2^(k-1) g1(y) + (f2(x) - f1(x)) (g1(y) + g2(y)) mod 2^k.

    claim selects which conclusion to verify on the output: "i" (f1, f2 both
    t-plateaued -> h t-plateaued), "ii" (plateau orders t1 != t2 -> length 3
    with moduli {0, 2^((n+t1)/2), 2^((n+t2)/2)}), "iii" (landscape inputs ->
    moduli set built from the input levels), or None.
    """
    spec.validate(distinct=claim in ("ii", "iii"))
    h = GenBoolFn(spec.n, spec.k, _indirect_values(spec, literal))
    if claim is not None:
        verify_indirect_claim(spec, h, claim)
    return h


def _moduli_sq(f) -> set[int]:
    profile = landscape_profile(f)
    if profile is None:
        return set()
    out = {lv.modulus_sq for lv in profile.levels}
    if profile.has_zero:
        out.add(0)
    return out


def expected_moduli_sq(spec: IndirectSumSpec, claim: str) -> set[int]:
    f1, f2 = as_gen(spec.f1), as_gen(spec.f2)
    if claim in ("i", "ii"):
        t1, t2 = plateau_order(f1), plateau_order(f2)
        if t1 is None or t2 is None:
            raise ConstructionError("claims (i)/(ii) need plateaued f1 and f2")
        if claim == "i":
            if t1 != t2:
                raise ConstructionError("claim (i) needs equal plateau orders")
            return {0, 1 << (spec.n + t1)}
        if t1 == t2:
            raise ConstructionError("claim (ii) needs distinct plateau orders")
        return {0, 1 << (spec.n + t1), 1 << (spec.n + t2)}
    if claim == "iii":
        p1, p2 = landscape_profile(f1), landscape_profile(f2)
        if p1 is None or p2 is None:
            raise ConstructionError("claim (iii) needs landscape f1 and f2")
        scale = 1 << spec.s_dim
        # H_h(u, v) is H_f1(u) W_g1(v) or +-H_f2(u) W_g1(v), so 0 occurs only via f1, f2
        zero = {0} if p1.has_zero or p2.has_zero else set()
        return zero | {scale * lv.modulus_sq for lv in p1.levels | p2.levels}
    raise ValueError(f"unknown claim {claim!r}")


def verify_indirect_claim(spec: IndirectSumSpec, h: GenBoolFn, claim: str) -> None:
    expected = expected_moduli_sq(spec, claim)
    got = _moduli_sq(h)
    if claim == "i":
        t = plateau_order(as_gen(spec.f1))
        if plateau_order(h) != t:
            raise VerificationError(f"h is not {t}-plateaued (moduli^2 {sorted(got)})")
        return
    if got != expected:
        raise VerificationError(f"moduli^2 {sorted(got)} != expected {sorted(expected)}")


# -- ingredient generators ------------------------------------------------

def mm_bent(r: int, perm: Sequence[int], tail=None) -> BoolFn:
    """Maiorana-McFarland x . perm(y) + tail(y) on r = 2m variables (x low, y high)."""
    if r < 2 or r % 2:
        raise ConstructionError("r must be even and >= 2")
    half = r // 2
    size = 1 << half
    perm = np.asarray(perm, dtype=np.int64)
    if perm.shape != (size,) or sorted(perm.tolist()) != list(range(size)):
        raise ConstructionError(f"perm must be a permutation of range({size})")
    tail_vals = np.zeros(size, dtype=np.int64) if tail is None else as_gen(tail).values
    if tail_vals.size != size:
        raise ConstructionError(f"tail must be a function on {half} variables")
    x = np.tile(np.arange(size), size)
    y = np.repeat(np.arange(size), size)
    return BoolFn(r, parity(x & perm[y]) ^ tail_vals[y])


def pad_plateaued(f, t: int) -> BoolFn:
    """f on r + t variables, ignoring the t new (high) inputs."""
    f = as_gen(f)
    if f.k != 1:
        raise ConstructionError("pad_plateaued takes a Boolean function")
    if t < 0:
        raise ConstructionError("t must be >= 0")
    return BoolFn(f.n + t, np.tile(f.values, 1 << t))


def embed(f, extra: int) -> GenBoolFn:
    """Same function viewed on extra dummy high variables (any k)."""
    f = as_gen(f)
    return GenBoolFn(f.n + extra, f.k, np.tile(f.values, 1 << extra))


def lift_level_shift(f, a_bit: int = 1) -> Optional[set[int]]:
    """Observed m-shifts from f's point (u) to the lift's point (u, a); None if not landscape."""
    f = as_gen(f)
    pf, pg = landscape_profile(f), landscape_profile(affine_lift(f, a_bit))
    if pf is None or pg is None:
        return None
    offset = a_bit * f.size
    return {pg.point_levels[u + offset].m - pf.point_levels[u].m for u in pf.support}


def lift_levels_ok(f, a_bit: int = 1, shift: int = 2) -> bool:
    """Levels (m, l) -> (m + shift, l) and plateau order s -> s+1.

    With absolute levels (|H| = 2^(m/2) l on n variables) the true shift is 2;
    shift=1 is the reading relative to the dimension (m - n).
    """
    f = as_gen(f)
    g = affine_lift(f, a_bit)
    pf, pg = landscape_profile(f), landscape_profile(g)
    if pf is None:
        return pg is None
    if pg is None:
        return False
    shifted = {(lv.m + shift, lv.ell) for lv in pf.levels}
    same_levels = {(lv.m, lv.ell) for lv in pg.levels} == shifted
    s = plateau_order_of(pf, f.n)
    order_ok = s is None or plateau_order_of(pg, g.n) == s + 1
    # lifting adds zeros, so has_zero is always set on g
    return same_levels and order_ok and pg.has_zero


def lift_identity_holds(f, a_bit: int) -> bool:
    """H_g(u, v) = (1 + (-1)^(a+v)) H_f(u), exactly."""
    from .transforms import gwht
    f = as_gen(f)
    hf = gwht(f).coeffs
    hg = gwht(affine_lift(f, a_bit)).coeffs
    size = f.size
    return all(
        np.array_equal(hg[v * size:(v + 1) * size], (1 + (-1) ** (a_bit + v)) * hf)
        for v in (0, 1)
    )
