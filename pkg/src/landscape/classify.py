"""Landscape profiles, plateau orders, and regularity with dual extraction.

Every modulus test is done on |H(u)|^2, which lies in the ring; a point is
landscape-admissible when that square is a rational integer 2^m * l^2 with l
odd. Nothing here uses floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import cyclotomic as cyc
from .cyclotomic import CycInt
from .gbf import GenBoolFn, as_gen
from .transforms import CycSpectrum, gwht, gwht_batch


@dataclass(frozen=True, order=True)
class SpectrumLevel:
    m: int
    ell: int

    def __post_init__(self):
        if self.m < 0 or self.ell < 1 or self.ell % 2 == 0:
            raise ValueError(f"invalid level (m={self.m}, ell={self.ell})")

    @property
    def modulus_sq(self) -> int:
        return (1 << self.m) * self.ell * self.ell

    def as_pair(self) -> list[int]:
        return [self.m, self.ell]


@dataclass(frozen=True)
class LandscapeProfile:
    levels: frozenset
    has_zero: bool
    support: tuple[int, ...]
    point_levels: tuple  # SpectrumLevel per point, None where H vanishes

    def __post_init__(self):
        if not self.support:
            raise ValueError("a spectrum cannot vanish everywhere")

    @property
    def length(self) -> int:
        return len(self.levels) + (1 if self.has_zero else 0)

    def sorted_levels(self) -> list[SpectrumLevel]:
        return sorted(self.levels)

    def to_json_obj(self) -> dict:
        return {
            "levels": [lv.as_pair() for lv in self.sorted_levels()],
            "has_zero": self.has_zero,
            "length": self.length,
            "support": list(self.support),
        }


def modulus_sq_decompose(c: int) -> Optional[tuple[int, int]]:
    """c = 2^m * l^2 with l odd -> (m, l); None if the odd part is not a square."""
    if c < 1:
        raise ValueError("modulus square must be positive")
    m = (c & -c).bit_length() - 1
    odd = c >> m
    ell = math.isqrt(odd)
    if ell * ell != odd:
        return None
    return m, ell


class _LevelCache(dict):
    def __missing__(self, c):
        pair = modulus_sq_decompose(c)
        value = SpectrumLevel(*pair) if pair else None
        self[c] = value
        return value


_levels = _LevelCache()


def _profile_from_norms(norms: np.ndarray) -> tuple[Optional[LandscapeProfile], Optional[int]]:
    """norms: (2^n, h) coefficient rows of |H|^2. Returns (profile, failing point)."""
    const = norms[:, 0]
    bad_rows = np.flatnonzero(norms[:, 1:].any(axis=1)) if norms.shape[1] > 1 else np.array([], dtype=np.int64)
    first_bad = int(bad_rows[0]) if bad_rows.size else None
    per_point = []
    for u, c in enumerate(const.tolist()):
        if first_bad is not None and u >= first_bad:
            return None, first_bad
        if c == 0:
            per_point.append(None)
            continue
        level = _levels[int(c)]
        if level is None:
            return None, u
        per_point.append(level)
    support = tuple(u for u, lv in enumerate(per_point) if lv is not None)
    profile = LandscapeProfile(
        levels=frozenset(lv for lv in per_point if lv is not None),
        has_zero=len(support) < len(per_point),
        support=support,
        point_levels=tuple(per_point),
    )
    return profile, None


def scan_landscape(f, spectrum: Optional[CycSpectrum] = None):
    """(profile or None, first point whose |H|^2 is not 2^m l^2)."""
    f = as_gen(f)
    spectrum = spectrum if spectrum is not None else gwht(f)
    return _profile_from_norms(spectrum.norm_sq())


def landscape_profile(f, spectrum: Optional[CycSpectrum] = None) -> Optional[LandscapeProfile]:
    return scan_landscape(f, spectrum)[0]


def profiles_batch(values: np.ndarray, k: int) -> list[Optional[LandscapeProfile]]:
    spectra = gwht_batch(values, k)
    norms = cyc.norm_sq_array(spectra)
    return [_profile_from_norms(row)[0] for row in norms]


# -- plateaued ------------------------------------------------------------

def plateau_order_of(profile: Optional[LandscapeProfile], n: int) -> Optional[int]:
    if profile is None or len(profile.levels) != 1:
        return None
    (level,) = profile.levels
    if level.ell != 1 or level.m < n:
        return None
    return level.m - n


def plateau_order(f) -> Optional[int]:
    f = as_gen(f)
    return plateau_order_of(landscape_profile(f), f.n)


def is_gbent(f) -> bool:
    return plateau_order(f) == 0


def is_semibent(f) -> bool:
    return plateau_order(f) in (1, 2)


# -- sums of two squares --------------------------------------------------

def pythagorean_reps(ell: int) -> list[tuple[int, int]]:
    """All (l1, l2), 1 <= l1 <= l2, with l1^2 + l2^2 = ell^2."""
    if ell < 1 or ell % 2 == 0:
        raise ValueError("ell must be odd and positive")
    target = ell * ell
    reps = []
    l1 = 1
    while 2 * l1 * l1 <= target:
        rest = target - l1 * l1
        l2 = math.isqrt(rest)
        if l2 * l2 == rest:
            reps.append((l1, l2))
        l1 += 1
    return reps


def gaussian_reps(norm: int) -> list[tuple[int, int]]:
    """Every integer pair (a, b) with a^2 + b^2 = norm."""
    out = []
    a = 0
    while a * a <= norm:
        rest = norm - a * a
        b = math.isqrt(rest)
        if b * b == rest:
            for sa in {a, -a}:
                for sb in {b, -b}:
                    out.append((sa, sb))
        a += 1
    return sorted(set(out))


@dataclass(frozen=True)
class ExceptionalPoint:
    """H(u) = a + b*i at a k=2, m odd point, matched to one displayed family.

    family "pythagorean": params (l1, l2, eps1, eps2, sign) with
        H = 2^((m-1)/2) * (l1 eps1 + l2 eps2 + sign * i * (l1 eps2 - l2 eps1)).
    family "unit": params (s_re, s_im) with H = 2^((m-1)/2) * ell * (s_re + s_im * i).
    """

    point: int
    m: int
    ell: int
    a: int
    b: int
    family: str
    params: tuple

    def to_json_obj(self) -> dict:
        return {
            "point": self.point,
            "m": self.m,
            "ell": self.ell,
            "value": [self.a, self.b],
            "family": self.family,
            "params": list(self.params),
        }


_SIGNS = (-1, 1)


def gaussian_family(a: int, b: int, m: int, ell: int):
    """Match a + b*i against the k=2, m odd forms; (family, params) or None."""
    scale = 1 << ((m - 1) // 2)
    if a % scale or b % scale:
        return None
    a1, b1 = a // scale, b // scale
    for l1, l2 in pythagorean_reps(ell):
        for e1 in _SIGNS:
            for e2 in _SIGNS:
                for sign in _SIGNS:
                    if (l1 * e1 + l2 * e2, sign * (l1 * e2 - l2 * e1)) == (a1, b1):
                        return "pythagorean", (l1, l2, e1, e2, sign)
    for s_re in _SIGNS:
        for s_im in _SIGNS:
            if (s_re * ell, s_im * ell) == (a1, b1):
                return "unit", (s_re, s_im)
    return None


# -- regularity -----------------------------------------------------------

@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    dual: GenBoolFn
    exceptional_points: dict = field(default_factory=dict)  # point -> ExceptionalPoint
    irregular_points: tuple = ()  # support points matching no predicted form

    def to_json_obj(self) -> dict:
        return {
            "regular": self.regular,
            "dual": self.dual.to_json_obj(),
            "exceptional_points": sorted(self.exceptional_points),
            "exceptional": [e.to_json_obj() for _, e in sorted(self.exceptional_points.items())],
            "irregular_points": list(self.irregular_points),
        }


def regular_candidates(level: SpectrumLevel, k: int) -> list[CycInt]:
    """The 2^k values 2^(m/2) l zeta^j, or None when k=2 and m is odd."""
    q = 1 << k
    if level.m % 2 == 0:
        base = cyc.scalar((1 << (level.m // 2)) * level.ell, k)
    else:
        base = cyc.scalar((1 << ((level.m - 1) // 2)) * level.ell, k) * cyc.sqrt2_element(k)
    return [base * cyc.monomial(j, k) for j in range(q)]


def regular_exponent(value: CycInt, level: SpectrumLevel, k: int) -> Optional[int]:
    for j, cand in enumerate(regular_candidates(level, k)):
        if cand == value:
            return j
    return None


def regularity(f, spectrum: Optional[CycSpectrum] = None,
               profile: Optional[LandscapeProfile] = None) -> RegularityReport:
    f = as_gen(f)
    spectrum = spectrum if spectrum is not None else gwht(f)
    profile = profile if profile is not None else landscape_profile(f, spectrum)
    if profile is None:
        raise ValueError("regularity is defined for landscape functions only")
    dual = np.zeros(f.size, dtype=np.int64)
    exceptional = {}
    irregular = []
    candidates = {}
    for u in profile.support:
        level = profile.point_levels[u]
        value = spectrum[u]
        if f.k == 2 and level.m % 2 == 1:
            a, b = value.coeffs
            match = gaussian_family(a, b, level.m, level.ell)
            if match is None:
                irregular.append(u)
            else:
                exceptional[u] = ExceptionalPoint(u, level.m, level.ell, a, b, *match)
            continue
        if level not in candidates:
            candidates[level] = regular_candidates(level, f.k)
        j = next((j for j, c in enumerate(candidates[level]) if c == value), None)
        if j is None:
            irregular.append(u)
        else:
            dual[u] = j
    return RegularityReport(
        regular=not exceptional and not irregular,
        dual=GenBoolFn(f.n, f.k, dual),
        exceptional_points=exceptional,
        irregular_points=tuple(irregular),
    )


def reconstruct_from_dual(report: RegularityReport, profile: LandscapeProfile, k: int) -> list[Optional[CycInt]]:
    """2^(m/2) l zeta^dual(u) at each regular support point (None elsewhere)."""
    out: list[Optional[CycInt]] = [None] * len(profile.point_levels)
    skip = set(report.exceptional_points) | set(report.irregular_points)
    for u in profile.support:
        if u in skip:
            continue
        out[u] = regular_candidates(profile.point_levels[u], k)[report.dual(u)]
    return out


def level_pairs(levels: Sequence[SpectrumLevel]) -> list[list[int]]:
    return [lv.as_pair() for lv in sorted(levels)]
