"""Component-based view of the generalized transform.

H_f is rebuilt from the Walsh spectra of the 2^(k-1) Boolean components
f_c, and the per-point component conditions of the landscape
characterization are checked in both directions with explicit witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .classify import (
    SpectrumLevel,
    _levels,
    plateau_order,
    pythagorean_reps,
)
from .gbf import as_gen, components
from .transforms import CycSpectrum, gwht, wht

ZERO = "zero"
M_EVEN = "m-even"
M_ODD = "m-odd-k>=3"
M_ODD_K2 = "m-odd-k=2"
NON_LANDSCAPE = "non-landscape"

_SIGNS = (-1, 1)


def component_spectra(f) -> np.ndarray:
    """W_{f_c}(a) as an int array of shape (2^(k-1), 2^n), row c = iota(c)."""
    f = as_gen(f)
    return np.stack([wht(fc).values for fc in components(f)])


def reconstruct_gwht(f) -> CycSpectrum:
    """H_f(a) = 2^-(k-1) sum_{c,d} (-1)^(c.d) zeta^iota(d) W_{f_c}(a)."""
    f = as_gen(f)
    if f.k < 2:
        raise ValueError("reconstruction needs k >= 2")
    h = 1 << (f.k - 1)
    w = component_spectra(f)
    acc = np.zeros((f.size, h), dtype=np.int64)
    for c in range(h):
        for d in range(h):
            # zeta^iota(d) is basis vector d since iota(d) < h
            sign = -1 if (c & d).bit_count() & 1 else 1
            acc[:, d] += sign * w[c]
    if np.any(acc % h):
        raise ArithmeticError("non-exact division in reconstruction")
    return CycSpectrum(f.n, f.k, acc // h)


# -- per-point forms ------------------------------------------------------

def _char(c: int, g: int, s: int) -> int:
    return -1 if ((c & g).bit_count() + s) & 1 else 1


def match_even(w: list[int], k: int, magnitude: int):
    """Case (ii): W_c = (-1)^(c.iota^-1(g) + s) * magnitude. -> (witness, bad c)."""
    if abs(w[0]) != magnitude:
        return None, 0
    s = 0 if w[0] > 0 else 1
    g = 0
    for i in range(k - 1):
        e = 1 << i
        if abs(w[e]) != magnitude:
            return None, e
        if (w[e] > 0) != (w[0] > 0):
            g |= e
    for c, value in enumerate(w):
        if value != _char(c, g, s) * magnitude:
            return None, c
    return {"g": g, "s": s}, None


def odd_pairs(k: int):
    """(g1, s1, g2, s2) with g2 - g1 + 2^(k-1)(s2 - s1) = 2^(k-2) in Z_{2^k}, lexicographic."""
    h = 1 << (k - 1)
    q = 2 * h
    for g1 in range(h):
        for s1 in (0, 1):
            e2 = (g1 + h * s1 + (h >> 1)) % q
            yield g1, s1, e2 % h, e2 // h


def match_odd(w: list[int], k: int, factor: Optional[int]):
    """Case (iii). factor = 2^floor(m/2) l, or None to infer it from w."""
    for g1, s1, g2, s2 in odd_pairs(k):
        pattern = [_char(c, g1, s1) - _char(c, g2, s2) for c in range(len(w))]
        f = factor
        if f is None:
            nz = next((c for c, p in enumerate(pattern) if p), None)
            if nz is None or w[nz] % pattern[nz]:
                continue
            f = w[nz] // pattern[nz]
            if f <= 0:
                continue
        if all(value == p * f for value, p in zip(w, pattern)):
            return {"g1": g1, "s1": s1, "g2": g2, "s2": s2, "factor": f}
    return None


def match_k2_odd(w: list[int], m: int, ell: int):
    """Case (iv): k = 2, m odd; w = [W_{f_0}, W_{f_1}]."""
    scale = 1 << ((m - 1) // 2)
    for l1, l2 in pythagorean_reps(ell):
        for e1 in _SIGNS:
            for e2 in _SIGNS:
                for sign in _SIGNS:
                    base, twist = l1 * e1 + l2 * e2, l1 * e2 - l2 * e1
                    if all(w[c] == scale * (base + sign * (-1) ** c * twist) for c in (0, 1)):
                        return {"family": "pythagorean", "l1": l1, "l2": l2,
                                "eps1": e1, "eps2": e2, "sign": sign}
    for s_re in _SIGNS:
        for s_im in _SIGNS:
            if all(w[c] == scale * ell * (s_re + s_im * (-1) ** c) for c in (0, 1)):
                return {"family": "unit", "s_re": s_re, "s_im": s_im}
    return None


def _split_magnitude(v: int) -> tuple[int, int]:
    e = (v & -v).bit_length() - 1
    return e, v >> e


def infer_from_components(w: list[int], k: int):
    """Read (case, level, witness) off component values alone; None if no form fits."""
    if not any(w):
        return ZERO, None, {}
    v = abs(w[0])
    if v and all(abs(x) == v for x in w):
        witness, _ = match_even(w, k, v)
        if witness is not None:
            e, ell = _split_magnitude(v)
            return M_EVEN, SpectrumLevel(2 * e, ell), witness
        return None
    if k >= 3:
        witness = match_odd(w, k, None)
        if witness is None:
            return None
        e, ell = _split_magnitude(witness["factor"])
        return M_ODD, SpectrumLevel(2 * e + 1, ell), witness
    total = w[0] * w[0] + w[1] * w[1]
    if total % 2:
        return None
    level = _levels[total // 2]
    if level is None or level.m % 2 == 0:
        return None
    witness = match_k2_odd(w, level.m, level.ell)
    if witness is None:
        return None
    return M_ODD_K2, level, witness


# -- report ---------------------------------------------------------------

@dataclass
class PointWitness:
    point: int
    case: str
    level: Optional[SpectrumLevel]
    witness: Optional[dict]
    ok: bool
    counterexample_c: Optional[int] = None
    inferred_case: Optional[str] = None
    inferred_level: Optional[SpectrumLevel] = None

    @property
    def agrees(self) -> bool:
        # at non-landscape points the components must not fit any form
        if self.case == NON_LANDSCAPE:
            return self.inferred_case is None
        return (self.inferred_case, self.inferred_level) == (self.case, self.level)

    def to_json_obj(self) -> dict:
        return {
            "case": self.case,
            "level": self.level.as_pair() if self.level else None,
            "witness": self.witness,
            "ok": self.ok,
            "counterexample_c": self.counterexample_c,
            "agrees": self.agrees,
        }


@dataclass
class WitnessReport:
    n: int
    k: int
    points: list = field(default_factory=list)
    closing_claim_violations: list = field(default_factory=list)  # (a, c, |W|)

    @property
    def passes(self) -> bool:
        return all(p.ok for p in self.points)

    @property
    def disagreements(self) -> list[int]:
        return [p.point for p in self.points if not p.agrees]

    @property
    def counterexample(self) -> Optional[tuple[int, Optional[int]]]:
        for p in self.points:
            if not p.ok:
                return p.point, p.counterexample_c
        return None

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "passes": self.passes,
            "counterexample": self.counterexample,
            "disagreements": self.disagreements,
            "closing_claim_violations": [list(v) for v in self.closing_claim_violations],
            "points": {str(p.point): p.to_json_obj() for p in self.points},
        }


def point_classes(spectrum: CycSpectrum) -> list:
    """Per point: None (zero), a SpectrumLevel, or NON_LANDSCAPE."""
    out = []
    for row in spectrum.norm_sq().tolist():
        if any(row[1:]):
            out.append(NON_LANDSCAPE)
        elif row[0] == 0:
            out.append(None)
        else:
            level = _levels[int(row[0])]
            out.append(level if level is not None else NON_LANDSCAPE)
    return out


def check_point(w: list[int], k: int, cls) -> PointWitness:
    """Verify component conditions at one point given its spectral class."""
    if cls is None:
        bad = next((c for c, x in enumerate(w) if x), None)
        return PointWitness(-1, ZERO, None, {} if bad is None else None, bad is None, bad)
    if cls == NON_LANDSCAPE:
        return PointWitness(-1, NON_LANDSCAPE, None, None, False, None)
    level = cls
    if level.m % 2 == 0:
        witness, bad = match_even(w, k, (1 << (level.m // 2)) * level.ell)
        return PointWitness(-1, M_EVEN, level, witness, witness is not None, bad)
    if k >= 3:
        witness = match_odd(w, k, (1 << (level.m // 2)) * level.ell)
        return PointWitness(-1, M_ODD, level, witness, witness is not None, None)
    witness = match_k2_odd(w, level.m, level.ell)
    return PointWitness(-1, M_ODD_K2, level, witness, witness is not None, None)


def check_components(f, spectrum: Optional[CycSpectrum] = None) -> WitnessReport:
    f = as_gen(f)
    if f.k < 2:
        raise ValueError("component characterization needs k >= 2")
    spectrum = spectrum if spectrum is not None else gwht(f)
    classes = point_classes(spectrum)
    w_all = component_spectra(f).T.tolist()  # row a: [W_{f_c}(a) for c]
    report = WitnessReport(f.n, f.k)
    for a, (w, cls) in enumerate(zip(w_all, classes)):
        pw = check_point(w, f.k, cls)
        pw.point = a
        inferred = infer_from_components(w, f.k)
        if inferred is not None:
            pw.inferred_case, pw.inferred_level = inferred[0], inferred[1]
        report.points.append(pw)
    if report.passes:
        allowed = {(1 << ((lv.m + 1) // 2)) * lv.ell for lv in classes if isinstance(lv, SpectrumLevel)}
        for a, w in enumerate(w_all):
            for c, x in enumerate(w):
                if x and abs(x) not in allowed:
                    report.closing_claim_violations.append((a, c, abs(x)))
    return report


def verify_witness(w: list[int], k: int, pw: PointWitness) -> bool:
    """Substitute a reported witness back into its displayed formula."""
    if not pw.ok:
        return False
    if pw.case == ZERO:
        return not any(w)
    lv = pw.level
    if pw.case == M_EVEN:
        mag = (1 << (lv.m // 2)) * lv.ell
        return all(x == _char(c, pw.witness["g"], pw.witness["s"]) * mag for c, x in enumerate(w))
    if pw.case == M_ODD:
        wt = pw.witness
        h = 1 << (k - 1)
        constraint = (wt["g2"] - wt["g1"] + h * (wt["s2"] - wt["s1"])) % (2 * h)
        if constraint != h >> 1:
            return False
        factor = (1 << (lv.m // 2)) * lv.ell
        return all(
            x == (_char(c, wt["g1"], wt["s1"]) - _char(c, wt["g2"], wt["s2"])) * factor
            for c, x in enumerate(w)
        )
    wt = pw.witness
    scale = 1 << ((lv.m - 1) // 2)
    if wt["family"] == "pythagorean":
        if wt["l1"] ** 2 + wt["l2"] ** 2 != lv.ell ** 2:
            return False
        base = wt["l1"] * wt["eps1"] + wt["l2"] * wt["eps2"]
        twist = wt["l1"] * wt["eps2"] - wt["l2"] * wt["eps1"]
        return all(w[c] == scale * (base + wt["sign"] * (-1) ** c * twist) for c in (0, 1))
    return all(w[c] == scale * lv.ell * (wt["s_re"] + wt["s_im"] * (-1) ** c) for c in (0, 1))


def component_plateau_orders(f) -> list[Optional[int]]:
    return [plateau_order(fc) for fc in components(as_gen(f))]


def corollary_holds(f) -> Optional[bool]:
    """s-plateaued f -> every f_c is s- (n+s even) or (s+1)-plateaued (n+s odd)."""
    f = as_gen(f)
    s = plateau_order(f)
    if s is None:
        return None
    expected = s if (f.n + s) % 2 == 0 else s + 1
    return all(t == expected for t in component_plateau_orders(f))


def reconstruction_matches(f) -> bool:
    return reconstruct_gwht(f) == gwht(f)


__all__ = [
    "component_spectra",
    "reconstruct_gwht",
    "check_components",
    "infer_from_components",
    "verify_witness",
    "corollary_holds",
    "WitnessReport",
    "PointWitness",
]
