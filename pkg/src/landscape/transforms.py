"""Walsh-Hadamard, generalized Walsh-Hadamard and Fourier transforms,
correlations, and the identities linking them.

All transforms are unnormalized and exact. Ring-valued spectra are stored as
int64 coefficient arrays of shape (2^n, 2^(k-1)); the fast path runs one
integer butterfly per ring coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .cyclotomic import (
    CycInt,
    conj_array,
    from_coeffs,
    from_exponent_counts,
    mul_array,
    monomial,
    norm_sq_array,
    ring_sum,
)
from .gbf import BoolFn, DimensionError, GenBoolFn, as_gen, dot, parity_matrix


@dataclass(frozen=True, eq=False)
class IntSpectrum:
    n: int
    values: np.ndarray

    def __getitem__(self, u: int) -> int:
        return int(self.values[u])

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        return isinstance(other, IntSpectrum) and self.n == other.n and np.array_equal(self.values, other.values)

    def tolist(self) -> list[int]:
        return [int(v) for v in self.values]


@dataclass(frozen=True, eq=False)
class CycSpectrum:
    n: int
    k: int
    coeffs: np.ndarray  # shape (2^n, 2^(k-1))

    def __getitem__(self, u: int) -> CycInt:
        return from_coeffs(self.coeffs[u].tolist(), self.k)

    def __len__(self):
        return self.coeffs.shape[0]

    def __iter__(self):
        return (self[u] for u in range(len(self)))

    def __eq__(self, other):
        return (
            isinstance(other, CycSpectrum)
            and (self.n, self.k) == (other.n, other.k)
            and np.array_equal(self.coeffs, other.coeffs)
        )

    @property
    def values(self) -> list[CycInt]:
        return list(self)

    def norm_sq(self) -> np.ndarray:
        """|H(u)|^2 for every u as coefficient rows."""
        return norm_sq_array(_wide(self.coeffs, self.n))

    def conj(self) -> "CycSpectrum":
        return CycSpectrum(self.n, self.k, conj_array(self.coeffs))

    def tolist(self) -> list[list[int]]:
        return [[int(c) for c in row] for row in self.coeffs]


def _wide(arr: np.ndarray, n: int) -> np.ndarray:
    # products of two spectra reach 2^(2n) * 2^(k-1); leave int64 before that overflows
    return arr.astype(object) if n > 28 else arr


def _require_same(f: GenBoolFn, g: GenBoolFn) -> None:
    if (f.n, f.k) != (g.n, g.k):
        raise DimensionError(f"(n, k) mismatch: {(f.n, f.k)} vs {(g.n, g.k)}")


# -- fast transforms ------------------------------------------------------

def fwht(values) -> np.ndarray:
    """Unnormalized WHT of an integer sequence (returns a new array)."""
    a = np.array(values, dtype=np.int64).reshape(1, -1)
    return _backend.kernels.fwht_rows(a)[0]


def wht(f) -> IntSpectrum:
    f = as_gen(f)
    if f.k != 1:
        raise ValueError("wht takes a Boolean function; use gwht for k >= 2")
    return IntSpectrum(f.n, fwht(1 - 2 * f.values))


def gwht_batch(values: np.ndarray, k: int) -> np.ndarray:
    """Spectra of many functions at once: (B, 2^n) tables -> (B, 2^n, 2^(k-1))."""
    values = np.ascontiguousarray(values, dtype=np.int64)
    planes = _backend.kernels.gwht_batch(values, k)
    return np.ascontiguousarray(planes.transpose(0, 2, 1))


def gwht(f) -> CycSpectrum:
    f = as_gen(f)
    return CycSpectrum(f.n, f.k, gwht_batch(f.values.reshape(1, -1), f.k)[0])


def fourier(f) -> IntSpectrum:
    f = as_gen(f)
    return IntSpectrum(f.n, fwht(f.values))


# -- correlations (from the definition, not via spectra) -------------------

def crosscorrelation(f, g) -> CycSpectrum:
    """C_{f,g}(z) = sum_x zeta^(f(x+z) - g(x))."""
    f, g = as_gen(f), as_gen(g)
    _require_same(f, g)
    counts = _backend.kernels.crosscorrelation_counts(
        np.ascontiguousarray(f.values), np.ascontiguousarray(g.values), f.k
    )
    h = 1 << (f.k - 1)
    return CycSpectrum(f.n, f.k, counts[:, :h] - counts[:, h:])


def autocorrelation(f) -> CycSpectrum:
    return crosscorrelation(f, f)


# -- naive oracles --------------------------------------------------------

def naive_wht(f) -> IntSpectrum:
    f = as_gen(f)
    signs = 1 - 2 * parity_matrix(f.n)
    return IntSpectrum(f.n, signs @ (1 - 2 * f.values))


def naive_gwht(f) -> CycSpectrum:
    """Quadratic-time sum with the (-1)^(u.x) matrix; no butterflies."""
    f = as_gen(f)
    signs = 1 - 2 * parity_matrix(f.n)
    return CycSpectrum(f.n, f.k, signs @ monomial_rows(f.values, f.k))


def naive_gwht_batch(values: np.ndarray, k: int) -> np.ndarray:
    values = np.asarray(values, dtype=np.int64)
    n = values.shape[1].bit_length() - 1
    signs = 1 - 2 * parity_matrix(n)
    rows = monomial_rows(values, k)  # (B, N, h)
    return np.einsum("ux,bxj->buj", signs, rows, optimize=True)


def ring_gwht(f) -> CycSpectrum:
    """Term-by-term ring summation; slow, for n <= 4."""
    f = as_gen(f)
    rows = []
    for u in range(f.size):
        terms = []
        for x in range(f.size):
            t = monomial(f(x), f.k)
            terms.append(-t if dot(u, x) else t)
        rows.append(list(ring_sum(terms, f.k).coeffs))
    return CycSpectrum(f.n, f.k, np.array(rows, dtype=np.int64))


def monomial_rows(values: np.ndarray, k: int) -> np.ndarray:
    """zeta^v as coefficient rows; shape values.shape + (2^(k-1),)."""
    h = 1 << (k - 1)
    values = np.asarray(values, dtype=np.int64)
    out = np.zeros(values.shape + (h,), dtype=np.int64)
    np.put_along_axis(out, (values % h)[..., None], np.where(values < h, 1, -1)[..., None], axis=-1)
    return out


# -- identities -----------------------------------------------------------

def spectrum_of_cycspectrum(coeffs: np.ndarray) -> np.ndarray:
    """sum_u S(u) (-1)^(u.x) for a ring-valued sequence S, coordinate-wise."""
    a = np.array(np.asarray(coeffs, dtype=np.int64).T, order="C")
    return _backend.kernels.fwht_rows(a).T.copy()


def correlation_identities(f, g=None) -> dict[str, bool]:
    """Check the three correlation/spectrum identities exactly.

    * sum_u C_{f,g}(u)(-1)^(u.x) = H_f(x) conj(H_g(x))
    * 2^n C_{f,g}(u) = sum_x H_f(x) conj(H_g(x)) (-1)^(u.x)
    * 2^n C_f(u) = sum_x |H_f(x)|^2 (-1)^(u.x)
    """
    f = as_gen(f)
    g = f if g is None else as_gen(g)
    _require_same(f, g)
    hf, hg = gwht(f).coeffs, gwht(g).coeffs
    prod = mul_array(hf, conj_array(hg))
    cfg = crosscorrelation(f, g).coeffs
    cf = autocorrelation(f).coeffs
    size = 1 << f.n
    return {
        "inversion": bool(np.array_equal(spectrum_of_cycspectrum(cfg), prod)),
        "crosscorrelation": bool(np.array_equal(size * cfg, spectrum_of_cycspectrum(prod))),
        "autocorrelation": bool(
            np.array_equal(size * cf, spectrum_of_cycspectrum(norm_sq_array(hf)))
        ),
        "autocorrelation_real": bool(np.array_equal(conj_array(cf), cf)),
    }


def parseval_total(spec: CycSpectrum) -> CycInt:
    total = spec.norm_sq().sum(axis=0)
    return from_coeffs([int(c) for c in total], spec.k)


def counts_to_cycint(counts, k: int) -> CycInt:
    return from_exponent_counts(counts, k)


__all__ = [
    "IntSpectrum",
    "CycSpectrum",
    "BoolFn",
    "wht",
    "gwht",
    "gwht_batch",
    "fourier",
    "fwht",
    "crosscorrelation",
    "autocorrelation",
    "naive_wht",
    "naive_gwht",
    "naive_gwht_batch",
    "ring_gwht",
    "correlation_identities",
    "parseval_total",
    "monomial",
]
