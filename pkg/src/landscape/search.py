"""Exhaustive and seeded-random enumeration of generalized Boolean functions.

Exhaustive order is lexicographic in the truth table read as the tuple
(f(0), f(1), ..., f(2^n - 1)), f(0) most significant.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .classify import (
    LandscapeProfile,
    SpectrumLevel,
    _profile_from_norms,
    plateau_order_of,
    regularity,
)
from .cyclotomic import norm_sq_array
from .gbf import GenBoolFn
from .transforms import CycSpectrum, gwht_batch

DEFAULT_BUDGET = 1 << 24
CHUNK = 1 << 12


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} functions, budget is {budget}")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class SearchFilter:
    landscape_only: bool = True
    length: Optional[int] = None
    levels: Optional[frozenset] = None  # exact level set, as SpectrumLevel
    plateau: Optional[int] = None
    gbent: bool = False
    regular: Optional[bool] = None
    exceptional: Optional[bool] = None  # has k=2, m odd points

    def needs_regularity(self) -> bool:
        return self.regular is not None or self.exceptional is not None

    def accepts(self, profile: Optional[LandscapeProfile], n: int, f: GenBoolFn = None,
                spectrum: CycSpectrum = None) -> bool:
        if profile is None:
            return not (self.landscape_only or self.length or self.levels or self.plateau is not None
                        or self.gbent or self.needs_regularity())
        if self.length is not None and profile.length != self.length:
            return False
        if self.levels is not None and profile.levels != self.levels:
            return False
        s = plateau_order_of(profile, n)
        if self.plateau is not None and s != self.plateau:
            return False
        if self.gbent and s != 0:
            return False
        if self.needs_regularity():
            report = regularity(f, spectrum=spectrum, profile=profile)
            if self.regular is not None and report.regular != self.regular:
                return False
            if self.exceptional is not None and bool(report.exceptional_points) != self.exceptional:
                return False
        return True


def space_size(n: int, k: int) -> int:
    return 1 << (k << n)


def _chunk_tables(n: int, k: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop-1 of the lexicographic enumeration."""
    size = 1 << n
    idx = np.arange(start, stop, dtype=object if k * size > 62 else np.int64)
    shifts = [(size - 1 - x) * k for x in range(size)]
    mask = (1 << k) - 1
    cols = [(idx >> s) & mask for s in shifts]
    return np.stack(cols, axis=1).astype(np.int64)


def _scan_chunk(args) -> list[tuple[list[int], Optional[LandscapeProfile]]]:
    n, k, start, stop, filt = args
    tables = _chunk_tables(n, k, start, stop)
    spectra = gwht_batch(tables, k)
    norms = norm_sq_array(spectra)
    out = []
    for row, spec_row, norm_row in zip(tables, spectra, norms):
        profile, _ = _profile_from_norms(norm_row)
        f = GenBoolFn(n, k, row) if filt.needs_regularity() else None
        spectrum = CycSpectrum(n, k, spec_row) if f is not None else None
        if filt.accepts(profile, n, f, spectrum):
            out.append((row.tolist(), profile))
    return out


def enumerate_functions(n: int, k: int, filt: SearchFilter = SearchFilter(),
                        budget: int = DEFAULT_BUDGET, jobs: int = 1,
                        counter: Optional[Counter] = None
                        ) -> Iterator[tuple[GenBoolFn, Optional[LandscapeProfile]]]:
    """Every function passing filt, in lexicographic truth-table order.

    counter, when given, receives "visited" and per-length tallies over the
    whole space (not just the accepted functions).
    """
    total = space_size(n, k)
    if total > budget:
        raise BudgetExceeded(total, budget)
    tasks = [(n, k, lo, min(lo + CHUNK, total), filt) for lo in range(0, total, CHUNK)]
    if counter is not None:
        # tallies need every function, so scan unfiltered and filter here
        inner = SearchFilter(landscape_only=False)
        tasks = [t[:4] + (inner,) for t in tasks]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from _emit(pool.map(_scan_chunk, tasks), n, k, filt, counter)
    else:
        yield from _emit(map(_scan_chunk, tasks), n, k, filt, counter)


def _emit(chunks, n, k, filt, counter):
    # pool.map yields chunks in submission order, so output stays canonical
    for chunk in chunks:
        for row, profile in chunk:
            f = GenBoolFn(n, k, row)
            if counter is not None:
                counter["visited"] += 1
                counter[f"length={profile.length}" if profile else "non-landscape"] += 1
                if not filt.accepts(profile, n, f):
                    continue
            yield f, profile


def sample(n: int, k: int, count: int, seed: int,
           filt: Optional[SearchFilter] = None) -> Iterator[tuple[GenBoolFn, Optional[LandscapeProfile]]]:
    """count pseudorandom functions (reproducible from seed) with their profiles.

    Without a filter every drawn function is yielded; with one, only those
    it accepts (count still counts draws).
    """
    rng = np.random.default_rng(seed)
    done = 0
    while done < count:
        batch = min(CHUNK, count - done)
        tables = rng.integers(0, 1 << k, size=(batch, 1 << n), dtype=np.int64)
        norms = norm_sq_array(gwht_batch(tables, k))
        for row, norm_row in zip(tables, norms):
            profile, _ = _profile_from_norms(norm_row)
            f = GenBoolFn(n, k, row)
            if filt is None or filt.accepts(profile, n, f):
                yield f, profile
        done += batch


def length_histogram(results) -> dict[str, int]:
    hist = Counter()
    for _, profile in results:
        hist[str(profile.length) if profile else "non-landscape"] += 1
    return dict(sorted(hist.items()))


def parse_levels(text: str) -> frozenset:
    """"2:1,4:3" -> {(2,1), (4,3)}."""
    out = set()
    for part in text.split(","):
        m, ell = part.split(":")
        out.add(SpectrumLevel(int(m), int(ell)))
    return frozenset(out)
