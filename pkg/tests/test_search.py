from collections import Counter

import pytest

from landscape import classify as C
from landscape import search as S
from landscape.classify import SpectrumLevel


def _tables(stream):
    return [f.values.tolist() for f, _ in stream]


def test_unfiltered_visits_whole_space():
    counter = Counter()
    out = list(S.enumerate_functions(2, 2, S.SearchFilter(landscape_only=False), counter=counter))
    assert counter["visited"] == len(out) == 256


def test_lexicographic_order():
    tables = _tables(S.enumerate_functions(1, 2, S.SearchFilter(landscape_only=False)))
    assert tables[:3] == [[0, 0], [0, 1], [0, 2]]
    assert tables == sorted(tables)


def test_gbent_count_n1_k2():
    found = list(S.enumerate_functions(1, 2, S.SearchFilter(gbent=True)))
    assert len(found) == 8
    # |H(u)|^2 = 2 everywhere
    assert all(p.levels == frozenset({SpectrumLevel(1, 1)}) for _, p in found)


def test_bent_count_n2():
    assert len(list(S.enumerate_functions(2, 1, S.SearchFilter(gbent=True)))) == 8


def test_no_bent_in_odd_dimension():
    assert list(S.enumerate_functions(3, 1, S.SearchFilter(gbent=True))) == []


def test_plateau_n_gives_affine_top_plane():
    found = list(S.enumerate_functions(2, 2, S.SearchFilter(plateau=2)))
    for f, _ in found:
        # f = const + 2 * (linear)
        diffs = {(f(x) - f(0)) % 4 for x in range(4)}
        assert diffs <= {0, 2}
    assert any(len(set(f.values.tolist())) == 1 for f, _ in found)


def test_filters():
    filt = S.SearchFilter(length=2)
    assert all(p.length == 2 for _, p in S.enumerate_functions(2, 2, filt))
    lv = S.parse_levels("1:1,1:5")
    assert lv == frozenset({SpectrumLevel(1, 1), SpectrumLevel(1, 5)})
    found = list(S.enumerate_functions(3, 2, S.SearchFilter(levels=lv), budget=1 << 16))
    assert found and all(p.levels == lv for _, p in found)
    exc = list(S.enumerate_functions(1, 2, S.SearchFilter(exceptional=True)))
    assert len(exc) == 8  # every n=1, k=2 gbent point has m = 1
    reg = list(S.enumerate_functions(2, 3, S.SearchFilter(regular=True)))
    assert reg and all(C.regularity(f).regular for f, _ in reg)


def test_budget():
    with pytest.raises(S.BudgetExceeded) as info:
        list(S.enumerate_functions(3, 3, budget=1000))
    assert info.value.required == 1 << 24


def test_jobs_invariant():
    filt = S.SearchFilter(length=3)
    one = _tables(S.enumerate_functions(3, 2, filt, budget=1 << 16, jobs=1))
    many = _tables(S.enumerate_functions(3, 2, filt, budget=1 << 16, jobs=3))
    assert one == many and one


def test_sample_reproducible():
    a = _tables(S.sample(4, 2, 300, seed=11))
    b = _tables(S.sample(4, 2, 300, seed=11))
    c = _tables(S.sample(4, 2, 300, seed=12))
    assert a == b and a != c


def test_sample_boolean_all_landscape():
    assert all(p is not None for _, p in S.sample(5, 1, 200, seed=1))


def test_histogram_reproducible():
    h1 = S.length_histogram(S.sample(4, 2, 10_000, seed=3))
    h2 = S.length_histogram(S.sample(4, 2, 10_000, seed=3))
    assert h1 == h2
    assert sum(h1.values()) == 10_000
