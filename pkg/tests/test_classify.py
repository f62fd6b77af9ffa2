import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from landscape import classify as C
from landscape import cyclotomic as cyc
from landscape.classify import SpectrumLevel
from landscape.gbf import GenBoolFn
from landscape.transforms import gwht

from conftest import all_functions, random_functions

GBENT = GenBoolFn(2, 2, [0, 0, 0, 2])


def test_gbent_example():
    p = C.landscape_profile(GBENT)
    assert [lv.as_pair() for lv in p.sorted_levels()] == [[2, 1]]
    assert not p.has_zero and p.length == 1
    assert C.is_gbent(GBENT)
    rep = C.regularity(GBENT)
    assert rep.regular and rep.dual.values.tolist() == [0, 0, 0, 2]


def test_modulus_decomposition():
    assert C.modulus_sq_decompose(72) == (3, 3)
    assert C.modulus_sq_decompose(8) == (3, 1)
    assert C.modulus_sq_decompose(12) is None
    with pytest.raises(ValueError):
        C.modulus_sq_decompose(0)


def test_level_validation():
    with pytest.raises(ValueError):
        SpectrumLevel(2, 2)
    assert SpectrumLevel(3, 3).modulus_sq == 72


def test_pythagorean_reps():
    assert C.pythagorean_reps(25) == [(7, 24), (15, 20)]
    assert C.pythagorean_reps(5) == [(3, 4)]
    assert C.pythagorean_reps(3) == []


@pytest.mark.parametrize("n", [2, 3, 4])
def test_boolean_always_landscape(n):
    for f in random_functions(n, 1, 100, n):
        assert C.landscape_profile(f) is not None


def test_boolean_bent_count_n2():
    assert sum(C.is_gbent(f) for f in all_functions(2, 1)) == 8


def test_affine_is_top_plateau():
    # a constant has one spectral line: |H(0)| = 2^n, s = n
    f = GenBoolFn(3, 3, [5] * 8)
    assert C.plateau_order(f) == 3
    assert not C.is_semibent(f)


def test_non_landscape_detected():
    # |H|^2 with irrational part
    f = GenBoolFn(1, 3, [0, 1])
    assert C.landscape_profile(f) is None
    profile, bad = C.scan_landscape(f)
    assert profile is None and bad == 0
    with pytest.raises(ValueError):
        C.regularity(f)


def test_profiles_batch_matches_single():
    vals = np.array([f.values for f in random_functions(3, 2, 40, 11)])
    batch = C.profiles_batch(vals, 2)
    for row, p in zip(vals, batch):
        assert p == C.landscape_profile(GenBoolFn(3, 2, row))


@given(st.integers(0, 4), st.sampled_from([1, 3, 5, 13, 15, 25, 65]))
def test_gaussian_families_cover_every_representation(j, ell):
    # every a + bi with a^2 + b^2 = 2^m l^2 (m odd) is in one of the two k=2 families
    m = 2 * j + 1
    for a, b in C.gaussian_reps((1 << m) * ell * ell):
        assert C.gaussian_family(a, b, m, ell) is not None, (a, b, m, ell)


def test_finding_unit_family_carries_ell():
    f = GenBoolFn(4, 2, [1, 2, 2, 3, 2, 0, 0, 3, 3, 1, 1, 3, 0, 0, 2, 1])
    e = C.regularity(f).exceptional_points[15]
    assert (e.m, e.ell, e.a, e.b, e.family) == (3, 3, 6, 6, "unit")


def test_unit_family_needs_ell():
    # 3(1+i) has |.|^2 = 2 * 9: only the unit family with the factor l fits
    assert C.gaussian_family(3, 3, 1, 3) == ("unit", (1, 1))
    assert C.gaussian_family(1, 1, 1, 3) is None


@pytest.mark.parametrize("n,k", [(1, 2), (2, 2), (1, 3), (2, 3)])
def test_dual_resubstitution(n, k):
    for f in all_functions(n, k):
        spectrum = gwht(f)
        profile = C.landscape_profile(f, spectrum)
        if profile is None:
            continue
        rep = C.regularity(f, spectrum, profile)
        recon = C.reconstruct_from_dual(rep, profile, k)
        for u in profile.support:
            if recon[u] is not None:
                assert recon[u] == spectrum[u]
        for u, e in rep.exceptional_points.items():
            assert cyc.from_coeffs([e.a, e.b], 2) == spectrum[u]
        assert all(rep.dual(u) == 0 for u in range(f.size) if u not in profile.support)


def test_gbent_regular_or_exceptional_small():
    for n, k in [(1, 2), (2, 2), (1, 3)]:
        for f in all_functions(n, k):
            if not C.is_gbent(f):
                continue
            rep = C.regularity(f)
            assert not rep.irregular_points
            if n % 2 and k == 2:
                assert all(e.family == "unit" for e in rep.exceptional_points.values())


def test_candidates_are_exact():
    lv = SpectrumLevel(3, 1)
    cands = C.regular_candidates(lv, 3)
    assert len(set(cands)) == 8
    assert all(cyc.norm_sq(z) == cyc.scalar(8, 3) for z in cands)


# Findings: landscape functions whose spectrum is not of the predicted form.
# For k=2 and m even the value 2(3+4i) has modulus 2^(2/2) * 5, yet no
# 2 * 5 * i^j equals it; similar points occur at k=3.
IRREGULAR = [
    ((4, 2, [0, 2, 0, 3, 3, 0, 2, 1, 2, 1, 3, 0, 0, 3, 2, 2]), (6, 13)),
    ((4, 2, [0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 3, 1, 0, 0, 0]), (0, 9)),
    ((3, 3, [1, 1, 5, 5, 5, 5, 3, 1]), (6,)),
    ((3, 3, [5, 5, 1, 3, 1, 1, 5, 5]), None),
]


@pytest.mark.parametrize("spec,points", IRREGULAR)
def test_finding_irregular_landscape_points(spec, points):
    f = GenBoolFn(*spec)
    profile = C.landscape_profile(f)
    assert profile is not None
    rep = C.regularity(f)
    assert not rep.regular and rep.irregular_points
    if points is not None:
        assert rep.irregular_points == points
    for u in rep.irregular_points:
        lv = profile.point_levels[u]
        assert C.regular_exponent(gwht(f)[u], lv, f.k) is None
        if f.k == 2 and lv.m % 2:
            value = gwht(f)[u]
            assert C.gaussian_family(*value.coeffs, lv.m, lv.ell) is None


def test_finding_irregular_value():
    f = GenBoolFn(4, 2, [0, 2, 0, 3, 3, 0, 2, 1, 2, 1, 3, 0, 0, 3, 2, 2])
    p = C.landscape_profile(f)
    assert p.point_levels[6] == SpectrumLevel(2, 5)
    a, b = gwht(f)[6].coeffs
    assert a * a + b * b == 100 and {abs(a), abs(b)} == {6, 8}


def test_pythagorean_branch_occurs():
    # n=3, k=2: f = x1 x2 x3 has H(0) = 7 + i, so m = 1 and l = 5
    f = GenBoolFn(3, 2, [0, 0, 0, 0, 0, 0, 0, 1])
    rep = C.regularity(f)
    e = rep.exceptional_points[0]
    assert (e.m, e.ell, e.family) == (1, 5, "pythagorean")
    assert (e.a, e.b) == (7, 1)


def test_level_pairs():
    assert C.level_pairs([SpectrumLevel(3, 1), SpectrumLevel(1, 5)]) == [[1, 5], [3, 1]]


def test_report_json():
    obj = C.regularity(GBENT).to_json_obj()
    assert obj["regular"] is True and obj["irregular_points"] == []
    assert C.landscape_profile(GBENT).to_json_obj()["levels"] == [[2, 1]]
    assert list(itertools.islice(C.landscape_profile(GBENT).support, 2)) == [0, 1]
