import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from landscape import cyclotomic as cyc
from landscape.cyclotomic import CycInt, LevelMismatch

small = st.integers(-50, 50)


@st.composite
def elements(draw, k=None):
    k = k if k is not None else draw(st.integers(1, 6))
    h = 1 << (k - 1)
    return cyc.from_coeffs(draw(st.lists(small, min_size=h, max_size=h)), k)


@st.composite
def triples(draw):
    k = draw(st.integers(1, 6))
    return tuple(draw(elements(k)) for _ in range(3))


@given(triples())
def test_ring_axioms(t):
    a, b, c = t
    k = a.level_exp
    one, zero = cyc.scalar(1, k), cyc.zero(k)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * one == a and a + zero == a
    assert a - a == zero


@given(triples())
def test_conj_is_involutive_ring_automorphism(t):
    a, b, _ = t
    assert cyc.conj(cyc.conj(a)) == a
    assert cyc.conj(a * b) == cyc.conj(a) * cyc.conj(b)
    assert cyc.conj(a + b) == cyc.conj(a) + cyc.conj(b)


@given(triples())
def test_norm_sq_is_multiplicative_and_real(t):
    a, b, _ = t
    assert cyc.norm_sq(a * b) == cyc.norm_sq(a) * cyc.norm_sq(b)
    assert cyc.conj(cyc.norm_sq(a)) == cyc.norm_sq(a)


@settings(max_examples=50)
@given(elements())
def test_to_complex_matches_exact_norm(a):
    # display rendering only, compared loosely
    assert abs(abs(a.to_complex()) ** 2 - cyc.norm_sq(a).to_complex().real) < 1e-6 * (1 + abs(a.to_complex()) ** 2)


@pytest.mark.parametrize("k", range(1, 7))
def test_monomials_cycle(k):
    q = 1 << k
    z = cyc.monomial(1, k)
    acc = cyc.scalar(1, k)
    for j in range(2 * q):
        assert acc == cyc.monomial(j % q, k)
        acc = acc * z
    assert cyc.monomial(q >> 1, k) == cyc.scalar(-1, k)
    assert cyc.norm_sq(z) == cyc.scalar(1, k)


@pytest.mark.parametrize("k", range(3, 7))
def test_sqrt2_squares_to_two(k):
    r = cyc.sqrt2_element(k)
    assert r * r == cyc.scalar(2, k)
    assert abs(r.to_complex() - 2 ** 0.5) < 1e-12


def test_sqrt2_absent_below_level_three():
    for k in (1, 2):
        with pytest.raises(ValueError):
            cyc.sqrt2_element(k)


@pytest.mark.parametrize("k", range(2, 7))
def test_gauss_sum(k):
    g = cyc.gauss_sum(k)
    assert cyc.norm_sq(g) == cyc.scalar(1 << (k + 1), k)
    expected = 2 ** (k / 2) * (1 + 1j)
    assert abs(g.to_complex() - expected) < 1e-9


def test_level_mismatch():
    with pytest.raises(LevelMismatch):
        cyc.scalar(1, 2) + cyc.scalar(1, 3)


def test_exponent_counts():
    # 2 + zeta^1 + 3 zeta^3 with zeta^2 = -1 (k=2)
    z = cyc.from_exponent_counts([2, 1, 0, 3], 2)
    assert z.coeffs == (2, -2)


def test_str_renders_coefficients():
    assert "ζ" in str(cyc.from_coeffs([1, 2], 2))


@given(st.integers(1, 5), st.integers(0, 2**31))
def test_array_forms_match_scalar(k, seed):
    rng = np.random.default_rng(seed)
    h = 1 << (k - 1)
    a = rng.integers(-9, 10, (6, h))
    b = rng.integers(-9, 10, (6, h))
    prod = cyc.mul_array(a, b)
    norms = cyc.norm_sq_array(a)
    conj = cyc.conj_array(a)
    for i in range(6):
        x, y = cyc.from_coeffs(a[i].tolist(), k), cyc.from_coeffs(b[i].tolist(), k)
        assert tuple(prod[i].tolist()) == (x * y).coeffs
        assert tuple(norms[i].tolist()) == cyc.norm_sq(x).coeffs
        assert tuple(conj[i].tolist()) == cyc.conj(x).coeffs


def test_immutable():
    z = cyc.scalar(3, 2)
    with pytest.raises(Exception):
        z.coeffs = (0, 0)
    assert isinstance(z, CycInt)
    assert hash(z) == hash(cyc.scalar(3, 2))
    assert cmath.isclose(z.to_complex(), 3)
