import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klm import schur as S
from klm.partition import SkewShape, conjugate, contains, partitions
from klm.schur import (
    CoefficientOverflow,
    SchurVector,
    ZERO,
    ONE,
    e,
    enumerate_lr_tableaux,
    h,
    is_lattice_word,
    lr_coefficient,
    lr_product,
    pieri_e,
    pieri_h,
    schur,
    skew_schur_expand,
)
from oracles import lr_by_polynomials

SMALL = [p for n in range(9) for p in partitions(n)]


def sv(*terms):
    return SchurVector(dict(terms))


# strategies -------------------------------------------------------------------

partition_st = st.sampled_from([p for n in range(6) for p in partitions(n)])
vector_st = st.dictionaries(partition_st, st.integers(-3, 3), max_size=3).map(SchurVector)


# construction -----------------------------------------------------------------

def test_zero_terms_dropped():
    v = sv(((2, 1), 1), ((3,), 0))
    assert len(v) == 1
    assert (v - v) == 0
    assert (v - v) == ZERO


def test_overflow_is_loud():
    big = schur((1,), 2**62)
    with pytest.raises(CoefficientOverflow):
        big + big
    with pytest.raises(CoefficientOverflow):
        schur((1,), 2**63)


def test_canonical_order_and_json():
    v = sv(((1, 1, 1), 2), ((3,), 1), ((2, 1), -1), ((1,), 4))
    assert [tuple(p) for p in v.partitions()] == [(3,), (2, 1), (1, 1, 1), (1,)]
    assert v.to_text() == "s(3) - s(2,1) + 2·s(1,1,1) + 4·s(1)"
    assert v.to_latex() == "s_{(3)} - s_{(2,1)} + 2s_{(1,1,1)} + 4s_{(1)}"
    data = json.loads(json.dumps(v.to_json()))
    assert data[0] == {"partition": [3], "coeff": 1}
    assert SchurVector.from_json(data) == v


# Pieri ------------------------------------------------------------------------

def test_pieri_examples():
    assert pieri_h(schur((2, 1)), 0) == schur((2, 1))
    assert pieri_e(schur((2, 1)), 1) == sv(((3, 1), 1), ((2, 2), 1), ((2, 1, 1), 1))
    # the vertical-difference identity at m=2, i=0, j=2
    assert pieri_e(schur((2, 1)), 1) - schur((2, 1, 1)) == sv(((3, 1), 1), ((2, 2), 1))


def test_pieri_h_contains_shifted_terms():
    # s_(n) s_(m,2^j) contains s_(m+n-x, 2+x, 2^(j-1)) for 0 <= x <= min(m-2, n)
    for m, n, j in [(3, 2, 1), (4, 3, 2), (5, 1, 1)]:
        prod = pieri_h(schur((m,) + (2,) * j), n)
        for x in range(min(m - 2, n) + 1):
            assert prod[(m + n - x, 2 + x) + (2,) * (j - 1)] == 1


def test_pieri_matches_lr_exhaustive():
    for lam in SMALL:
        f = schur(lam)
        for i in range(5):
            assert pieri_h(f, i) == lr_product(f, h(i)) == lr_product(h(i), f), (lam, i)
            assert pieri_e(f, i) == lr_product(f, e(i)) == lr_product(e(i), f), (lam, i)


# LR products ------------------------------------------------------------------

def test_lr_21_squared():
    want = sv(
        ((4, 2), 1), ((4, 1, 1), 1), ((3, 3), 1), ((3, 2, 1), 2),
        ((3, 1, 1, 1), 1), ((2, 2, 2), 1), ((2, 2, 1, 1), 1),
    )
    assert schur((2, 1)) * schur((2, 1)) == want
    # s_(2,1) = s_(2) s_(1) - s_(3), multiplied out with Pieri only
    s21 = pieri_h(schur((1,)), 2) - schur((3,))
    square = pieri_h(pieri_h(s21, 1), 2) - pieri_h(s21, 3)
    assert square == want


def test_lr_identity():
    for lam in SMALL[:20]:
        assert schur(lam) * ONE == schur(lam)
        assert ONE * schur(lam) == schur(lam)


def test_lr_matches_polynomial_oracle():
    # independent expansion by antisymmetrization in enough variables
    pairs = [(mu, nu) for mu in SMALL for nu in SMALL if 1 <= sum(mu) + sum(nu) <= 6]
    for mu, nu in pairs:
        got = dict(S.lr_coefficients(mu, nu))
        assert got == lr_by_polynomials(mu, nu), (mu, nu)


@settings(max_examples=60, deadline=None)
@given(vector_st, vector_st)
def test_lr_commutative(f, g):
    assert f * g == g * f


@settings(max_examples=40, deadline=None)
@given(vector_st, vector_st, vector_st)
def test_lr_associative(f, g, k):
    assert (f * g) * k == f * (g * k)


@settings(max_examples=40, deadline=None)
@given(vector_st, vector_st, vector_st)
def test_lr_distributive(f, g, k):
    assert f * (g + k) == f * g + f * k


def test_lr_symmetry_and_conjugation():
    for mu in SMALL[:25]:
        for nu in SMALL[:25]:
            a = dict(S.lr_coefficients(mu, nu))
            assert a == dict(S.lr_coefficients(nu, mu))
            b = {tuple(conjugate(lam)): c for lam, c in S.lr_coefficients(conjugate(mu), conjugate(nu)).items()}
            assert a == b


def test_kernels_agree(kernel):
    from klm import _lrpy

    for mu in SMALL[:30]:
        for nu in SMALL[:30]:
            if sum(mu) + sum(nu) <= 9:
                assert kernel.lr_mult(mu, nu) == _lrpy.lr_mult(mu, nu)


def test_pure_python_switch():
    out = subprocess.run(
        [sys.executable, "-c", "from klm import schur; print(schur.KERNEL)"],
        env={**os.environ, "KLM_PURE_PYTHON": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


# skew expansion -----------------------------------------------------------------

def test_skew_examples():
    assert skew_schur_expand(SkewShape((2, 1), (1,))) == sv(((2,), 1), ((1, 1), 1))
    assert skew_schur_expand(SkewShape((3, 2, 1))) == schur((3, 2, 1))
    shape7555 = skew_schur_expand(SkewShape((7, 5, 5, 5), (3, 3, 3)))
    assert shape7555 == sv(((7, 2, 2, 2), 1), ((6, 3, 2, 2), 1), ((5, 4, 2, 2), 1))


def test_skew_matches_products():
    # c^lam_{mu,nu} read two ways: from the skew shape and from the product
    for lam in [p for n in range(1, 8) for p in partitions(n)]:
        for mu in SMALL:
            if sum(mu) <= sum(lam) and contains(lam, mu):
                exp = skew_schur_expand(SkewShape(lam, mu))
                assert all(c > 0 for c in exp.coefficients())
                for nu, c in exp.items():
                    assert S.lr_coefficients(mu, nu)[lam] == c
                    assert lr_coefficient(lam, mu, nu) == c


def test_skew_kernels_agree(kernel):
    from klm import _lrpy

    for lam in [p for n in range(1, 8) for p in partitions(n)]:
        for mu in SMALL:
            if sum(mu) <= sum(lam) and contains(lam, mu):
                assert kernel.lr_skew(lam, mu) == _lrpy.lr_skew(lam, mu)


# tableaux -----------------------------------------------------------------------

def test_skew_7555_tableaux_one_per_type():
    s = SkewShape((7, 5, 5, 5), (3, 3, 3))
    for content in [(7, 2, 2, 2), (6, 3, 2, 2), (5, 4, 2, 2)]:
        (t,) = enumerate_lr_tableaux(s, content)
        assert is_lattice_word(t.reverse_reading_word())
    (t,) = enumerate_lr_tableaux(s, (7, 2, 2, 2))
    assert t.rows == ((1, 1, 1, 1), (2, 2), (3, 3), (1, 1, 1, 4, 4))
    assert enumerate_lr_tableaux(s, (4, 4, 4, 1)) == []


def test_reading_word_2111_comes_from_a_non_lr_filling():
    # rows read right to left, top to bottom, give 2111 22 33 44221
    rows = [(1, 1, 1, 2), (2, 2), (3, 3), (1, 2, 2, 4, 4)]
    word = [x for r in rows for x in reversed(r)]
    assert word == [2, 1, 1, 1, 2, 2, 3, 3, 4, 4, 2, 2, 1]
    assert not is_lattice_word(word)
    # changing the first row's last entry to 1 gives a genuine LR tableau of content (5,4,2,2)
    lr = SkewShape((7, 5, 5, 5), (3, 3, 3))
    tabs = enumerate_lr_tableaux(lr, (5, 4, 2, 2))
    assert ((1, 1, 1, 1), (2, 2), (3, 3), (1, 2, 2, 4, 4)) in [t.rows for t in tabs]


def test_small_tableaux():
    assert len(enumerate_lr_tableaux(SkewShape((1,)), (1,))) == 1
    (t,) = enumerate_lr_tableaux(SkewShape((2, 2), (1,)), (2, 1))
    assert t.rows == ((1,), (1, 2))
    with pytest.raises(ValueError):
        enumerate_lr_tableaux(SkewShape((2, 2), (1,)), (2,))


def test_tableaux_count_equals_coefficient():
    for lam in [p for n in range(1, 8) for p in partitions(n)]:
        for mu in SMALL[:12]:
            if sum(mu) <= sum(lam) and contains(lam, mu):
                sh = SkewShape(lam, mu)
                exp = skew_schur_expand(sh)
                for nu in partitions(sh.size):
                    assert len(enumerate_lr_tableaux(sh, nu)) == exp[nu]


def test_tableau_order_is_lexicographic():
    s = SkewShape((4, 3, 2), (2, 1))
    tabs = enumerate_lr_tableaux(s, (3, 2, 1))
    keys = [t.rows for t in tabs]
    assert keys == sorted(keys)
    assert len(keys) == 2


def test_lattice_words():
    assert is_lattice_word([1, 1, 2, 1, 2, 3])
    assert not is_lattice_word([1, 2, 2])
    assert not is_lattice_word([2, 1, 1, 1, 2, 2, 3, 3, 4, 4, 2, 2, 1])
    assert is_lattice_word([])
    with pytest.raises(ValueError):
        is_lattice_word([0])
