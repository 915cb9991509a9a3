"""Acceptance criteria, each timed against its limit.

Every criterion records one PASS/FAIL line; the lines are printed in the
terminal summary (see conftest.py) and also when this file is run directly.
"""

import random
import time
from math import factorial

import pytest

from klm import matroid_kl as kl
from klm import partition
from klm import schur as S
from klm.graded import dimension_poly
from klm.partition import SkewShape, conjugate, partitions, skew_syt_count, syt_count
from klm.schur import SchurVector, e, enumerate_lr_tableaux, h, pieri_e, pieri_h, schur, skew_schur_expand
from klm.verify import identity_cases, identity_e_difference

pytestmark = pytest.mark.acceptance

RESULTS: list[str] = []

SWEEP = [(m, d) for m in range(6) for d in range(1, 11)]


def cold():
    kl.clear_cache()
    S.lr_coefficients.cache_clear()
    S._skew.cache_clear()
    partition._syt_count.cache_clear()


def judge(number, title, limit, check):
    cold()
    start = time.perf_counter()
    failures = check()
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < limit
    status = "PASS" if ok else "FAIL"
    detail = f"{elapsed:.2f}s / limit {limit:.0f}s"
    if failures:
        detail += f"; {len(failures)} mismatches, first: {failures[0]}"
    RESULTS.append(f"{status} [{number}] {title} ({detail})")
    assert not failures, failures[:3]
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


# 1 --------------------------------------------------------------------------------------

def check_inverse_kl_uniform():
    return [
        (m, d) for m, d in SWEEP
        if kl.q_hat_uniform_recursive(m, d) != kl.q_uniform_closed(m, d).scale((-1) ** d)
    ]


def test_inverse_kl_uniform_closed_form():
    judge(1, "inverse KL of U(m,d): recursion = signed closed form, m<=5, d<=10", 30, check_inverse_kl_uniform)


# 2 --------------------------------------------------------------------------------------

def check_kl_uniform():
    bad = []
    for m, d in SWEEP:
        closed = kl.p_uniform_closed(m, d)
        if kl.p_uniform_recursive(m, d) != closed:
            bad.append(("recursive", m, d))
        if m >= 1 and kl.p_uniform_skew(m, d) != closed:
            bad.append(("skew", m, d))
    return bad


def test_kl_uniform_closed_and_skew_forms():
    judge(2, "KL of U(m,d): recursion = closed form = skew form, m<=5, d<=10", 60, check_kl_uniform)


# 3 --------------------------------------------------------------------------------------

def check_boolean():
    bad = []
    for n in range(11):
        if kl.q_hat_boolean_recursive(n) != kl.GradedSchurVector.constant(e(n).scale((-1) ** n)):
            bad.append(("Q", n))
        if kl.p_boolean_recursive(n) != kl.GradedSchurVector.constant(h(n)):
            bad.append(("P", n))
    return bad


def test_boolean_recursions():
    judge(3, "Boolean B(n): inverse KL = (-1)^n s(1^n), KL = s(n), n<=10", 5, check_boolean)


# 4 --------------------------------------------------------------------------------------

def check_orthogonality():
    return [
        (method, m, d)
        for method in ("closed", "recursive")
        for m, d in SWEEP
        if kl.verify_orthogonality(m, d, method) != 0
    ]


def test_orthogonality_sweep():
    judge(4, "orthogonality of P and inverse KL vanishes, m<=5, d<=10", 30, check_orthogonality)


# 5 --------------------------------------------------------------------------------------

def check_lemmas():
    bad = []
    for m in range(9):
        lhs, rhs = identity_e_difference(m)
        if lhs != rhs:
            bad.append(f"e-difference m={m}")
    for label, thunk in identity_cases():
        lhs, rhs = thunk()
        if lhs != rhs:
            bad.append(label)
    return bad


def test_lemma_sweeps():
    judge(5, "symmetric-function identities (plethystic e_m, vertical strips, alternating sums)", 10, check_lemmas)


# 6 --------------------------------------------------------------------------------------

def check_skew_7555():
    shape = SkewShape((7, 5, 5, 5), (3, 3, 3))
    types = [(7, 2, 2, 2), (6, 3, 2, 2), (5, 4, 2, 2)]
    bad = []
    want = SchurVector({t: 1 for t in types})
    got = skew_schur_expand(shape)
    if got != want:
        bad.append(f"expansion {got!r}")
    for t in types:
        n = len(enumerate_lr_tableaux(shape, t))
        if n != 1:
            bad.append(f"{n} tableaux of type {t}")
    return bad


def test_skew_spot_check():
    judge(6, "(7,5,5,5)/(3,3,3) expands to three Schur terms, one LR tableau each", 1, check_skew_7555)


# 7 --------------------------------------------------------------------------------------

def check_ordinary_kl():
    bad = []
    for m in range(7):
        for d in range(1, 9):
            p = kl.ordinary_kl(m, d)
            if p != kl.ordinary_kl_oracle(m, d):
                bad.append(("oracle", m, d))
            if m >= 1:
                for j in range((d - 1) // 2 + 1):
                    if p[j] != skew_syt_count(kl.skew_shape_for(m, d, j)):
                        bad.append(("skew SYT", m, d, j))
    return bad


def test_ordinary_kl_oracle():
    judge(7, "ordinary KL = scalar oracle and skew SYT counts, m<=6, d<=8", 30, check_ordinary_kl)


# 8 --------------------------------------------------------------------------------------

def _random_vector(rng, pool):
    return SchurVector({rng.choice(pool): rng.randint(-3, 3) for _ in range(rng.randint(1, 3))})


def check_properties():
    bad = []
    rng = random.Random(20240615)
    small = [p for n in range(9) for p in partitions(n)]
    tiny = [p for n in range(5) for p in partitions(n)]

    for _ in range(200):
        f, g = _random_vector(rng, small[:40]), _random_vector(rng, small[:40])
        if f * g != g * f:
            bad.append(("commutativity", f, g))
    for _ in range(60):
        f, g, k = (_random_vector(rng, tiny) for _ in range(3))
        if (f * g) * k != f * (g * k):
            bad.append(("associativity", f, g, k))

    for lam in small:
        f = schur(lam)
        for i in range(5):
            if pieri_h(f, i) != f * h(i) or pieri_e(f, i) != f * e(i):
                bad.append(("pieri", lam, i))

    for n in range(31):
        for p in partitions(n):
            if conjugate(conjugate(p)) != p:
                bad.append(("conjugation", p))

    for n in range(11):
        if sum(syt_count(p) ** 2 for p in partitions(n)) != factorial(n):
            bad.append(("RSK", n))

    for m, d in SWEEP:
        outputs = [
            kl.p_uniform_closed(m, d), kl.p_uniform_recursive(m, d),
            kl.q_uniform_closed(m, d), kl.q_uniform_recursive(m, d),
        ]
        if m >= 1:
            outputs.append(kl.p_uniform_skew(m, d))
        for f in outputs:
            if any(c < 0 for _, v in f.items() for c in v.coefficients()):
                bad.append(("nonnegativity", m, d))
            if 2 * f.degree() >= d:
                bad.append(("degree bound", m, d))
        for f in outputs + [kl.char_uniform(m, d)]:
            if any(sum(p) != m + d for p in f.all_partitions()):
                bad.append(("homogeneity", m, d))
        if dimension_poly(kl.char_uniform(m, d))(1) != 0:
            bad.append(("chi(1)", m, d))
    return bad


def test_property_suites():
    judge(8, "LR ring laws, Pieri = LR, conjugation, RSK, P/Q positivity, degree, homogeneity", 60, check_properties)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    for line in sorted(RESULTS, key=lambda s: int(s.split("[")[1].split("]")[0])):
        print(line)
