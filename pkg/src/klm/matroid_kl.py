"""Equivariant KL, inverse KL and characteristic polynomials of uniform matroids.

Everything is computed in the Frobenius image: a polynomial in ``t`` whose
coefficients are Schur vectors of size ``m + d`` for ``S_{m+d}`` acting on
``U_{m,d}``. The Boolean matroid ``B_n`` is ``U_{0,n}``.

Two routes are provided for each polynomial and cross-checked in the tests:

* closed forms (Schur expansions given in the literature), and
* recursive solvers for the defining relations. Each relation has the shape
  ``X - t^r X(1/t) = S`` (or ``t^r X(1/t) - X = S``) where ``S`` only involves
  smaller matroids. Since ``deg X < r/2``, ``X`` is the part of ``+-S`` in
  degrees ``j`` with ``2j < r``; the solution is then substituted back into
  the full relation, which catches a nonzero middle coefficient of ``S``
  when ``r`` is even.

Public results use ``Q``; ``Q_hat = (-1)^rank Q`` only appears inside the
recurrences.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Hashable

from .graded import (
    GradedSchurVector,
    IntPolynomial,
    UNIT,
    dimension_poly,
    reciprocal_shift,
    truncate_strictly_below,
)
from .partition import SkewShape, compact_partition, skew_syt_count
from .schur import ONE, SchurVector, e, schur, skew_schur_expand


class InternalInconsistency(RuntimeError):
    """A solved recurrence failed substitution back into its defining relation."""


@dataclass(frozen=True)
class MatroidId:
    """``U_{m,d}``: rank ``d`` on ``m + d`` elements; ``B_n`` is ``U_{0,n}``.

    Equality ignores the family label, so ``boolean(n) == uniform(0, n)``.
    """

    m: int
    d: int
    family: str = field(default="uniform", compare=False)

    def __post_init__(self):
        if self.m < 0 or self.d < 0:
            raise ValueError("m and d must be nonnegative")
        if self.family not in ("uniform", "boolean"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "boolean" and self.m != 0:
            raise ValueError("a Boolean matroid has m = 0")

    @classmethod
    def boolean(cls, n: int) -> "MatroidId":
        return cls(0, n, "boolean")

    @classmethod
    def uniform(cls, m: int, d: int) -> "MatroidId":
        return cls(m, d, "uniform")

    @property
    def rank(self) -> int:
        return self.d

    @property
    def ground_size(self) -> int:
        return self.m + self.d

    def label(self) -> str:
        if self.family == "boolean":
            return f"B({self.d})"
        return f"U({self.m},{self.d})"

    def to_json(self) -> dict:
        if self.family == "boolean":
            return {"family": "boolean", "n": self.d}
        return {"family": "uniform", "m": self.m, "d": self.d}


# memo table --------------------------------------------------------------

_memo: dict[Hashable, object] = {}
_memo_lock = threading.Lock()


def _cached(key: Hashable, compute: Callable[[], object]):
    # compute outside the lock (recursion re-enters); first insert wins
    with _memo_lock:
        if key in _memo:
            return _memo[key]
    value = compute()
    with _memo_lock:
        return _memo.setdefault(key, value)


def clear_cache() -> None:
    with _memo_lock:
        _memo.clear()


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _term(*blocks: tuple[int, int]) -> SchurVector:
    p = compact_partition(*blocks)
    return SchurVector() if p is None else schur(p)


# characteristic polynomials ---------------------------------------------

def char_boolean(n: int) -> GradedSchurVector:
    """``ch H_{B_n} = h_n[(t-1)X] = sum_{a+b=n} t^a (-1)^b s_(a) s_(1^b)``.

    The products are hooks by the Pieri rule:
    ``s_(a) s_(1^b) = s_(a+1,1^(b-1)) + s_(a,1^b)`` for ``a, b >= 1``.
    """
    _require(n >= 1, "char_boolean needs n >= 1")

    def compute():
        acc = {}
        for a in range(n + 1):
            b = n - a
            if a == 0:
                prod = e(b)
            elif b == 0:
                prod = schur((a,))
            else:
                prod = _term((a + 1, 1), (1, b - 1)) + _term((a, 1), (1, b))
            acc[a] = prod.scale((-1) ** b)
        return GradedSchurVector(acc)

    return _cached(("H", 0, n, "boolean"), compute)


def char_uniform(m: int, d: int) -> GradedSchurVector:
    """Schur expansion of ``ch H_{U_{m,d}}``::

        sum_{j=0}^{d-1} (-1)^j t^(d-j) (s_(m+d-j,1^j) + s_(m+d-j+1,1^(j-1)))
            + (-1)^d s_(m+1,1^(d-1))

    where ``s_(m+d+1,1^-1)`` (the ``j = 0`` second term) vanishes.
    """
    _require(m >= 0 and d >= 1, "char_uniform needs m >= 0, d >= 1")

    def compute():
        acc = {}
        for j in range(d):
            v = _term((m + d - j, 1), (1, j)) + _term((m + d - j + 1, 1), (1, j - 1))
            acc[d - j] = v.scale((-1) ** j)
        acc[0] = _term((m + 1, 1), (1, d - 1)).scale((-1) ** d)
        return GradedSchurVector(acc)

    return _cached(("H", m, d), compute)


# inverse KL polynomials ---------------------------------------------------

def q_hat_boolean(n: int) -> GradedSchurVector:
    """``ch Q_hat_{B_n} = (-1)^n e_n`` (constant)."""
    _require(n >= 0, "n must be nonnegative")
    return GradedSchurVector.constant(e(n).scale((-1) ** n))


def q_hat_boolean_recursive(n: int) -> GradedSchurVector:
    """Solve ``Q(t) - t^n Q(1/t) = sum_{i<n} t^i Q_{B_i}(1/t) h_{n-i}[(t-1)X]``."""
    _require(n >= 0, "n must be nonnegative")
    if n == 0:
        return UNIT

    def compute():
        rhs = GradedSchurVector()
        for i in range(n):
            rhs = rhs + reciprocal_shift(q_hat_boolean_recursive(i), i) * char_boolean(n - i)
        q = truncate_strictly_below(rhs, n)
        if q - reciprocal_shift(q, n) != rhs:
            raise InternalInconsistency(f"inverse KL recursion for B({n}) does not close")
        return q

    return _cached(("Qhat-rec", 0, n, "boolean"), compute)


def q_hat_uniform_recursive(m: int, d: int) -> GradedSchurVector:
    """Solve ``Q(t) - t^d Q(1/t) = sum_{i<d} t^i Q_{B_i}(1/t) ch H_{U_{m,d-i}}(t)``.

    Flats of rank ``i < d`` localize to ``B_i`` and contract to ``U_{m,d-i}``;
    the ground set contributes the ``t^d Q(1/t)`` term.
    """
    _require(m >= 0 and d >= 1, "need m >= 0, d >= 1")

    def compute():
        rhs = GradedSchurVector()
        for i in range(d):
            rhs = rhs + reciprocal_shift(q_hat_boolean_recursive(i), i) * char_uniform(m, d - i)
        q = truncate_strictly_below(rhs, d)
        if q - reciprocal_shift(q, d) != rhs:
            raise InternalInconsistency(f"inverse KL recursion for U({m},{d}) does not close")
        return q

    return _cached(("Qhat-rec", m, d), compute)


def q_uniform_closed(m: int, d: int) -> GradedSchurVector:
    """``ch Q_{U_{m,d}} = sum_j s_(m+1,2^j,1^(d-2j-1)) t^j`` over ``0 <= j <= (d-1)/2``;
    terms whose index is not a partition are dropped."""
    _require(m >= 0 and d >= 1, "need m >= 0, d >= 1")
    return GradedSchurVector(
        {j: _term((m + 1, 1), (2, j), (1, d - 2 * j - 1)) for j in range((d - 1) // 2 + 1)}
    )


def q_uniform_recursive(m: int, d: int) -> GradedSchurVector:
    return q_hat_uniform_recursive(m, d).scale((-1) ** d)


def q_boolean(n: int) -> GradedSchurVector:
    return q_hat_boolean(n).scale((-1) ** n)


def q_boolean_recursive(n: int) -> GradedSchurVector:
    return q_hat_boolean_recursive(n).scale((-1) ** n)


# KL polynomials -------------------------------------------------------------

def p_boolean(n: int) -> GradedSchurVector:
    _require(n >= 0, "n must be nonnegative")
    return GradedSchurVector.constant(schur((n,)) if n else ONE)


def p_boolean_recursive(n: int) -> GradedSchurVector:
    """Solve ``t^n P(1/t) - P(t) = sum_{i=1}^n ch H_{B_i} P_{B_{n-i}}``.

    The ``i = 0`` flat (empty set) contributes ``P`` itself, which is moved to
    the left-hand side.
    """
    _require(n >= 0, "n must be nonnegative")
    if n == 0:
        return UNIT

    def compute():
        rhs = GradedSchurVector()
        for i in range(1, n + 1):
            rhs = rhs + char_boolean(i) * p_boolean_recursive(n - i)
        p = truncate_strictly_below(-rhs, n)
        if reciprocal_shift(p, n) - p != rhs:
            raise InternalInconsistency(f"KL recursion for B({n}) does not close")
        return p

    return _cached(("P-rec", 0, n, "boolean"), compute)


def p_uniform_recursive(m: int, d: int) -> GradedSchurVector:
    """Solve ``t^d P(1/t) - P(t) = sum_{i=1}^{d-1} ch H_{B_i} P_{U_{m,d-i}} + ch H_{U_{m,d}}``."""
    _require(m >= 0 and d >= 1, "need m >= 0, d >= 1")

    def compute():
        rhs = char_uniform(m, d)
        for i in range(1, d):
            rhs = rhs + char_boolean(i) * p_uniform_recursive(m, d - i)
        p = truncate_strictly_below(-rhs, d)
        if reciprocal_shift(p, d) - p != rhs:
            raise InternalInconsistency(f"KL recursion for U({m},{d}) does not close")
        return p

    return _cached(("P-rec", m, d), compute)


def p_uniform_closed(m: int, d: int) -> GradedSchurVector:
    """``s_(m+d) + sum_{j>=1} t^j sum_{x=1}^{min(m, d-2j)} s_(m+d-2j-x+1, x+1, 2^(j-1))``."""
    _require(m >= 0 and d >= 1, "need m >= 0, d >= 1")
    acc = {0: schur((m + d,))}
    for j in range(1, (d - 1) // 2 + 1):
        v = SchurVector()
        for x in range(1, min(m, d - 2 * j) + 1):
            v = v + _term((m + d - 2 * j - x + 1, 1), (x + 1, 1), (2, j - 1))
        acc[j] = v
    return GradedSchurVector(acc)


def skew_shape_for(m: int, d: int, j: int) -> SkewShape:
    """``(m+d-2j, (d-2j+1)^j) / ((d-2j-1)^j)``."""
    outer = [m + d - 2 * j] + [d - 2 * j + 1] * j
    inner = [d - 2 * j - 1] * j
    return SkewShape(outer, inner)


def p_uniform_skew(m: int, d: int) -> GradedSchurVector:
    """KL polynomial as a sum of skew Schur functions, one per power of ``t``."""
    _require(m >= 1 and d >= 1, "the skew form needs m >= 1, d >= 1")
    return GradedSchurVector(
        {j: skew_schur_expand(skew_shape_for(m, d, j)) for j in range((d - 1) // 2 + 1)}
    )


def verify_orthogonality(m: int, d: int, method: str = "closed") -> GradedSchurVector:
    """``sum_{i<d} ch P_{B_i} ch Q_hat_{U_{m,d-i}} + ch P_{U_{m,d}}``; zero when P and Q agree.

    ``method`` picks closed forms or the recursive solvers for all three inputs.
    """
    _require(m >= 0 and d >= 1, "need m >= 0, d >= 1")
    if method == "closed":
        pb, qh, pu = p_boolean, lambda mm, dd: q_uniform_closed(mm, dd).scale((-1) ** dd), p_uniform_closed
    elif method == "recursive":
        pb, qh, pu = p_boolean_recursive, q_hat_uniform_recursive, p_uniform_recursive
    else:
        raise ValueError(f"unknown method {method!r}")
    total = pu(m, d)
    for i in range(d):
        total = total + pb(i) * qh(m, d - i)
    return total


# ordinary (non-equivariant) KL polynomials --------------------------------

def ordinary_kl(m: int, d: int) -> IntPolynomial:
    """Dimension specialization of the closed-form equivariant KL polynomial."""
    return dimension_poly(p_uniform_closed(m, d))


def ordinary_kl_skew(m: int, d: int) -> IntPolynomial:
    """Coefficients as skew SYT counts; for ``m = 0`` the polynomial is 1."""
    _require(m >= 0 and d >= 1, "need m >= 0, d >= 1")
    if m == 0:
        return IntPolynomial([1])
    return IntPolynomial([skew_syt_count(skew_shape_for(m, d, j)) for j in range((d - 1) // 2 + 1)])


def char_poly_uniform_scalar(m: int, d: int) -> IntPolynomial:
    """``chi_{U_{m,d}}(t) = sum_{i<d} (-1)^i C(m+d, i) (t^(d-i) - 1)``.

    Every ``i``-subset with ``i < d`` is a flat and independent, so the
    Whitney sum only sees those plus the ground set.
    """
    n = m + d
    acc: dict[int, int] = {}
    for i in range(d):
        c = (-1) ** i * comb(n, i)
        acc[d - i] = acc.get(d - i, 0) + c
        acc[0] = acc.get(0, 0) - c
    return IntPolynomial(acc)


def ordinary_kl_oracle(m: int, d: int) -> IntPolynomial:
    """Scalar KL recursion with no Schur functions:

    ``t^d P(1/t) - P(t) = sum_{i=1}^{d-1} C(m+d, i) (t-1)^i P_{U_{m,d-i}}(t) + chi_{U_{m,d}}(t)``.
    """
    _require(m >= 0 and d >= 1, "need m >= 0, d >= 1")

    def compute():
        rhs = char_poly_uniform_scalar(m, d)
        t_minus_1 = IntPolynomial([-1, 1])
        power = IntPolynomial([1])
        for i in range(1, d):
            power = power * t_minus_1
            rhs = rhs + power * ordinary_kl_oracle(m, d - i) * comb(m + d, i)
        p = (-rhs).truncate_strictly_below(d)
        if p.reciprocal_shift(d) - p != rhs:
            raise InternalInconsistency(f"scalar KL recursion for U({m},{d}) does not close")
        return p

    return _cached(("P-scalar", m, d), compute)
