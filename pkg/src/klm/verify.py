"""Verification suites run by ``klm verify``.

Each suite returns a :class:`SuiteResult` holding the number of checks made
and the failing cases (empty when the suite passes). Per-cell checks may run
on a thread pool; results are collected in key order so output does not
depend on scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import matroid_kl as kl
from .graded import Alphabet, GradedSchurVector, e_plethysm, h_plethysm
from .partition import compact_partition
from .schur import SchurVector, e, pieri_e, pieri_h, schur

SUITES = (
    "lemmas",
    "recursion-vs-closed",
    "orthogonality",
    "skew-vs-closed",
    "oracle",
    "nonnegativity",
    "degree-bounds",
    "homogeneity",
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def worker_count() -> int:
    raw = os.environ.get("KLM_THREADS")
    if raw:
        try:
            n = int(raw)
        except ValueError:
            n = 0
        if n >= 1:
            return n
    return os.cpu_count() or 1


def fan_out(fn: Callable, keys: Iterable) -> list:
    """``[fn(k) for k in keys]``, possibly on worker threads, in key order."""
    keys = list(keys)
    n = min(worker_count(), max(1, len(keys)))
    if n == 1:
        return [fn(k) for k in keys]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, keys))


def _s(*blocks) -> SchurVector:
    p = compact_partition(*blocks)
    return SchurVector() if p is None else schur(p)


# symmetric-function identities ---------------------------------------------

def identity_e_difference(m: int) -> tuple[GradedSchurVector, GradedSchurVector]:
    """``sum_j (-1)^(m-j) e_j[tX] h_(m-j)[(t-1)X]`` against ``e_m``.

    This is ``e_m[E - F]`` with ``E = tX`` and ``F = (t-1)X``.
    """
    lhs = GradedSchurVector()
    for j in range(m + 1):
        term = e_plethysm(j, Alphabet.TX) * h_plethysm(m - j, Alphabet.T_MINUS_ONE_X)
        lhs = lhs + term.scale((-1) ** (m - j))
    return lhs, GradedSchurVector.constant(e(m))


def identity_vertical_difference(m: int, i: int, j: int) -> tuple[SchurVector, SchurVector]:
    """``s_(1^(i+1)) s_(m,1^(j-1)) - s_(1^i) s_(m,1^j)`` against its two-term expansion."""
    lhs = pieri_e(_s((m, 1), (1, j - 1)), i + 1) - pieri_e(_s((m, 1), (1, j)), i)
    rhs = _s((m + 1, 1), (2, i), (1, j - i - 1)) + _s((m, 1), (2, i + 1), (1, j - i - 2))
    return lhs, rhs


def identity_alternating_twos(n: int, m: int, j: int) -> tuple[SchurVector, SchurVector]:
    """``sum_i (-1)^i s_(i) s_(m,2^j,1^(n-i))`` against ``(-1)^n sum_x s_(m+n-x,2+x,2^(j-1))``."""
    lhs = SchurVector()
    for i in range(n + 1):
        lhs = lhs + pieri_h(_s((m, 1), (2, j), (1, n - i)), i).scale((-1) ** i)
    rhs = SchurVector()
    for x in range(min(m - 2, n) + 1):
        rhs = rhs + _s((m + n - x, 1), (2 + x, 1), (2, j - 1))
    return lhs, rhs.scale((-1) ** n)


def identity_alternating_hooks(n: int, m: int) -> tuple[SchurVector, SchurVector]:
    """``sum_i (-1)^i s_(i) s_(m+1,1^(n-i))`` against ``(-1)^n s_(m+n+1)``."""
    lhs = SchurVector()
    for i in range(n + 1):
        lhs = lhs + pieri_h(_s((m + 1, 1), (1, n - i)), i).scale((-1) ** i)
    return lhs, schur((m + n + 1,)).scale((-1) ** n)


def identity_cases():
    """Every (name, thunk) pair checked by the ``lemmas`` suite."""
    for m in range(0, 9):
        yield f"e-difference m={m}", lambda m=m: identity_e_difference(m)
    for m in range(2, 7):
        for j in range(2, 7):
            for i in range(0, j - 1):
                yield (
                    f"vertical-difference m={m} i={i} j={j}",
                    lambda m=m, i=i, j=j: identity_vertical_difference(m, i, j),
                )
    for n in range(0, 7):
        for m in range(2, 7):
            for j in range(1, 5):
                yield (
                    f"alternating-twos n={n} m={m} j={j}",
                    lambda n=n, m=m, j=j: identity_alternating_twos(n, m, j),
                )
    for n in range(0, 9):
        for m in range(1, 7):
            yield f"alternating-hooks n={n} m={m}", lambda n=n, m=m: identity_alternating_hooks(n, m)


# suites ------------------------------------------------------------------------

def _grid(max_m: int, max_d: int, min_m: int = 0):
    return [(m, d) for m in range(min_m, max_m + 1) for d in range(1, max_d + 1)]


def _collect(name: str, keys, check: Callable) -> SuiteResult:
    res = SuiteResult(name)
    for key, fails in zip(keys, fan_out(check, keys)):
        res.checks += 1
        res.failures.extend(fails)
    return res


def suite_lemmas(max_m: int, max_d: int) -> SuiteResult:
    cases = list(identity_cases())

    def check(case):
        label, thunk = case
        lhs, rhs = thunk()
        return [] if lhs == rhs else [f"{label}: {lhs!r} != {rhs!r}"]

    return _collect("lemmas", cases, check)


def suite_recursion(max_m: int, max_d: int) -> SuiteResult:
    def check(md):
        m, d = md
        fails = []
        q = kl.q_uniform_recursive(m, d)
        if q != kl.q_uniform_closed(m, d):
            fails.append(f"Q U({m},{d}): recursive {q!r}")
        p = kl.p_uniform_recursive(m, d)
        if p != kl.p_uniform_closed(m, d):
            fails.append(f"P U({m},{d}): recursive {p!r}")
        if m == 0:
            if kl.q_boolean_recursive(d) != kl.q_boolean(d):
                fails.append(f"Q B({d})")
            if kl.p_boolean_recursive(d) != kl.p_boolean(d):
                fails.append(f"P B({d})")
        return fails

    return _collect("recursion-vs-closed", _grid(max_m, max_d), check)


def suite_orthogonality(max_m: int, max_d: int) -> SuiteResult:
    def check(md):
        m, d = md
        fails = []
        for method in ("closed", "recursive"):
            rest = kl.verify_orthogonality(m, d, method)
            if rest:
                fails.append(f"U({m},{d}) [{method}]: residue {rest!r}")
        return fails

    return _collect("orthogonality", _grid(max_m, max_d), check)


def suite_skew(max_m: int, max_d: int) -> SuiteResult:
    def check(md):
        m, d = md
        got = kl.p_uniform_skew(m, d)
        want = kl.p_uniform_closed(m, d)
        return [] if got == want else [f"U({m},{d}): skew {got!r} != closed {want!r}"]

    return _collect("skew-vs-closed", _grid(max_m, max_d, min_m=1), check)


def suite_oracle(max_m: int, max_d: int) -> SuiteResult:
    def check(md):
        m, d = md
        a, b, c = kl.ordinary_kl(m, d), kl.ordinary_kl_oracle(m, d), kl.ordinary_kl_skew(m, d)
        return [] if a == b == c else [f"U({m},{d}): closed {a!r}, oracle {b!r}, skew-SYT {c!r}"]

    return _collect("oracle", _grid(max_m, max_d), check)


def _all_outputs(m: int, d: int):
    yield "P closed", kl.p_uniform_closed(m, d)
    yield "P recursive", kl.p_uniform_recursive(m, d)
    if m >= 1:
        yield "P skew", kl.p_uniform_skew(m, d)
    yield "Q closed", kl.q_uniform_closed(m, d)
    yield "Q recursive", kl.q_uniform_recursive(m, d)


def suite_nonnegativity(max_m: int, max_d: int) -> SuiteResult:
    def check(md):
        m, d = md
        return [
            f"U({m},{d}) {label}: negative coefficient in {f!r}"
            for label, f in _all_outputs(m, d)
            if any(c < 0 for _, v in f.items() for c in v.coefficients())
        ]

    return _collect("nonnegativity", _grid(max_m, max_d), check)


def suite_degree_bounds(max_m: int, max_d: int) -> SuiteResult:
    def check(md):
        m, d = md
        fails = []
        for label, f in _all_outputs(m, d):
            deg = f.degree()
            if deg is None or 2 * deg >= d:
                fails.append(f"U({m},{d}) {label}: degree {deg} violates 2*deg < {d}")
        if kl.p_uniform_closed(m, d)[0] != schur((m + d,)):
            fails.append(f"U({m},{d}): constant term of P is not s({m + d})")
        if kl.q_uniform_closed(m, d)[0] != _s((m + 1, 1), (1, d - 1)):
            fails.append(f"U({m},{d}): constant term of Q is not s({m + 1},1^{d - 1})")
        return fails

    return _collect("degree-bounds", _grid(max_m, max_d), check)


def suite_homogeneity(max_m: int, max_d: int) -> SuiteResult:
    def check(md):
        m, d = md
        outputs = list(_all_outputs(m, d)) + [("H", kl.char_uniform(m, d))]
        return [
            f"U({m},{d}) {label}: partition sizes {sorted({sum(p) for p in f.all_partitions()})}"
            for label, f in outputs
            if any(sum(p) != m + d for p in f.all_partitions())
        ]

    return _collect("homogeneity", _grid(max_m, max_d), check)


_RUNNERS = {
    "lemmas": suite_lemmas,
    "recursion-vs-closed": suite_recursion,
    "orthogonality": suite_orthogonality,
    "skew-vs-closed": suite_skew,
    "oracle": suite_oracle,
    "nonnegativity": suite_nonnegativity,
    "degree-bounds": suite_degree_bounds,
    "homogeneity": suite_homogeneity,
}


def run_suites(max_m: int, max_d: int, suites: Iterable[str]) -> list[SuiteResult]:
    return [_RUNNERS[name](max_m, max_d) for name in suites]
