"""Polynomials in ``t`` with Schur-vector coefficients.

These model graded virtual representations after the Frobenius map. The
defining recurrences only ever need ``t^n f(1/t)`` for a known ``n`` with
``deg f <= n``, so negative powers of ``t`` never appear.
"""

from __future__ import annotations

import enum
import re
from typing import Iterable, Mapping

from .partition import syt_count
from .schur import ONE, SchurVector, e, h, lr_product, pieri_e, pieri_h


class DegreeExceedsShift(ValueError):
    """``reciprocal_shift(f, n)`` was asked for ``n < deg f``."""


class GradedSchurVector:
    """Immutable map from powers of ``t`` to nonzero :class:`SchurVector` coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, SchurVector] | Iterable[tuple[int, SchurVector]] = ()):
        acc: dict[int, SchurVector] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for k, v in items:
            if k < 0:
                raise ValueError("negative power of t")
            acc[k] = acc[k] + v if k in acc else v
        self._coeffs = {k: v for k, v in acc.items() if v}

    @classmethod
    def constant(cls, v: SchurVector) -> "GradedSchurVector":
        return cls({0: v})

    @classmethod
    def monomial(cls, k: int, v: SchurVector) -> "GradedSchurVector":
        return cls({k: v})

    def degree(self) -> int | None:
        """Largest power of ``t`` present; ``None`` for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    def degrees(self) -> list[int]:
        return sorted(self._coeffs)

    def __getitem__(self, k: int) -> SchurVector:
        return self._coeffs.get(k, SchurVector())

    coefficient = __getitem__

    def items(self) -> list[tuple[int, SchurVector]]:
        return [(k, self._coeffs[k]) for k in self.degrees()]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedSchurVector):
            return self._coeffs == other._coeffs
        if isinstance(other, int) and other == 0:
            return not self._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "GradedSchurVector") -> "GradedSchurVector":
        if not isinstance(other, GradedSchurVector):
            return NotImplemented
        return GradedSchurVector(list(self._coeffs.items()) + list(other._coeffs.items()))

    def __neg__(self) -> "GradedSchurVector":
        return GradedSchurVector({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "GradedSchurVector") -> "GradedSchurVector":
        if not isinstance(other, GradedSchurVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c: int) -> "GradedSchurVector":
        return GradedSchurVector({k: v.scale(c) for k, v in self._coeffs.items()})

    def shift(self, k: int) -> "GradedSchurVector":
        """Multiply by ``t^k``."""
        return GradedSchurVector({d + k: v for d, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, GradedSchurVector):
            return gproduct(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def map(self, fn) -> "GradedSchurVector":
        return GradedSchurVector({k: fn(v) for k, v in self._coeffs.items()})

    def all_partitions(self):
        for _, v in self.items():
            yield from v.partitions()

    def __repr__(self) -> str:
        return f"GradedSchurVector({self.to_text()})"

    # rendering -----------------------------------------------------------
    def to_text(self, symbol: str = "s") -> str:
        return _render(self, lambda v: v.to_text(symbol), lambda k: _t_text(k) + "·", prefix=True)

    def to_latex(self, symbol: str = "V") -> str:
        return _render(self, lambda v: v.to_latex(symbol), lambda k: " " + _t_latex(k), prefix=False)

    def to_json(self) -> list[dict]:
        return [{"degree": k, "terms": v.to_json()} for k, v in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "GradedSchurVector":
        return cls((int(d["degree"]), SchurVector.from_json(d["terms"])) for d in data)


def _t_text(k: int) -> str:
    return "" if k == 0 else ("t" if k == 1 else f"t^{k}")


def _t_latex(k: int) -> str:
    return "t" if k == 1 else f"t^{{{k}}}"


def _render(f: GradedSchurVector, show, tpow, prefix: bool) -> str:
    # one signed piece per power of t; a coefficient whose terms are all
    # negative is shown as a subtraction
    if not f:
        return "0"
    out = []
    for i, (k, v) in enumerate(f.items()):
        neg = all(c < 0 for c in v.coefficients())
        body = show(-v if neg else v)
        if k:
            if len(v) > 1:
                body = f"({body})"
            body = f"{tpow(k)}{body}" if prefix else f"{body}{tpow(k)}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def gproduct(f: GradedSchurVector, g: GradedSchurVector) -> GradedSchurVector:
    """Cauchy product; coefficient products use the Littlewood-Richardson rule."""
    acc: dict[int, SchurVector] = {}
    for a, fa in f._coeffs.items():
        for b, gb in g._coeffs.items():
            term = lr_product(fa, gb)
            acc[a + b] = acc[a + b] + term if a + b in acc else term
    return GradedSchurVector(acc)


def reciprocal_shift(f: GradedSchurVector, n: int) -> GradedSchurVector:
    """``t^n f(1/t)``."""
    deg = f.degree()
    if deg is not None and deg > n:
        raise DegreeExceedsShift(f"degree {deg} exceeds shift {n}")
    return GradedSchurVector({n - k: v for k, v in f._coeffs.items()})


def truncate_strictly_below(f: GradedSchurVector, half_of: int) -> GradedSchurVector:
    """Keep the terms ``t^j`` with ``2j < half_of``."""
    return GradedSchurVector({k: v for k, v in f._coeffs.items() if 2 * k < half_of})


class IntPolynomial:
    """Integer polynomial in ``t`` with arbitrary-precision coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] = ()):
        if isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        acc: dict[int, int] = {}
        for k, c in items:
            if k < 0:
                raise ValueError("negative power of t")
            acc[k] = acc.get(k, 0) + int(c)
        self._coeffs = {k: c for k, c in acc.items() if c}

    def degree(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    def __getitem__(self, k: int) -> int:
        return self._coeffs.get(k, 0)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._coeffs.items())

    def coefficient_list(self) -> list[int]:
        d = self.degree()
        return [] if d is None else [self[k] for k in range(d + 1)]

    def __call__(self, t: int) -> int:
        return sum(c * t**k for k, c in self._coeffs.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        acc = dict(self._coeffs)
        for k, c in other._coeffs.items():
            acc[k] = acc.get(k, 0) + c
        return IntPolynomial(acc)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial({k: c * other for k, c in self._coeffs.items()})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        acc: dict[int, int] = {}
        for a, x in self._coeffs.items():
            for b, y in other._coeffs.items():
                acc[a + b] = acc.get(a + b, 0) + x * y
        return IntPolynomial(acc)

    __rmul__ = __mul__

    def reciprocal_shift(self, n: int) -> "IntPolynomial":
        deg = self.degree()
        if deg is not None and deg > n:
            raise DegreeExceedsShift(f"degree {deg} exceeds shift {n}")
        return IntPolynomial({n - k: c for k, c in self._coeffs.items()})

    def truncate_strictly_below(self, half_of: int) -> "IntPolynomial":
        return IntPolynomial({k: c for k, c in self._coeffs.items() if 2 * k < half_of})

    def __repr__(self) -> str:
        return f"IntPolynomial({self.to_text()})"

    def to_text(self) -> str:
        if not self._coeffs:
            return "0"
        out = []
        for i, (k, c) in enumerate(self.items()):
            mag = abs(c)
            tpow = _t_text(k)
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = tpow
            else:
                body = f"{mag}{tpow}"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def to_latex(self) -> str:
        return re.sub(r"t\^(\d+)", r"t^{\1}", self.to_text())

    def to_json(self) -> dict:
        return {"coeffs": [[k, str(c)] for k, c in self.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "IntPolynomial":
        return cls({int(k): int(c) for k, c in data["coeffs"]})


def dimension_poly(f: GradedSchurVector) -> IntPolynomial:
    """Replace each ``s_lambda`` by ``dim V_lambda`` (the number of SYT of shape lambda)."""
    return IntPolynomial(
        {k: sum(c * syt_count(p) for p, c in v.items()) for k, v in f.items()}
    )


# plethysm on the four alphabets the recurrences use -----------------------

class Alphabet(enum.Enum):
    X = "X"
    TX = "tX"
    NEG_X = "-X"
    T_MINUS_ONE_X = "(t-1)X"


def h_plethysm(n: int, alphabet: Alphabet | str) -> GradedSchurVector:
    """``h_n[E]`` for ``E`` one of ``X, tX, -X, (t-1)X``.

    Uses ``h_n[tX] = t^n h_n``, ``h_n[-X] = (-1)^n e_n`` and
    ``h_n[A + B] = sum_k h_k[A] h_{n-k}[B]``.
    """
    alphabet = Alphabet(alphabet)
    if n < 0:
        return GradedSchurVector()
    if alphabet is Alphabet.X:
        return GradedSchurVector.constant(h(n))
    if alphabet is Alphabet.TX:
        return GradedSchurVector.monomial(n, h(n))
    if alphabet is Alphabet.NEG_X:
        return GradedSchurVector.constant(e(n).scale((-1) ** n))
    # (t-1)X = tX + (-X)
    acc = {}
    for a in range(n + 1):
        b = n - a
        acc[a] = pieri_h(e(b), a).scale((-1) ** b)
    return GradedSchurVector(acc)


def e_plethysm(n: int, alphabet: Alphabet | str) -> GradedSchurVector:
    """``e_n[E]`` for ``E`` one of ``X, tX, -X, (t-1)X``."""
    alphabet = Alphabet(alphabet)
    if n < 0:
        return GradedSchurVector()
    if alphabet is Alphabet.X:
        return GradedSchurVector.constant(e(n))
    if alphabet is Alphabet.TX:
        return GradedSchurVector.monomial(n, e(n))
    if alphabet is Alphabet.NEG_X:
        return GradedSchurVector.constant(h(n).scale((-1) ** n))
    acc = {}
    for a in range(n + 1):
        b = n - a
        acc[a] = pieri_e(h(b), a).scale((-1) ** b)
    return GradedSchurVector(acc)


UNIT = GradedSchurVector.constant(ONE)
