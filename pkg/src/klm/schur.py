"""Sparse integer combinations of Schur functions.

A :class:`SchurVector` is the Frobenius image of a virtual representation:
a finite map from partitions to nonzero integers. Products go through the
Littlewood-Richardson rule, computed by counting LR tableaux. The counting
kernel is compiled when the ``_lrkernel`` extension is available; set
``KLM_PURE_PYTHON=1`` to force the pure-Python kernel.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from . import _lrpy
from .partition import Partition, SkewShape, conjugate, sort_key

if os.environ.get("KLM_PURE_PYTHON"):
    _kernel = _lrpy
else:
    try:
        from . import _lrkernel as _kernel
    except ImportError:
        _kernel = _lrpy

KERNEL = _kernel.NAME

_INT64_MIN = -(1 << 63)
_INT64_MAX = (1 << 63) - 1


class CoefficientOverflow(ArithmeticError):
    """A Schur coefficient left the signed 64-bit range."""


def _checked(c: int) -> int:
    if c < _INT64_MIN or c > _INT64_MAX:
        raise CoefficientOverflow(f"coefficient {c} exceeds 64 bits")
    return c


class SchurVector:
    """Immutable finite integer combination of Schur functions."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        acc: dict[tuple[int, ...], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for p, c in items:
            key = tuple(Partition(p))
            acc[key] = acc.get(key, 0) + c
        self._terms = {p: _checked(c) for p, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, ...], int]) -> "SchurVector":
        # trusted constructor: keys are valid partitions, zeros still filtered
        v = cls.__new__(cls)
        v._terms = {p: _checked(c) for p, c in terms.items() if c}
        v._hash = None
        return v

    # mapping-like access
    def __getitem__(self, p: Sequence[int]) -> int:
        return self._terms.get(tuple(p), 0)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> list[tuple[Partition, int]]:
        """Terms in canonical order (larger size first, reverse lexicographic)."""
        return [(Partition(p), self._terms[p]) for p in sorted(self._terms, key=sort_key)]

    def partitions(self) -> list[Partition]:
        return [p for p, _ in self.items()]

    def coefficients(self) -> list[int]:
        return [c for _, c in self.items()]

    def sizes(self) -> set[int]:
        return {sum(p) for p in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.sizes()) <= 1

    # arithmetic
    def __add__(self, other: "SchurVector") -> "SchurVector":
        if not isinstance(other, SchurVector):
            return NotImplemented
        acc = dict(self._terms)
        for p, c in other._terms.items():
            acc[p] = acc.get(p, 0) + c
        return SchurVector._raw(acc)

    def __neg__(self) -> "SchurVector":
        return SchurVector._raw({p: -c for p, c in self._terms.items()})

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        if not isinstance(other, SchurVector):
            return NotImplemented
        return self + (-other)

    def scale(self, k: int) -> "SchurVector":
        return SchurVector._raw({p: c * k for p, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, SchurVector):
            return lr_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurVector):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"SchurVector({self.to_text()})"

    # rendering
    def to_text(self, symbol: str = "s") -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (p, c) in enumerate(self.items()):
            name = f"{symbol}(" + ",".join(map(str, p)) + ")"
            mag = abs(c)
            body = name if mag == 1 else f"{mag}·{name}"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def to_latex(self, symbol: str = "s") -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (p, c) in enumerate(self.items()):
            name = f"{symbol}_{{(" + ",".join(map(str, p)) + ")}"
            mag = abs(c)
            body = name if mag == 1 else f"{mag}{name}"
            if i == 0:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(("+ " if c > 0 else "- ") + body)
        return " ".join(out)

    def to_json(self) -> list[dict]:
        return [{"partition": list(p), "coeff": c} for p, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "SchurVector":
        return cls((d["partition"], int(d["coeff"])) for d in data)


ZERO = SchurVector()
ONE = SchurVector({(): 1})


def schur(parts: Sequence[int], coeff: int = 1) -> SchurVector:
    """The single term ``coeff * s_parts``."""
    return SchurVector({tuple(parts): coeff})


def h(n: int) -> SchurVector:
    """Complete homogeneous symmetric function ``s_(n)``."""
    return schur((n,)) if n > 0 else (ONE if n == 0 else ZERO)


def e(n: int) -> SchurVector:
    """Elementary symmetric function ``s_(1^n)``."""
    return schur((1,) * n) if n > 0 else (ONE if n == 0 else ZERO)


# Pieri rules ---------------------------------------------------------------

def horizontal_strips(lam: Sequence[int], i: int) -> Iterator[tuple[int, ...]]:
    """All ``mu`` with ``mu / lam`` a horizontal strip of size ``i``."""
    lam = tuple(lam)
    n = len(lam)

    def rec(r: int, left: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if r == n:
            if left <= (lam[n - 1] if n else left):
                yield acc + ((left,) if left else ())
            return
        cap = left if r == 0 else min(left, lam[r - 1] - lam[r])
        for x in range(cap, -1, -1):
            yield from rec(r + 1, left - x, acc + (lam[r] + x,))

    yield from rec(0, i, ())


def pieri_h(f: SchurVector, i: int) -> SchurVector:
    """``f * s_(i)`` by adding horizontal strips."""
    if i < 0:
        raise ValueError("strip size must be nonnegative")
    if i == 0:
        return f
    acc: dict[tuple[int, ...], int] = {}
    for lam, c in f._terms.items():
        for mu in horizontal_strips(lam, i):
            acc[mu] = acc.get(mu, 0) + c
    return SchurVector._raw(acc)


def pieri_e(f: SchurVector, i: int) -> SchurVector:
    """``f * s_(1^i)`` by adding vertical strips (horizontal strips of the conjugate)."""
    if i < 0:
        raise ValueError("strip size must be nonnegative")
    if i == 0:
        return f
    acc: dict[tuple[int, ...], int] = {}
    for lam, c in f._terms.items():
        for mu in horizontal_strips(conjugate(lam), i):
            key = tuple(conjugate(mu))
            acc[key] = acc.get(key, 0) + c
    return SchurVector._raw(acc)


# Littlewood-Richardson rule ---------------------------------------------------

@lru_cache(maxsize=None)
def lr_coefficients(mu: tuple[int, ...], nu: tuple[int, ...]) -> Mapping[tuple[int, ...], int]:
    """``{lambda: c^lambda_{mu,nu}}``, counting LR tableaux of shape lambda/mu and content nu."""
    return MappingProxyType(_kernel.lr_mult(tuple(mu), tuple(nu)))


def lr_product(f: SchurVector, g: SchurVector) -> SchurVector:
    """Product in the ring of symmetric functions."""
    acc: dict[tuple[int, ...], int] = {}
    for mu, a in f._terms.items():
        for nu, b in g._terms.items():
            # tableau count is smaller when the content is the smaller partition
            if sum(nu) > sum(mu) or (sum(nu) == sum(mu) and nu > mu):
                key = (nu, mu)
            else:
                key = (mu, nu)
            ab = a * b
            for lam, c in lr_coefficients(*key).items():
                acc[lam] = acc.get(lam, 0) + ab * c
    return SchurVector._raw(acc)


@lru_cache(maxsize=None)
def _skew(outer: tuple[int, ...], inner: tuple[int, ...]) -> SchurVector:
    return SchurVector._raw(dict(_kernel.lr_skew(outer, inner)))


def skew_schur_expand(s: SkewShape) -> SchurVector:
    """Schur expansion of the skew Schur function ``s_{outer/inner}``."""
    return _skew(tuple(s.outer), tuple(s.inner))


def lr_coefficient(outer: Sequence[int], inner: Sequence[int], nu: Sequence[int]) -> int:
    return skew_schur_expand(SkewShape(outer, inner))[nu]


@dataclass(frozen=True)
class LRTableau:
    """A Littlewood-Richardson tableau; ``rows[r]`` lists the entries of the
    skew part of row ``r`` from left to right."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]
    content: Partition

    def reverse_reading_word(self) -> list[int]:
        return [x for row in self.rows for x in reversed(row)]

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "rows": [list(r) for r in self.rows],
            "content": list(self.content),
        }


def enumerate_lr_tableaux(s: SkewShape, content: Sequence[int]) -> list[LRTableau]:
    """All LR tableaux of shape ``s`` and the given content, lexicographic by rows."""
    content = Partition(content)
    if content.size != s.size:
        raise ValueError(f"content {content!r} has size {content.size}, shape has {s.size}")
    targets = s.row_lengths()
    out = []
    for fill in _lrpy.row_fillings(
        s.inner, len(s.outer), len(content), targets=targets, content=content
    ):
        rows = []
        for r in range(len(s.outer)):
            counts = fill[r] if r < len(fill) else ()
            rows.append(tuple(k + 1 for k, x in enumerate(counts) for _ in range(x)))
        out.append(LRTableau(s, tuple(rows), content))
    return out


def is_lattice_word(w: Sequence[int]) -> bool:
    """True iff every prefix has at least as many ``i`` as ``i+1``, for all ``i``."""
    seen: dict[int, int] = {}
    for x in w:
        if x < 1:
            raise ValueError("letters must be positive")
        seen[x] = seen.get(x, 0) + 1
        if x > 1 and seen[x] > seen.get(x - 1, 0):
            return False
    return True
