"""Integer partitions and skew shapes.

Partitions are stored densely as tuples of positive parts, largest first.
:class:`Partition` subclasses ``tuple`` so a plain tuple with the same parts
compares and hashes equal; the Schur machinery keys its dictionaries on
plain tuples and only wraps results for callers.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class NotWeaklyDecreasing(ValueError):
    """Raised when positive parts increase from left to right."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        raw = [int(p) for p in parts]
        if any(p < 0 for p in raw):
            raise ValueError(f"negative part in {raw}")
        kept = [p for p in raw if p > 0]
        for a, b in zip(kept, kept[1:]):
            if b > a:
                raise NotWeaklyDecreasing(f"parts {raw} are not weakly decreasing")
        return super().__new__(cls, kept)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def to_json(self) -> list[int]:
        return list(self)


def make_partition(raw: Sequence[int]) -> Partition:
    """Strip zero parts and validate ordering.

    >>> make_partition([4, 2, 2, 1, 0, 0])
    (4,2,2,1)
    """
    return Partition(raw)


def compact_partition(*blocks: tuple[int, int]) -> Partition | None:
    """Build a partition from ``(part, multiplicity)`` blocks.

    ``compact_partition((m + 1, 1), (2, j), (1, d - 2*j - 1))`` spells
    ``(m+1, 2^j, 1^(d-2j-1))``. Blocks with multiplicity zero are dropped.
    Returns ``None`` (a vanishing term) when a multiplicity is negative, a
    part is non-positive, or the result is not weakly decreasing.
    """
    parts: list[int] = []
    for part, mult in blocks:
        if mult < 0:
            return None
        if mult == 0:
            continue
        if part <= 0:
            return None
        parts.extend([part] * mult)
    try:
        return Partition(parts)
    except NotWeaklyDecreasing:
        return None


class SkewShape:
    """The skew diagram ``outer / inner``."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: Sequence[int], inner: Sequence[int] = ()):
        o = outer if isinstance(outer, Partition) else Partition(outer)
        i = inner if isinstance(inner, Partition) else Partition(inner)
        if not contains(o, i):
            raise ValueError(f"{i!r} is not contained in {o!r}")
        object.__setattr__(self, "outer", o)
        object.__setattr__(self, "inner", i)

    def __setattr__(self, name, value):
        raise AttributeError("SkewShape is immutable")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def row_lengths(self) -> list[int]:
        inner = self.inner
        return [p - (inner[r] if r < len(inner) else 0) for r, p in enumerate(self.outer)]

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells as 0-based ``(row, column)`` pairs, row-major."""
        for r, p in enumerate(self.outer):
            start = self.inner[r] if r < len(self.inner) else 0
            for c in range(start, p):
                yield r, c

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewShape)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self) -> int:
        return hash((self.outer, self.inner))

    def __repr__(self) -> str:
        return f"{self.outer!r}/{self.inner!r}"

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, data: dict) -> "SkewShape":
        return cls(data["outer"], data.get("inner", ()))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose of the Young diagram."""
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part > c) for c in range(p[0]))


def _padded(p: Sequence[int], n: int) -> list[int]:
    return list(p) + [0] * (n - len(p))


def is_horizontal_strip(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff ``outer/inner`` has no two cells in the same column."""
    if not contains(outer, inner):
        return False
    inn = _padded(inner, len(outer))
    for r, o in enumerate(outer):
        if r + 1 < len(outer) and outer[r + 1] > inn[r]:
            return False
        if inn[r] > o:
            return False
    return True


def is_vertical_strip(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff ``outer/inner`` has no two cells in the same row."""
    if not contains(outer, inner):
        return False
    inn = _padded(inner, len(outer))
    return all(o - i <= 1 for o, i in zip(outer, inn))


def hook_lengths(p: Sequence[int]) -> list[list[int]]:
    conj = conjugate(p)
    return [[p[r] - c + conj[c] - r - 1 for c in range(p[r])] for r in range(len(p))]


@lru_cache(maxsize=None)
def _syt_count(p: tuple[int, ...]) -> int:
    n = sum(p)
    return factorial(n) // prod(h for row in hook_lengths(p) for h in row)


def syt_count(p: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape ``p`` (hook length formula)."""
    return _syt_count(tuple(p))


def skew_syt_count(s: SkewShape) -> int:
    """Number of standard Young tableaux of a skew shape, via its LR expansion."""
    from .schur import skew_schur_expand

    return sum(c * syt_count(nu) for nu, c in skew_schur_expand(s).items())


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in canonical (reverse lexicographic) order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, max_part):
        yield Partition(parts)


def sort_key(p: Sequence[int]) -> tuple:
    """Canonical ordering: larger size first, then reverse lexicographic."""
    return (-sum(p), tuple(-x for x in p))
