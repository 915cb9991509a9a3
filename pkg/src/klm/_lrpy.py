"""Pure-Python Littlewood-Richardson tableau kernel.

Tableaux are built row by row, top to bottom. A row is described by how many
copies of each letter it holds (rows are weakly increasing, so the counts fix
the row). Writing ``L[r][k]`` for the column reached in row ``r`` after
placing the letters ``<= k``, the filling is semistandard exactly when
``L[r][k] <= L[r-1][k-1]`` (each letter class adds a horizontal strip), and the
reverse reading word is a lattice word exactly when, for every ``k >= 2``,
the ``k`` count through row ``r`` does not exceed the ``k-1`` count through
row ``r-1``. Both conditions are checked while a row is being chosen, so a
partial filling is abandoned as soon as it cannot be completed.

The compiled kernel ``_lrkernel`` implements ``lr_mult`` and ``lr_skew`` with
identical semantics; this module is the fallback and the reference.
"""

from __future__ import annotations

from typing import Iterator, Sequence

NAME = "python"

_BIG = 1 << 60


def row_fillings(
    inner: Sequence[int],
    nrows: int,
    letters: int,
    targets: Sequence[int] | None = None,
    content: Sequence[int] | None = None,
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield LR fillings as per-row letter counts.

    With ``targets`` the row lengths of the skew part are fixed (skew
    expansion); otherwise ``content`` must be given and the outer shape is
    free (product expansion). Each yielded item has one entry per used row;
    entry ``r`` is ``(a_1, ..., a_letters)``. Larger counts of small letters
    come first, which orders tableaux lexicographically row by row.
    """
    mu = list(inner) + [0] * (nrows - len(inner))
    if targets is not None:
        targets = list(targets) + [0] * (nrows - len(targets))
        total = sum(targets)
    else:
        total = sum(content)
    if total == 0:
        yield ()
        return
    n_inner = len(inner)
    cnt = [0] * (letters + 1)
    cnt[0] = _BIG
    a = [[0] * (letters + 1) for _ in range(nrows)]
    L = [[0] * (letters + 1) for _ in range(nrows)]

    def rec(r: int, k: int, placed: int):
        Lr = L[r]
        if k > letters or (k >= 2 and cnt[k - 1] == 0):
            rowsum = Lr[k - 1] - mu[r]
            if targets is not None and rowsum != targets[r]:
                return
            for kk in range(k, letters + 1):
                Lr[kk] = Lr[k - 1]
            ar = a[r]
            for kk in range(1, letters + 1):
                cnt[kk] += ar[kk]
            if placed == total:
                yield tuple(tuple(a[i][1:]) for i in range(r + 1))
            elif r + 1 < nrows and (targets is not None or rowsum > 0 or r < n_inner):
                yield from rec(r + 1, 1, placed)
            for kk in range(1, letters + 1):
                cnt[kk] -= ar[kk]
            return
        hi = _BIG
        if content is not None:
            hi = content[k - 1] - cnt[k]
        if k >= 2:
            hi = min(hi, cnt[k - 1] - cnt[k])
        if r > 0:
            hi = min(hi, L[r - 1][k - 1] - Lr[k - 1])
        if targets is not None:
            hi = min(hi, targets[r] - (Lr[k - 1] - mu[r]))
        else:
            hi = min(hi, total - placed)
        ar = a[r]
        for x in range(hi, -1, -1):
            ar[k] = x
            Lr[k] = Lr[k - 1] + x
            yield from rec(r, k + 1, placed + x)
        ar[k] = 0

    for r in range(nrows):
        L[r][0] = mu[r]
    yield from rec(0, 1, 0)


def lr_mult(mu: tuple[int, ...], nu: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """``{lambda: c^lambda_{mu,nu}}`` for all nonzero coefficients."""
    if not nu:
        return {tuple(mu): 1}
    nrows = len(mu) + len(nu)
    out: dict[tuple[int, ...], int] = {}
    for rows in row_fillings(mu, nrows, len(nu), content=nu):
        lam = [
            (mu[r] if r < len(mu) else 0) + sum(counts) for r, counts in enumerate(rows)
        ]
        lam.extend(mu[len(rows):])
        key = tuple(p for p in lam if p)
        out[key] = out.get(key, 0) + 1
    return out


def lr_skew(outer: tuple[int, ...], inner: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """``{nu: c^outer_{inner,nu}}``: the Schur expansion of a skew Schur function."""
    nrows = len(outer)
    targets = [o - (inner[r] if r < len(inner) else 0) for r, o in enumerate(outer)]
    out: dict[tuple[int, ...], int] = {}
    for rows in row_fillings(inner, nrows, nrows, targets=targets):
        content = [0] * nrows
        for counts in rows:
            for k, x in enumerate(counts):
                content[k] += x
        key = tuple(c for c in content if c)
        out[key] = out.get(key, 0) + 1
    return out
