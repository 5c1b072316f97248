"""Small exact linear algebra over Q: sparse rank and congruence signature."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class Span:
    """Incrementally grown row-echelon basis of sparse rational vectors."""

    def __init__(self):
        self._pivots: dict[int, dict[int, Fraction]] = {}

    def __len__(self):
        return len(self._pivots)

    def reduce(self, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        v = {i: Fraction(c) for i, c in vec.items() if c}
        while v:
            lead = min(v)
            row = self._pivots.get(lead)
            if row is None:
                return v
            factor = v[lead]
            for i, c in row.items():
                nv = v.get(i, 0) - factor * c
                if nv:
                    v[i] = nv
                else:
                    v.pop(i, None)
        return v

    def add(self, vec: Mapping[int, Fraction]) -> bool:
        """Insert ``vec``; False if it was already in the span."""
        v = self.reduce(vec)
        if not v:
            return False
        lead = min(v)
        inv = 1 / v[lead]
        self._pivots[lead] = {i: c * inv for i, c in v.items()}
        return True


def sparse_rank(vectors: Iterable[Mapping[int, Fraction]]) -> int:
    """Rank of sparse rational vectors (dict index -> value)."""
    span = Span()
    for v in vectors:
        span.add(v)
    return len(span)


def solve_in_span(basis: Sequence[Mapping[int, Fraction]], target: Mapping[int, Fraction]):
    """Coefficients x with sum_j x_j basis[j] == target, or None.

    Dense Gauss-Jordan on the (support x len(basis)) system; fine for the
    few-hundred-dimensional ideals that occur here.
    """
    rows = sorted(set().union(*[set(b) for b in basis], set(target)))
    ncols = len(basis)
    mat = [[Fraction(b.get(r, 0)) for b in basis] + [Fraction(target.get(r, 0))] for r in rows]
    pivcols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                fac = mat[i][c]
                mat[i] = [a - fac * b for a, b in zip(mat[i], mat[r])]
        pivcols.append(c)
        r += 1
    if any(row[-1] for row in mat[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivcols):
        x[c] = mat[i][-1]
    return x


def symmetric_signature(mat: Sequence[Sequence[Fraction]]) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a real symmetric matrix.

    Symmetric Gaussian elimination (congruence), exact over Q.  A zero
    pivot with a nonzero off-diagonal entry is repaired by adding the
    offending row/column to the pivot row/column first.
    """
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # row_i += row_j, col_i += col_j makes a[i][i] = 2 a[i][j] != 0
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            if a[i][piv]:
                fac = a[i][piv] / d
                for t in active:
                    a[i][t] -= fac * a[piv][t]
                a[i][piv] = Fraction(0)
        for i in active:
            a[piv][i] = Fraction(0)
    return pos, neg, n - pos - neg
