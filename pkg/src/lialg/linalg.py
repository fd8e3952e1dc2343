"""Exact sparse linear algebra over the rationals.

Matrices are dicts of sparse rows ``{row: {col: Fraction}}``.  Elimination is
fraction-free: every row is scaled to a primitive integer vector and reduced
with ``row <- a*row - b*pivot`` followed by removal of the common content,
so entries stay small and no ``Fraction`` arithmetic happens in the inner
loop.  Pivots are chosen as the smallest column index, which makes every
result deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

Sparse = Dict[int, Dict[int, Fraction]]
IntVec = Dict[int, int]


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def to_integer(vec: Mapping[int, object]) -> IntVec:
    """Primitive integer multiple of ``vec`` with positive leading entry."""
    items = {k: Fraction(v) for k, v in vec.items() if v != 0}
    if not items:
        return {}
    den = 1
    for v in items.values():
        den = _lcm(den, v.denominator)
    out = {k: int(v * den) for k, v in items.items()}
    return _normalize(out)


def _normalize(vec: IntVec) -> IntVec:
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = vec[min(vec)]
    if lead < 0:
        g = -g
    if g != 1:
        vec = {k: v // g for k, v in vec.items()}
    return vec


class Echelon:
    """Incrementally built row-echelon basis of a subspace of ``Q^n``."""

    def __init__(self):
        self.pivots: Dict[int, IntVec] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Mapping[int, object]) -> IntVec:
        """Reduce ``vec`` against the basis (forward only); zero means in the span."""
        v = to_integer(vec) if vec else {}
        while v:
            col = min(v)
            p = self.pivots.get(col)
            if p is None:
                break
            a, b = p[col], v[col]
            out = {k: a * x for k, x in v.items()}
            for k, x in p.items():
                y = out.get(k, 0) - b * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            v = _normalize(out) if out else {}
        return v

    def insert(self, vec: Mapping[int, object]) -> bool:
        """Add ``vec``; return ``True`` if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        self.pivots[min(v)] = v
        return True

    def contains(self, vec: Mapping[int, object]) -> bool:
        return not self._full_reduce(vec)

    def _full_reduce(self, vec: Mapping[int, object]) -> IntVec:
        v = to_integer(vec) if vec else {}
        done: IntVec = {}
        while v:
            col = min(v)
            p = self.pivots.get(col)
            if p is None:
                done[col] = v.pop(col)
                continue
            a, b = p[col], v[col]
            out = {k: a * x for k, x in v.items()}
            done = {k: a * x for k, x in done.items()}
            for k, x in p.items():
                y = out.get(k, 0) - b * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            v = out
        return done


def transpose(rows: Mapping[int, Mapping[int, object]]) -> Sparse:
    out: Sparse = {}
    for r, row in rows.items():
        for c, v in row.items():
            if v != 0:
                out.setdefault(c, {})[r] = Fraction(v)
    return out


def _as_sparse(M) -> Tuple[Sparse, int]:
    if isinstance(M, dict):
        ncols = 1 + max((c for row in M.values() for c in row), default=-1)
        return M, ncols
    rows = {}
    ncols = 0
    for i, row in enumerate(M):
        ncols = max(ncols, len(row))
        r = {j: Fraction(v) for j, v in enumerate(row) if v != 0}
        if r:
            rows[i] = r
    return rows, ncols


def rank(M, ncols: Optional[int] = None) -> int:
    """Rank of a sparse dict-of-rows or dense list-of-lists matrix."""
    rows, guess = _as_sparse(M)
    if ncols is None:
        ncols = guess
    nrows = len(rows)
    vectors: Iterable = rows.values()
    if nrows > ncols:
        vectors = transpose(rows).values()
    ech = Echelon()
    for v in vectors:
        ech.insert(v)
    return len(ech)


def nullspace(M, ncols: int) -> List[Dict[int, Fraction]]:
    """Basis of ``{x : M x = 0}``, one vector per free column, in column order.

    Each basis vector has a 1 in its free column and 0 in the other free columns.
    """
    rows, _ = _as_sparse(M)
    ech = Echelon()
    for v in rows.values():
        ech.insert(v)
    pivcols = sorted(ech.pivots, reverse=True)
    free = [c for c in range(ncols) if c not in ech.pivots]
    basis = []
    for f in free:
        x: Dict[int, Fraction] = {f: Fraction(1)}
        for c in pivcols:
            p = ech.pivots[c]
            s = Fraction(0)
            for k, v in p.items():
                if k != c and k in x:
                    s += v * x[k]
            if s:
                x[c] = -s / p[c]
        basis.append({k: v for k, v in x.items() if v != 0})
    return basis


def matvec(rows: Mapping[int, Mapping[int, object]], vec: Mapping[int, object]) -> Dict[int, Fraction]:
    out = {}
    for r, row in rows.items():
        s = Fraction(0)
        for c, v in row.items():
            x = vec.get(c)
            if x:
                s += Fraction(v) * Fraction(x)
        if s:
            out[r] = s
    return out


def matmul(A: Mapping[int, Mapping[int, object]], B: Mapping[int, Mapping[int, object]]) -> Sparse:
    out: Sparse = {}
    for r, row in A.items():
        acc: Dict[int, Fraction] = {}
        for k, a in row.items():
            for c, b in B.get(k, {}).items():
                acc[c] = acc.get(c, Fraction(0)) + Fraction(a) * Fraction(b)
        acc = {c: v for c, v in acc.items() if v != 0}
        if acc:
            out[r] = acc
    return out


def is_zero(M: Mapping[int, Mapping[int, object]]) -> bool:
    return all(v == 0 for row in M.values() for v in row.values())


def complement_in_span(base: Sequence[Mapping[int, object]],
                       candidates: Sequence[Mapping[int, object]]) -> List[int]:
    """Indices of ``candidates`` that extend ``span(base)`` one at a time."""
    ech = Echelon()
    for v in base:
        ech.insert(v)
    picked = []
    for i, v in enumerate(candidates):
        if ech.insert(v):
            picked.append(i)
    return picked
