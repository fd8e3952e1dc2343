"""Chevalley–Eilenberg cochains ``C^k(L, M) = Hom(wedge^k L, M)`` over Q.

A basis cochain is a pair ``(xs, a)``: a sorted ``k``-tuple of algebra basis
indices and a module basis index, standing for the cochain sending
``x_{xs[0]} ^ ... ^ x_{xs[k-1]}`` to ``m_a`` and every other basis wedge to 0.
The differential is

    (d f)(x_0, ..., x_k) = sum_p (-1)^p x_p . f(..., ^x_p, ...)
                         + sum_{p<q} (-1)^{p+q} f([x_p, x_q], ..., ^x_p, ..., ^x_q, ...)

and is assembled column by column: the image of one basis cochain is
computed directly, which is also what the invariant subcomplex reuses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import EmptyCohomology
from .extension import FlatLieAlgebra, Representation
from . import linalg
from .linalg import Sparse

Key = Tuple[Tuple[int, ...], int]


class CochainBasis:
    """Lexicographic basis of ``C^k(L, M)``."""

    def __init__(self, algebra_dim: int, module_dim: int, k: int):
        self.degree = k
        self.algebra_dim = algebra_dim
        self.module_dim = module_dim
        if 0 <= k <= algebra_dim:
            self.wedges: List[Tuple[int, ...]] = list(combinations(range(algebra_dim), k))
        else:
            self.wedges = []
        self._wedge_index = {w: i for i, w in enumerate(self.wedges)}

    def __len__(self) -> int:
        return len(self.wedges) * self.module_dim

    @property
    def entries(self) -> List[Key]:
        return [(w, a) for w in self.wedges for a in range(self.module_dim)]

    def index(self, key: Key) -> int:
        w, a = key
        return self._wedge_index[w] * self.module_dim + a

    def key(self, i: int) -> Key:
        q, a = divmod(i, self.module_dim)
        return self.wedges[q], a

    def get(self, key: Key) -> Optional[int]:
        q = self._wedge_index.get(key[0])
        if q is None:
            return None
        return q * self.module_dim + key[1]


class _Context:
    """Lookup tables shared by every column of every differential."""

    def __init__(self, L: FlatLieAlgebra, rho: Representation):
        self.L = L
        self.rho = rho
        # column view of each action matrix: act_cols[x][b] = {a: rho(x)[a, b]}
        self.act_cols: List[Dict[int, Dict[int, Fraction]]] = []
        for mat in rho.actions:
            cols: Dict[int, Dict[int, Fraction]] = {}
            for a, row in mat.items():
                for b, v in row.items():
                    cols.setdefault(b, {})[a] = v
            self.act_cols.append(cols)
        # by_target[l] = [(i, j, coefficient of x_l in [x_i, x_j])], i < j
        self.by_target: Dict[int, List[Tuple[int, int, Fraction]]] = {}
        for (i, j), vec in L.structure.items():
            for l, c in vec.items():
                self.by_target.setdefault(l, []).append((i, j, c))


def column_image(ctx: _Context, ys: Tuple[int, ...], b: int) -> Dict[Key, Fraction]:
    """``d`` of the basis cochain ``(ys, b)`` as a sparse map on ``(k+1)``-keys."""
    out: Dict[Key, Fraction] = {}
    present = set(ys)
    # action term
    for x in range(ctx.L.dim):
        if x in present:
            continue
        col = ctx.act_cols[x].get(b)
        if not col:
            continue
        xs = tuple(sorted(ys + (x,)))
        sign = -1 if xs.index(x) % 2 else 1
        for a, v in col.items():
            key = (xs, a)
            out[key] = out.get(key, Fraction(0)) + sign * v
    # bracket term: f([x_i, x_j], rest) with l = position r of the result in ys
    for r, l in enumerate(ys):
        pairs = ctx.by_target.get(l)
        if not pairs:
            continue
        rest = ys[:r] + ys[r + 1:]
        rest_set = set(rest)
        for i, j, c in pairs:
            if i in rest_set or j in rest_set:
                continue
            xs = tuple(sorted(rest + (i, j)))
            p, q = xs.index(i), xs.index(j)
            sign = -1 if (p + q + r) % 2 else 1
            key = (xs, b)
            out[key] = out.get(key, Fraction(0)) + sign * c
    return {k: v for k, v in out.items() if v != 0}


@dataclass
class ComplexSlice:
    """Matrix of ``d^k``: rows over ``C^{k+1}``, columns over ``C^k``."""

    degree: int
    rows_basis: CochainBasis
    cols_basis: CochainBasis
    matrix: Sparse
    _rank: Optional[int] = field(default=None, repr=False)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows_basis), len(self.cols_basis)

    def columns(self) -> Sparse:
        return linalg.transpose(self.matrix)

    def rank(self) -> int:
        if self._rank is None:
            self._rank = linalg.rank(self.matrix, len(self.cols_basis))
        return self._rank

    def apply(self, vec: Dict[int, object]) -> Dict[int, Fraction]:
        return linalg.matvec(self.matrix, vec)


def differential_matrix(L: FlatLieAlgebra, rho: Representation, k: int, _ctx: _Context = None) -> ComplexSlice:
    ctx = _ctx or _Context(L, rho)
    cols = CochainBasis(L.dim, rho.module_dim, k)
    rows = CochainBasis(L.dim, rho.module_dim, k + 1)
    matrix: Sparse = {}
    if len(rows):
        for ci, (ys, b) in enumerate(cols.entries):
            for key, v in column_image(ctx, ys, b).items():
                matrix.setdefault(rows.index(key), {})[ci] = v
    return ComplexSlice(k, rows, cols, matrix)


def verify_complex(L: FlatLieAlgebra, rho: Representation, k: int) -> bool:
    """``d^k o d^{k-1} == 0`` exactly."""
    ctx = _Context(L, rho)
    upper = differential_matrix(L, rho, k, ctx)
    lower = differential_matrix(L, rho, k - 1, ctx)
    return linalg.is_zero(linalg.matmul(upper.matrix, lower.matrix))


def rank(M) -> int:
    return linalg.rank(M)


@dataclass(frozen=True)
class DegreeDims:
    degree: int
    dim_c: int
    rank_d: int
    dim_z: int
    dim_b: int
    dim_h: int

    def to_dict(self) -> dict:
        return {
            "degree": self.degree, "dim_C": self.dim_c, "rank_d": self.rank_d,
            "dim_Z": self.dim_z, "dim_B": self.dim_b, "dim_H": self.dim_h,
        }


def assemble_dims(dim_c: Sequence[int], ranks: Sequence[int]) -> List[DegreeDims]:
    """Dims per degree from cochain dims and ranks of ``d^0, d^1, ...``."""
    out = []
    for k, (c, r) in enumerate(zip(dim_c, ranks)):
        z = c - r
        b = ranks[k - 1] if k > 0 else 0
        if z < 0 or b > z:
            raise ArithmeticError(f"inconsistent ranks in degree {k}")
        out.append(DegreeDims(k, c, r, z, b, z - b))
    return out


@dataclass
class CohomologyReport:
    degrees: List[DegreeDims]

    def h(self, k: int) -> int:
        return self.degrees[k].dim_h

    def lines(self) -> List[str]:
        out = ["k  dim C  rank d  dim Z  dim B  dim H"]
        for d in self.degrees:
            out.append(f"{d.degree:<2} {d.dim_c:>6} {d.rank_d:>7} {d.dim_z:>6} {d.dim_b:>6} {d.dim_h:>6}")
        return out

    def to_dict(self) -> dict:
        return {"degrees": [d.to_dict() for d in self.degrees]}


def cohomology_report(L: FlatLieAlgebra, rho: Representation, k_max: int) -> CohomologyReport:
    ctx = _Context(L, rho)
    dims, ranks = [], []
    for k in range(k_max + 1):
        dims.append(comb(L.dim, k) * rho.module_dim)
        ranks.append(differential_matrix(L, rho, k, ctx).rank())
    return CohomologyReport(assemble_dims(dims, ranks))


def cocycle_representatives(L: FlatLieAlgebra, rho: Representation, k: int) -> List[Dict[Key, Fraction]]:
    """Cocycles whose classes form a basis of ``H^k``, as ``{(xs, a): value}`` maps."""
    ctx = _Context(L, rho)
    dk = differential_matrix(L, rho, k, ctx)
    z = linalg.nullspace(dk.matrix, len(dk.cols_basis))
    if k > 0:
        below = differential_matrix(L, rho, k - 1, ctx)
        b = list(below.columns().values())
    else:
        b = []
    picked = linalg.complement_in_span(b, z)
    if not picked:
        raise EmptyCohomology(f"H^{k} is zero")
    basis = dk.cols_basis
    return [{basis.key(i): v for i, v in z[p].items()} for p in picked]
