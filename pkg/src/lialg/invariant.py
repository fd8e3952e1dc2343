"""Torus-invariant cochains of the nilradical and the assembled cohomology of ``R_T``.

A cochain ``f in C^j(N, M)`` is torus-invariant exactly when it sends
``e_{mu_1} ^ ... ^ e_{mu_j}`` into the module weight space of
``mu_1 + ... + mu_j``.  Those basis cochains span a tiny subcomplex, and

    dim H^n(R_T, M) = sum_{i+j=n} C(dim T, i) * h^j_inv.

Inside the subcomplex every entry also has a module weight ``Lambda``.  The
bracket part of ``d`` keeps ``Lambda`` while the action part strictly raises
it, so ``d`` is block upper-triangular in ``Lambda``.  The diagonal blocks are
the complexes ``C(N, V_Lambda)`` with a trivial one-dimensional-per-vector
module; they are reported per weight and can be run in parallel.  Their
cochain dims add up to the totals; their cohomology is that of the associated
graded complex, so it only bounds the true invariant cohomology from above.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from . import lattice, linalg
from .algebra import GradedNilpotentAlgebra
from .complex import DegreeDims, Key, _Context, assemble_dims, column_image
from .errors import EmptyCohomology, NotMaximalRank
from .extension import FlatLieAlgebra, Representation, extend, nilradical_restriction
from .lattice import Weight
from .linalg import Sparse


def default_threads() -> int:
    env = os.environ.get("LIALG_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _wsum(labels: Sequence[Weight], rank: int) -> Weight:
    out = lattice.zero(rank)
    for w in labels:
        out = lattice.add(out, w)
    return out


class GradedCochainBasis:
    """Invariant basis cochains ``(S, nu)`` with ``tag(nu) == sum of the weights in S``."""

    def __init__(self, N: FlatLieAlgebra, M: Representation, j: int):
        self.degree = j
        rank = len(M.weight_tags[0]) if M.weight_tags else 0
        by_tag: Dict[Weight, List[int]] = {}
        for nu, tag in enumerate(M.weight_tags):
            by_tag.setdefault(tag, []).append(nu)
        self.entries: List[Key] = []
        if 0 <= j <= N.dim:
            for S in combinations(range(N.dim), j):
                target = _wsum([N.labels[s] for s in S], rank)
                for nu in by_tag.get(target, ()):
                    self.entries.append((S, nu))
        self._index = {e: i for i, e in enumerate(self.entries)}
        self.tags = M.weight_tags

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, key: Key) -> Optional[int]:
        return self._index.get(key)

    def index(self, key: Key) -> int:
        return self._index[key]

    def weight_of(self, i: int) -> Weight:
        """The module weight ``Lambda`` of entry ``i``."""
        return self.tags[self.entries[i][1]]


class GradingError(AssertionError):
    """The differential left the invariant subspace (should never happen)."""


def _restricted(ctx: _Context, rows: GradedCochainBasis, cols: GradedCochainBasis) -> Sparse:
    matrix: Sparse = {}
    for ci, (S, nu) in enumerate(cols.entries):
        for key, v in column_image(ctx, S, nu).items():
            ri = rows.get(key)
            if ri is None:
                raise GradingError(f"d maps invariant {(S, nu)} outside the invariant subspace at {key}")
            matrix.setdefault(ri, {})[ci] = v
    return matrix


def invariant_subcomplex(N: FlatLieAlgebra, M: Representation, j: int):
    """Bases in degrees ``j-1, j, j+1`` and the restricted ``d^{j-1}``, ``d^j``."""
    ctx = _Context(N, M)
    bases = [GradedCochainBasis(N, M, i) for i in (j - 1, j, j + 1)]
    d_lo = _restricted(ctx, bases[1], bases[0])
    d_hi = _restricted(ctx, bases[2], bases[1])
    return bases, (d_lo, d_hi)


def _block(matrix: Sparse, rows: GradedCochainBasis, cols: GradedCochainBasis, lam: Weight) -> Sparse:
    """Diagonal block of ``matrix`` at module weight ``lam``."""
    out: Sparse = {}
    for r, row in matrix.items():
        if rows.weight_of(r) != lam:
            continue
        kept = {c: v for c, v in row.items() if cols.weight_of(c) == lam}
        if kept:
            out[r] = kept
    return out


@dataclass
class InvariantReport:
    """Invariant cochain/cocycle/coboundary/cohomology dims per degree.

    ``blocks[lam]`` holds the same table for the diagonal block at module
    weight ``lam``; ``graded_h`` sums the block cohomology per degree.
    """

    degrees: List[DegreeDims]
    blocks: Dict[Weight, List[DegreeDims]] = field(default_factory=dict)

    def h(self, j: int) -> int:
        return self.degrees[j].dim_h

    def graded_h(self, j: int) -> int:
        return sum(b[j].dim_h for b in self.blocks.values())

    def lines(self) -> List[str]:
        out = ["j  dim C  dim Z  dim B  h_inv"]
        for d in self.degrees:
            out.append(f"{d.degree:<2} {d.dim_c:>6} {d.dim_z:>6} {d.dim_b:>6} {d.dim_h:>6}")
        return out

    def to_dict(self) -> dict:
        return {
            "degrees": [d.to_dict() for d in self.degrees],
            "blocks": {
                lattice.fmt(lam): [d.to_dict() for d in dims]
                for lam, dims in self.blocks.items()
            },
        }


def invariant_report(N: FlatLieAlgebra, M: Representation, j_max: int,
                     threads: Optional[int] = None, blocks: bool = True) -> InvariantReport:
    ctx = _Context(N, M)
    bases = [GradedCochainBasis(N, M, j) for j in range(j_max + 2)]
    mats = [_restricted(ctx, bases[j + 1], bases[j]) for j in range(j_max + 1)]
    ranks = [linalg.rank(m, len(bases[j])) for j, m in enumerate(mats)]
    report = InvariantReport(assemble_dims([len(b) for b in bases[:j_max + 1]], ranks))
    if not blocks:
        return report
    weights = sorted({w for b in bases[:j_max + 1] for i in range(len(b)) for w in (b.weight_of(i),)},
                     key=lattice.canonical_key)

    def one(lam: Weight) -> List[DegreeDims]:
        dims = [sum(1 for i in range(len(bases[j])) if bases[j].weight_of(i) == lam)
                for j in range(j_max + 1)]
        rks = [linalg.rank(_block(mats[j], bases[j + 1], bases[j], lam), len(bases[j]))
               for j in range(j_max + 1)]
        return assemble_dims(dims, rks)

    n_threads = threads or default_threads()
    if n_threads > 1 and len(weights) > 1:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            results = list(pool.map(one, weights))
    else:
        results = [one(lam) for lam in weights]
    report.blocks = dict(zip(weights, results))
    return report


def invariant_cohomology_dim(N: FlatLieAlgebra, M: Representation, j: int) -> int:
    return invariant_report(N, M, j, blocks=False).h(j)


def assemble(torus_dim: int, h_inv: Sequence[int], n: int) -> int:
    """``sum_{i+j=n} C(torus_dim, i) * h_inv[j]``."""
    return sum(comb(torus_dim, n - j) * h_inv[j] for j in range(n + 1))


def hochschild_serre_dim(N: FlatLieAlgebra, torus_dim: int, M: Representation, n: int) -> int:
    report = invariant_report(N, M, n, blocks=False)
    return assemble(torus_dim, [report.h(j) for j in range(n + 1)], n)


def invariant_representatives(N: FlatLieAlgebra, M: Representation, j: int) -> List[Dict[Key, Fraction]]:
    """Invariant ``j``-cocycles whose classes span ``H^j(N, M)^T``."""
    bases, (d_lo, d_hi) = invariant_subcomplex(N, M, j)
    z = linalg.nullspace(d_hi, len(bases[1]))
    b = list(linalg.transpose(d_lo).values())
    picked = linalg.complement_in_span(b, z)
    if not picked:
        raise EmptyCohomology(f"H^{j}(N, M)^T is zero")
    return [{bases[1].entries[i]: v for i, v in z[p].items()} for p in picked]


def classify_invariant(N: FlatLieAlgebra, M: Representation, f: Dict[Key, object]) -> Tuple[bool, bool]:
    """``(is_cocycle, is_coboundary)`` for an invariant 2-cochain ``f``."""
    bases, (d_lo, d_hi) = invariant_subcomplex(N, M, 2)
    vec = {}
    for key, v in f.items():
        i = bases[1].get(key)
        if i is None:
            raise GradingError(f"{key} is not a torus-invariant basis cochain")
        if v != 0:
            vec[i] = Fraction(v)
    cocycle = not linalg.matvec(d_hi, vec)
    ech = linalg.Echelon()
    for col in linalg.transpose(d_lo).values():
        ech.insert(col)
    return cocycle, ech.contains(vec)


@dataclass
class RigidityVerdict:
    """Outcome of a rigidity decision.

    ``source`` is ``"criterion"`` when a sufficient condition settled it and
    ``"computed"`` when the invariant cohomology did.
    """

    rigid: bool
    source: str
    criterion: Optional[str] = None
    dim_h2: Optional[int] = None
    lower_bound: Optional[int] = None
    h_inv: Optional[List[int]] = None
    witnesses: List[Dict[Key, Fraction]] = field(default_factory=list)
    matches: List[Tuple[str, Tuple[Weight, ...]]] = field(default_factory=list)

    def headline(self) -> str:
        tag = "RIGID" if self.rigid else "NON-RIGID"
        why = self.criterion if self.criterion else "computed"
        text = f"{tag} ({why})"
        if self.dim_h2 is not None:
            text += f", dim H^2 = {self.dim_h2}"
        elif self.lower_bound is not None:
            text += f", dim H^2 >= {self.lower_bound}"
        return text

    def to_dict(self) -> dict:
        return {
            "rigid": self.rigid,
            "source": self.source,
            "criterion": self.criterion,
            "dim_H2": self.dim_h2,
            "lower_bound": self.lower_bound,
            "h_inv": self.h_inv,
            "matches": [{"case": c, "weights": [list(w) for w in ws]} for c, ws in self.matches],
            "witnesses": [
                [{"args": list(S), "value": nu, "coefficient": str(v)} for (S, nu), v in f.items()]
                for f in self.witnesses
            ],
            "headline": self.headline(),
        }


def nilradical_and_module(A: GradedNilpotentAlgebra) -> Tuple[FlatLieAlgebra, FlatLieAlgebra, Representation]:
    L = extend(A)
    N, M = nilradical_restriction(L)
    return L, N, M


def rigidity(A: GradedNilpotentAlgebra, threads: Optional[int] = None, witnesses: bool = True) -> RigidityVerdict:
    """Decide rigidity of ``R_T`` from ``h^0, h^1, h^2`` of the invariant subcomplex."""
    ok, diag = A.check_maximal_rank()
    if not ok:
        raise NotMaximalRank("; ".join(diag))
    _, N, M = nilradical_and_module(A)
    report = invariant_report(N, M, 2, threads=threads, blocks=False)
    h = [report.h(j) for j in range(3)]
    dim = assemble(A.rank, h, 2)
    verdict = RigidityVerdict(rigid=dim == 0, source="computed", dim_h2=dim, h_inv=h)
    if dim and witnesses and h[2]:
        verdict.witnesses = invariant_representatives(N, M, 2)
    return verdict
