"""The maximal solvable extension ``R = N x| T`` as a plain structure-constant algebra.

``FlatLieAlgebra`` knows nothing about weights beyond the labels attached to
its basis; ``Representation`` carries sparse action matrices and a weight tag
per module basis vector, which is all the cochain code needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from . import lattice
from .algebra import GradedNilpotentAlgebra
from .errors import NotMaximalRank
from .lattice import Weight
from .linalg import rank as matrix_rank

Vec = Dict[int, Fraction]


@dataclass(frozen=True)
class TorusIndex:
    i: int

    def __str__(self) -> str:
        return f"t{self.i + 1}"


Label = Union[Weight, TorusIndex]


def label_str(label: Label) -> str:
    if isinstance(label, TorusIndex):
        return str(label)
    return "e[" + lattice.fmt(label) + "]"


class FlatLieAlgebra:
    """Lie algebra on basis ``x_0..x_{d-1}`` with sparse structure constants.

    ``structure[(i, j)]`` (``i < j``) is ``[x_i, x_j]`` as a sparse vector.
    """

    def __init__(self, labels: Sequence[Label], structure: Mapping[Tuple[int, int], Mapping[int, object]]):
        self.labels: Tuple[Label, ...] = tuple(labels)
        self.dim = len(self.labels)
        self.structure: Dict[Tuple[int, int], Vec] = {}
        for (i, j), vec in structure.items():
            if i == j:
                raise ValueError("self-bracket must vanish")
            v = {k: Fraction(c) for k, c in vec.items() if c != 0}
            if not v:
                continue
            if i > j:
                i, j = j, i
                v = {k: -c for k, c in v.items()}
            self.structure[(i, j)] = v

    def __repr__(self) -> str:
        return f"<FlatLieAlgebra dim {self.dim}>"

    def bracket_basis(self, i: int, j: int) -> Vec:
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {k: -c for k, c in self.structure.get((j, i), {}).items()}

    def bracket(self, x: Mapping[int, object], y: Mapping[int, object]) -> Vec:
        out: Vec = {}
        for i, xi in x.items():
            for j, yj in y.items():
                if not xi or not yj:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, Fraction(0)) + Fraction(xi) * Fraction(yj) * c
        return {k: v for k, v in out.items() if v != 0}

    def jacobi_failures(self) -> List[Tuple[int, int, int]]:
        bad = []
        for i, j, k in combinations(range(self.dim), 3):
            total: Vec = {}
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                for idx, v in self.bracket(self.bracket({a: 1}, {b: 1}), {c: 1}).items():
                    total[idx] = total.get(idx, Fraction(0)) + v
            if any(v != 0 for v in total.values()):
                bad.append((i, j, k))
        return bad

    def center_dim(self) -> int:
        # x is central iff sum_i x_i [x_i, x_j] = 0 for every j
        rows: Dict[int, Vec] = {}
        for j in range(self.dim):
            for i in range(self.dim):
                for k, c in self.bracket_basis(i, j).items():
                    rows.setdefault(j * self.dim + k, {})[i] = c
        return self.dim - matrix_rank(rows, self.dim)

    def weight_indices(self) -> List[int]:
        return [i for i, lab in enumerate(self.labels) if not isinstance(lab, TorusIndex)]

    def torus_indices(self) -> List[int]:
        return [i for i, lab in enumerate(self.labels) if isinstance(lab, TorusIndex)]


class Representation:
    """Sparse action of a ``FlatLieAlgebra`` on an ``m``-dimensional module.

    ``actions[i][a][b]`` is the ``(a, b)`` entry of the matrix of ``x_i``, so
    ``x_i . m_b = sum_a actions[i][a][b] m_a``.
    """

    def __init__(self, algebra: FlatLieAlgebra, module_dim: int,
                 actions: Sequence[Mapping[int, Mapping[int, object]]],
                 weight_tags: Sequence[Weight]):
        if len(actions) != algebra.dim:
            raise ValueError("need one action matrix per algebra basis vector")
        if len(weight_tags) != module_dim:
            raise ValueError("need one weight tag per module basis vector")
        self.algebra = algebra
        self.module_dim = module_dim
        self.actions: List[Dict[int, Vec]] = []
        for mat in actions:
            clean = {}
            for a, row in mat.items():
                r = {b: Fraction(v) for b, v in row.items() if v != 0}
                if r:
                    clean[a] = r
            self.actions.append(clean)
        self.weight_tags: Tuple[Weight, ...] = tuple(tuple(w) for w in weight_tags)

    def act(self, i: int, vec: Mapping[int, object]) -> Vec:
        out: Vec = {}
        for a, row in self.actions[i].items():
            s = sum((c * Fraction(vec[b]) for b, c in row.items() if b in vec), Fraction(0))
            if s != 0:
                out[a] = s
        return out

    def dense(self, i: int) -> List[List[Fraction]]:
        m = self.module_dim
        out = [[Fraction(0)] * m for _ in range(m)]
        for a, row in self.actions[i].items():
            for b, c in row.items():
                out[a][b] = c
        return out

    def identity_failures(self) -> List[Tuple[int, int]]:
        """Pairs ``(i, j)`` where ``rho([x_i, x_j]) != [rho(x_i), rho(x_j)]``."""
        bad = []
        L = self.algebra
        for i, j in combinations(range(L.dim), 2):
            for b in range(self.module_dim):
                e = {b: 1}
                lhs: Vec = {}
                for k, c in L.bracket_basis(i, j).items():
                    for a, v in self.act(k, e).items():
                        lhs[a] = lhs.get(a, Fraction(0)) + c * v
                rhs: Vec = {}
                for a, v in self.act(i, self.act(j, e)).items():
                    rhs[a] = rhs.get(a, Fraction(0)) + v
                for a, v in self.act(j, self.act(i, e)).items():
                    rhs[a] = rhs.get(a, Fraction(0)) - v
                keys = set(lhs) | set(rhs)
                if any(lhs.get(a, 0) != rhs.get(a, 0) for a in keys):
                    bad.append((i, j))
                    break
        return bad


def extend(A: GradedNilpotentAlgebra) -> FlatLieAlgebra:
    """Build ``R_T``: weights in canonical order, then ``t_1..t_n``.

    ``[t_i, e_mu] = mu_i e_mu``; the torus is the coordinate-dual basis.
    """
    ok, diag = A.check_maximal_rank()
    if not ok:
        raise NotMaximalRank("; ".join(diag))
    W = A.W
    n = A.rank
    labels: List[Label] = list(W.members) + [TorusIndex(i) for i in range(n)]
    structure: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
    for a, b, v in A.nonzero_pairs():
        structure[(W.index(a), W.index(b))] = {W.index(lattice.add(a, b)): v}
    base = len(W)
    for mu in W:
        p = W.index(mu)
        for i in range(n):
            if mu[i]:
                # stored as [e_mu, t_i] = -mu_i e_mu
                structure[(p, base + i)] = {p: Fraction(-mu[i])}
    return FlatLieAlgebra(labels, structure)


def _tags(L: FlatLieAlgebra, rank: int) -> List[Weight]:
    return [lattice.zero(rank) if isinstance(lab, TorusIndex) else lab for lab in L.labels]


def _rank_of(L: FlatLieAlgebra) -> int:
    for lab in L.labels:
        if not isinstance(lab, TorusIndex):
            return len(lab)
    return len(L.torus_indices())


def adjoint_module(L: FlatLieAlgebra) -> Representation:
    actions = []
    for i in range(L.dim):
        mat: Dict[int, Dict[int, Fraction]] = {}
        for j in range(L.dim):
            for k, c in L.bracket_basis(i, j).items():
                mat.setdefault(k, {})[j] = c
        actions.append(mat)
    return Representation(L, L.dim, actions, _tags(L, _rank_of(L)))


def nilradical_restriction(L: FlatLieAlgebra) -> Tuple[FlatLieAlgebra, Representation]:
    """The nilradical ``N`` (weight-labelled basis) and ``ad`` of ``N`` on all of ``L``."""
    idx = L.weight_indices()
    pos = {g: p for p, g in enumerate(idx)}
    structure = {}
    for p, q in combinations(range(len(idx)), 2):
        v = L.bracket_basis(idx[p], idx[q])
        if v:
            structure[(p, q)] = {pos[k]: c for k, c in v.items()}
    N = FlatLieAlgebra([L.labels[g] for g in idx], structure)
    ad = adjoint_module(L)
    rho = Representation(N, L.dim, [ad.actions[g] for g in idx], ad.weight_tags)
    return N, rho
