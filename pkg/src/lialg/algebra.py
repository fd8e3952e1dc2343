"""Graded nilpotent Lie algebras with one-dimensional weight spaces.

The algebra is the data ``(W, c)``: a weight system and structure constants
``[e_a, e_b] = c(a, b) e_{a+b}``.  Only pairs with ``a < b`` in canonical
order are stored; ``c(b, a) = -c(a, b)`` and ``c(a, a) = 0`` are implied.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Tuple

from . import lattice
from .lattice import Weight, WeightSystem, canonical_key

Element = Dict[Weight, Fraction]


@dataclass
class ValidationReport:
    jacobi_failures: List[Tuple[Weight, Weight, Weight, Fraction]] = field(default_factory=list)
    bad_targets: List[Tuple[Weight, Weight]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.jacobi_failures and not self.bad_targets

    def __bool__(self) -> bool:
        # truthy when there is something to report
        return not self.ok

    def lines(self) -> List[str]:
        out = []
        for a, b in self.bad_targets:
            out.append(
                f"c({lattice.fmt(a)}, {lattice.fmt(b)}) targets "
                f"{lattice.fmt(lattice.add(a, b))}, which is not in W"
            )
        for a, b, c, val in self.jacobi_failures:
            out.append(
                f"Jacobi fails on ({lattice.fmt(a)}, {lattice.fmt(b)}, {lattice.fmt(c)}): L = {val}"
            )
        return out

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "jacobi_failures": [
                {"triple": [list(a), list(b), list(c)], "value": str(v)}
                for a, b, c, v in self.jacobi_failures
            ],
            "bad_targets": [[list(a), list(b)] for a, b in self.bad_targets],
        }


def _ordered(a: Weight, b: Weight) -> Tuple[Weight, Weight, int]:
    if canonical_key(a) <= canonical_key(b):
        return a, b, 1
    return b, a, -1


class GradedNilpotentAlgebra:
    """Weight system plus antisymmetric rational structure constants."""

    def __init__(
        self,
        W: WeightSystem,
        constants: Mapping[Tuple[Weight, Weight], object],
        name: str = "",
        provenance: str = "",
    ):
        self.W = W
        self.name = name
        self.provenance = provenance
        store: Dict[Tuple[Weight, Weight], Fraction] = {}
        for (a, b), value in constants.items():
            a, b = tuple(a), tuple(b)
            if a == b:
                raise ValueError(f"self-bracket c({a}, {a}) must be zero")
            if a not in W or b not in W:
                raise ValueError(f"bracket ({a}, {b}) references a weight outside W")
            lo, hi, sign = _ordered(a, b)
            if (lo, hi) in store:
                raise ValueError(f"bracket ({a}, {b}) given twice")
            v = Fraction(value) * sign
            if v != 0:
                store[(lo, hi)] = v
        self.constants = dict(sorted(store.items(), key=lambda kv: (canonical_key(kv[0][0]), canonical_key(kv[0][1]))))

    @classmethod
    def from_brackets(
        cls,
        rank: int,
        weights: Iterable,
        brackets: Iterable[Tuple[Iterable[int], Iterable[int], object]],
        **kw,
    ) -> "GradedNilpotentAlgebra":
        W = WeightSystem(rank, weights)
        consts = {}
        seen = set()
        for a, b, v in brackets:
            a, b = tuple(a), tuple(b)
            key = frozenset((a, b))
            if key in seen:
                raise ValueError(f"bracket ({a}, {b}) given twice")
            seen.add(key)
            consts[(a, b)] = v
        return cls(W, consts, **kw)

    def __repr__(self) -> str:
        label = self.name or "algebra"
        return f"<GradedNilpotentAlgebra {label}: rank {self.rank}, dim {self.dim}>"

    @property
    def rank(self) -> int:
        return self.W.rank

    @property
    def dim(self) -> int:
        return len(self.W)

    def c(self, a: Weight, b: Weight) -> Fraction:
        if a == b:
            return Fraction(0)
        lo, hi, sign = _ordered(a, b)
        v = self.constants.get((lo, hi))
        if v is None:
            return Fraction(0)
        return v * sign

    def L(self, a: Weight, b: Weight, g: Weight) -> Fraction:
        """Jacobi expression for the triple of basis vectors ``e_a, e_b, e_g``."""
        return (
            self.c(a, b) * self.c(lattice.add(a, b), g)
            + self.c(b, g) * self.c(lattice.add(b, g), a)
            + self.c(g, a) * self.c(lattice.add(g, a), b)
        )

    def nonzero_pairs(self) -> Iterable[Tuple[Weight, Weight, Fraction]]:
        for (a, b), v in self.constants.items():
            yield a, b, v

    # -- structural queries -------------------------------------------------

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        for (a, b) in self.constants:
            if lattice.add(a, b) not in self.W:
                report.bad_targets.append((a, b))
        for a, b, g in combinations(self.W.members, 3):
            val = self.L(a, b, g)
            if val != 0:
                report.jacobi_failures.append((a, b, g, val))
        return report

    def bracket(self, x: Mapping[Weight, object], y: Mapping[Weight, object]) -> Element:
        out: Element = {}
        for a, xa in x.items():
            if xa == 0:
                continue
            for b, yb in y.items():
                if yb == 0:
                    continue
                c = self.c(a, b)
                if c == 0:
                    continue
                s = lattice.add(a, b)
                out[s] = out.get(s, Fraction(0)) + Fraction(xa) * Fraction(yb) * c
        return {w: v for w, v in out.items() if v != 0}

    def lower_central_series(self) -> List[frozenset]:
        terms = [frozenset(self.W.members)]
        while terms[-1]:
            prev = terms[-1]
            nxt = frozenset(
                lattice.add(a, b)
                for (a, b) in self.constants
                if a in prev or b in prev
            )
            terms.append(nxt)
        return terms

    def nilindex(self) -> int:
        """Smallest ``k`` with ``N^k = 0``."""
        return len(self.lower_central_series())

    def center(self) -> frozenset:
        busy = set()
        for (a, b) in self.constants:
            busy.add(a)
            busy.add(b)
        return frozenset(w for w in self.W if w not in busy)

    def derived_weights(self) -> frozenset:
        """Weights spanning ``N^2``."""
        return frozenset(lattice.add(a, b) for (a, b) in self.constants)

    def check_generation(self) -> Tuple[bool, List[Weight]]:
        offending = []
        for mu in self.W:
            if lattice.is_primitive(mu):
                continue
            ok = False
            for alpha in self.W.primitives():
                beta = lattice.sub(mu, alpha)
                if beta is not None and beta in self.W and self.c(alpha, beta) != 0:
                    ok = True
                    break
            if not ok:
                offending.append(mu)
        return not offending, offending

    def check_maximal_rank(self) -> Tuple[bool, List[str]]:
        diagnostics = []
        prims = self.W.primitives()
        quotient_dim = len(self.W) - len(self.derived_weights() & set(self.W.members))
        if len(prims) != quotient_dim:
            diagnostics.append(
                f"{len(prims)} primitive weights but dim(N/N^2) = {quotient_dim}"
            )
        if len(prims) != self.rank:
            diagnostics.append(
                f"only {len(prims)} of the {self.rank} unit weights are in W"
            )
        ok_gen, offending = self.check_generation()
        if not ok_gen:
            diagnostics.append(
                "not generated by primitive weights at "
                + ", ".join(lattice.fmt(w) for w in offending)
            )
        return not diagnostics, diagnostics

    def is_maximal_rank(self) -> bool:
        return self.check_maximal_rank()[0]


def basis_element(w: Weight) -> Element:
    return {w: Fraction(1)}
