"""Weight-combinatorial tests for rigidity and non-rigidity of ``R_T``.

Every rigidity test here is a sufficient condition only: when it holds,
``H^2(R_T, R_T) = 0``.  The non-rigidity scan looks for a primitive
configuration sitting under a central top weight; each hit comes with an
explicit invariant 2-cocycle that is checked to be non-trivial.

Case tags used by the scan:

* ``"3a+2b"`` -- ordered primitive pair with ``3a+2b`` central and
  ``3a+b, 2a+2b`` in ``W``;
* ``"4a+2b"`` -- ordered pair with ``4a+2b`` central and
  ``4a+b, 3a+2b, 2a+2b`` in ``W``;
* ``"a+b+c"`` -- unordered primitive triple with ``a+b+c`` central and all
  three pair sums in ``W``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

from . import lattice, linalg
from .algebra import GradedNilpotentAlgebra
from .errors import (IsACoboundary, LengthMismatch, NotACocycle, NotMaximalRank,
                     PreconditionFailed)
from .invariant import (RigidityVerdict, classify_invariant, invariant_subcomplex,
                        nilradical_and_module, rigidity)
from .lattice import Weight

CASE_PAIR = "3a+2b"
CASE_LONG_PAIR = "4a+2b"
CASE_TRIPLE = "a+b+c"

Match = Tuple[str, Tuple[Weight, ...]]


def _require_maximal_rank(A: GradedNilpotentAlgebra) -> None:
    ok, diag = A.check_maximal_rank()
    if not ok:
        raise NotMaximalRank("; ".join(diag))


def _lin(A, *terms) -> Optional[Weight]:
    """``sum k_i * w_i`` for ``(k_i, w_i)`` pairs, as a weight."""
    out = lattice.zero(A.rank)
    for k, w in terms:
        out = lattice.add(out, lattice.scale(k, w))
    return out


# -- per-weight conditions -------------------------------------------------


def leger_luks_weight(lam: Weight, A: GradedNilpotentAlgebra) -> bool:
    """Whether ``lam`` passes the Leger–Luks exchange condition.

    For every two different decompositions ``lam = a + g = b + d`` with
    ``a != b`` primitive, ``mu = lam - a - b`` must lie in ``W`` and one of
    the following must hold:
      1. ``a + b`` is not a weight;
      2. ``a + 2b`` is not a weight and ``mu - b`` is a weight;
      3. ``2a + b`` is not a weight and ``mu - a`` is a weight.
    """
    W = A.W
    heads = [a for a in W.primitives() if lattice.sub(lam, a) in W]
    for a, b in combinations(heads, 2):
        if lattice.sub(lam, a) == b:
            # lam = a + b: both decompositions are the same unordered pair
            continue
        mu = lattice.sub(lattice.sub(lam, a), b)
        if mu is None or mu not in W:
            return False
        if lattice.add(a, b) not in W:
            continue
        if lattice.add(a, lattice.scale(2, b)) not in W and lattice.sub(mu, b) in W:
            continue
        if lattice.add(lattice.scale(2, a), b) not in W and lattice.sub(mu, a) in W:
            continue
        return False
    return True


def unique_primitive_weight(lam: Weight, A: GradedNilpotentAlgebra) -> bool:
    """Exactly one primitive ``a`` has ``lam - a`` in ``W``, and ``c(a, lam - a) != 0``."""
    W = A.W
    heads = [a for a in W.primitives() if lattice.sub(lam, a) in W]
    if len(heads) != 1:
        return False
    a = heads[0]
    return A.c(a, lattice.sub(lam, a)) != 0


def short_form_weight(lam: Weight, A: GradedNilpotentAlgebra) -> bool:
    """``lam = a_i + a_j`` or ``lam = 2a_i + a_j`` with ``i != j``."""
    coords = sorted(c for c in lam if c)
    return coords in ([1, 1], [1, 2])


@dataclass
class CriterionReport:
    per_weight: Dict[Weight, Dict[str, bool]] = field(default_factory=dict)
    flags: Dict[str, bool] = field(default_factory=dict)
    matches: List[Match] = field(default_factory=list)

    def count(self, case: str) -> int:
        return sum(1 for c, _ in self.matches if c == case)

    @property
    def m(self) -> int:
        return self.count(CASE_PAIR)

    @property
    def n(self) -> int:
        return self.count(CASE_LONG_PAIR)

    @property
    def p(self) -> int:
        return self.count(CASE_TRIPLE)

    @property
    def lower_bound(self) -> int:
        return self.m + self.n + self.p

    @property
    def cases(self) -> set:
        return {c for c, _ in self.matches}

    def lines(self) -> List[str]:
        out = []
        for name, val in self.flags.items():
            out.append(f"{name}: {'yes' if val else 'no'}")
        if self.per_weight:
            out.append("weight           leger-luks  unique-primitive  short-form")
            for lam, f in self.per_weight.items():
                out.append(
                    f"{lattice.fmt(lam):<16} {str(f['leger_luks']):<11} "
                    f"{str(f['unique_primitive']):<17} {f['short_form']}"
                )
        if self.matches:
            for case, ws in self.matches:
                out.append(f"match {case}: " + ", ".join(lattice.fmt(w) for w in ws))
        else:
            out.append("no central configuration found")
        out.append(f"m = {self.m}, n = {self.n}, p = {self.p}, lower bound = {self.lower_bound}")
        return out

    def to_dict(self) -> dict:
        return {
            "flags": dict(self.flags),
            "per_weight": {lattice.fmt(l): dict(f) for l, f in self.per_weight.items()},
            "matches": [{"case": c, "weights": [list(w) for w in ws]} for c, ws in self.matches],
            "m": self.m, "n": self.n, "p": self.p, "lower_bound": self.lower_bound,
        }


def weight_condition_report(A: GradedNilpotentAlgebra) -> Tuple[Dict[Weight, Dict[str, bool]], bool]:
    """Per-weight table of the three local conditions, and whether every weight passes one."""
    _require_maximal_rank(A)
    table = {}
    for lam in A.W:
        table[lam] = {
            "leger_luks": leger_luks_weight(lam, A),
            "unique_primitive": unique_primitive_weight(lam, A),
            "short_form": short_form_weight(lam, A),
        }
    return table, all(any(f.values()) for f in table.values())


# -- global rigidity tests ---------------------------------------------------


def two_step_check(A: GradedNilpotentAlgebra) -> bool:
    """``N^3 = 0``."""
    return A.nilindex() <= 3


def _rank_two(A: GradedNilpotentAlgebra) -> bool:
    return A.rank == 2 and len(A.W.primitives()) == 2


def short_rank_two_check(A: GradedNilpotentAlgebra) -> bool:
    """Rank two, two primitive weights and nilindex at most 5."""
    return _rank_two(A) and A.nilindex() <= 5


def rank_two_gap_check(A: GradedNilpotentAlgebra) -> bool:
    """Rank two with neither ``3a1+a2`` nor ``a1+3a2`` a weight."""
    return _rank_two(A) and (3, 1) not in A.W and (1, 3) not in A.W


def diff_bracket_check(A: GradedNilpotentAlgebra) -> Tuple[bool, List[Tuple[Weight, Weight]]]:
    """Consistency of an algebra satisfying :func:`rank_two_gap_check`.

    Checks ``diff(mu) <= 1`` for every weight, and for each pair ``t1, t2``
    with ``t1 + t2`` a weight: ``c(t1, t2) == 0`` exactly when
    ``diff(t1) + diff(t2) == 0``.  Returns the offending weights/pairs.
    """
    if not rank_two_gap_check(A):
        raise PreconditionFailed("needs a rank-two algebra without 3a1+a2 and a1+3a2")
    bad: List[Tuple[Weight, Weight]] = []
    for mu in A.W:
        if lattice.diff(mu) > 1:
            bad.append((mu, mu))
    for t1, t2 in combinations(A.W.members, 2):
        if lattice.add(t1, t2) not in A.W:
            continue
        vanishes = A.c(t1, t2) == 0
        flat = lattice.diff(t1) + lattice.diff(t2) == 0
        if vanishes != flat:
            bad.append((t1, t2))
    return not bad, bad


def top_degree_reduction(A: GradedNilpotentAlgebra, computed: Sequence[int]) -> bool:
    """With ``s = nilindex - 1`` and ``H^0..H^{s-1}`` supplied, all-zero means ``H(R_T, R_T) = 0``."""
    s = A.nilindex() - 1
    if len(computed) != s:
        raise LengthMismatch(f"expected {s} dimensions (degrees 0..{s - 1}), got {len(computed)}")
    return all(d == 0 for d in computed)


# -- non-rigidity scan -------------------------------------------------------


def is_central(lam: Weight, A: GradedNilpotentAlgebra) -> bool:
    """``lam`` is a weight and ``e_lam`` brackets to zero with everything.

    Accepted either because ``lam + nu`` is never a weight or because every
    ``c(lam, nu)`` vanishes.
    """
    if lam not in A.W:
        return False
    dead_end = all(lattice.add(lam, nu) not in A.W for nu in A.W)
    return dead_end or all(A.c(lam, nu) == 0 for nu in A.W)


def _natural_primitives(A: GradedNilpotentAlgebra) -> List[Weight]:
    """Primitive weights ordered ``a1, a2, ...``."""
    return sorted(A.W.primitives(), reverse=True)


def central_configuration_scan(A: GradedNilpotentAlgebra) -> CriterionReport:
    _require_maximal_rank(A)
    W = A.W
    prims = _natural_primitives(A)
    report = CriterionReport()
    for a, b in permutations(prims, 2):
        top = _lin(A, (3, a), (2, b))
        if is_central(top, A) and _lin(A, (3, a), (1, b)) in W and _lin(A, (2, a), (2, b)) in W:
            report.matches.append((CASE_PAIR, (a, b)))
    for a, b in permutations(prims, 2):
        top = _lin(A, (4, a), (2, b))
        need = [_lin(A, (4, a), (1, b)), _lin(A, (3, a), (2, b)), _lin(A, (2, a), (2, b))]
        if is_central(top, A) and all(w in W for w in need):
            report.matches.append((CASE_LONG_PAIR, (a, b)))
    for a, b, g in combinations(prims, 3):
        top = _lin(A, (1, a), (1, b), (1, g))
        need = [lattice.add(a, b), lattice.add(a, g), lattice.add(b, g)]
        if is_central(top, A) and all(w in W for w in need):
            report.matches.append((CASE_TRIPLE, (a, b, g)))
    return report


# -- witnesses ---------------------------------------------------------------


def _orient_triple(A: GradedNilpotentAlgebra, a, b, g):
    """Order an unordered triple so that the preferred witness applies if any ordering does."""
    for x, y, z in permutations((a, b, g)):
        if (A.c(y, lattice.add(x, z)) != 0 and A.c(z, lattice.add(x, y)) != 0
                and A.c(x, z) != 0):
            return x, y, z, True
    return a, b, g, False


def witness_values(A: GradedNilpotentAlgebra, match: Match) -> Dict[Tuple[Weight, Weight], Tuple[Fraction, Weight]]:
    """The explicit cochain ``f(e_u, e_v) = value * e_target`` for a scan match."""
    case, ws = match
    c = A.c
    f: Dict[Tuple[Weight, Weight], Tuple[Fraction, Weight]] = {}

    def put(u, v, value, target):
        f[(u, v)] = (Fraction(value), target)

    try:
        if case == CASE_PAIR:
            a, b = ws
            top = _lin(A, (3, a), (2, b))
            ab, a2b, a3b, a2b2 = (lattice.add(a, b), _lin(A, (2, a), (1, b)),
                                  _lin(A, (3, a), (1, b)), _lin(A, (2, a), (2, b)))
            if c(b, a3b) != 0:
                put(a, a2b2, 1, top)
                put(ab, a2b, c(b, a2b) / c(a, b), top)
            else:
                put(b, a3b, 1, top)
                put(ab, a2b, c(a2b, a) / c(a, b), top)
        elif case == CASE_LONG_PAIR:
            a, b = ws
            top3, top4 = _lin(A, (3, a), (2, b)), _lin(A, (4, a), (2, b))
            ab, a2b, a3b, a4b = (lattice.add(a, b), _lin(A, (2, a), (1, b)),
                                 _lin(A, (3, a), (1, b)), _lin(A, (4, a), (1, b)))
            num = c(top3, a) * c(b, a2b)
            put(b, a3b, 1, top3)
            put(b, a4b, num / (c(a2b, a) * c(a3b, a)), top4)
            put(ab, a2b, c(b, a2b) / c(a, b), top3)
            put(ab, a3b, num / (c(a2b, a) * c(a, b)), top4)
        elif case == CASE_TRIPLE:
            a, b, g, preferred = _orient_triple(A, *ws)
            top = _lin(A, (1, a), (1, b), (1, g))
            if preferred:
                put(a, lattice.add(b, g), 1, top)
                put(b, lattice.add(a, g), c(b, g) / c(a, g), top)
            else:
                # some ordering has c(b, a+g) == 0; pick it for the fallback form
                for x, y, z in permutations(ws):
                    if c(y, lattice.add(x, z)) == 0 and c(x, y) != 0:
                        a, b, g = x, y, z
                        break
                put(b, lattice.add(a, g), 1, top)
                put(lattice.add(a, b), g, c(g, a) / c(a, b), top)
        else:
            raise ValueError(f"unknown case tag {case!r}")
    except ZeroDivisionError as exc:
        raise NotACocycle(f"{case} witness for {ws}: a structure constant the formula divides by is zero") from exc
    return f


def _as_invariant(A: GradedNilpotentAlgebra, values) -> Dict[Tuple[Tuple[int, ...], int], Fraction]:
    W = A.W
    f: Dict[Tuple[Tuple[int, ...], int], Fraction] = {}
    for (u, v), (value, target) in values.items():
        i, j = W.index(u), W.index(v)
        if i > j:
            i, j, value = j, i, -value
        key = ((i, j), W.index(target))
        f[key] = f.get(key, Fraction(0)) + value
    return {k: v for k, v in f.items() if v != 0}


def _solve_on_support(N, M, support) -> List[Dict[Tuple[Tuple[int, ...], int], Fraction]]:
    """Closed invariant 2-cochains supported on ``support`` (a basis of them)."""
    bases, (_, d_hi) = invariant_subcomplex(N, M, 2)
    cols = [bases[1].index(key) for key in support]
    pos = {c: p for p, c in enumerate(cols)}
    restricted = {}
    for r, row in d_hi.items():
        kept = {pos[c]: v for c, v in row.items() if c in pos}
        if kept:
            restricted[r] = kept
    return [{support[p]: v for p, v in vec.items()} for vec in linalg.nullspace(restricted, len(cols))]


def witness_with_origin(A: GradedNilpotentAlgebra, match: Match, strict: bool = False):
    """``(f, origin)`` where ``origin`` is ``"formula"`` or ``"solved on formula support"``.

    The explicit formula for the match is tried first.  If it is not closed
    (this happens for the ``4a+2b`` formula) and ``strict`` is false, the
    coefficients are re-solved on the same set of argument pairs and the
    first closed, non-exact combination is returned.
    """
    _require_maximal_rank(A)
    f = _as_invariant(A, witness_values(A, match))
    _, N, M = nilradical_and_module(A)
    cocycle, coboundary = classify_invariant(N, M, f)
    if cocycle and not coboundary:
        return f, "formula"
    if strict or not f:
        if not cocycle:
            raise NotACocycle(f"{match[0]} witness for {match[1]} is not closed: {f}")
        raise IsACoboundary(f"{match[0]} witness for {match[1]} is exact: {f}")
    for g in _solve_on_support(N, M, sorted(f)):
        closed, exact = classify_invariant(N, M, g)
        if closed and not exact:
            return g, "solved on formula support"
    if not cocycle:
        raise NotACocycle(f"{match[0]} witness for {match[1]} is not closed: {f}")
    raise IsACoboundary(f"{match[0]} witness for {match[1]} is exact: {f}")


def witness_cocycle(A: GradedNilpotentAlgebra, match: Match, strict: bool = False):
    """Invariant 2-cochain of ``N`` with values in ``R_T`` certifying ``H^2 != 0``.

    Keys are ``((i, j), k)`` with ``i < j`` indices of nilradical basis
    vectors and ``k`` the index of the target in ``R_T``.  The result is
    checked to be a cocycle and not a coboundary; see
    :func:`witness_with_origin` for how the coefficients are found.
    """
    return witness_with_origin(A, match, strict=strict)[0]


def format_cochain(A: GradedNilpotentAlgebra, f) -> List[str]:
    """Bracket-list form ``f(e[u], e[v]) = x e[w]``."""
    W = A.W
    out = []
    for ((i, j), k), v in sorted(f.items()):
        out.append(f"f(e[{lattice.fmt(W.members[i])}], e[{lattice.fmt(W.members[j])}]) = "
                   f"{v} e[{lattice.fmt(W.members[k])}]")
    return out


# -- orchestration -----------------------------------------------------------

RIGID_TESTS = (
    ("N^3 = 0", two_step_check),
    ("rank two, nilindex <= 5", short_rank_two_check),
    ("rank two, 3a1+a2 and a1+3a2 absent", rank_two_gap_check),
)
LOCAL_TEST = "every weight passes a local condition"
CASE_NAMES = {
    CASE_PAIR: "central 3a+2b configuration",
    CASE_LONG_PAIR: "central 4a+2b configuration",
    CASE_TRIPLE: "central a+b+c configuration",
}


def criterion_report(A: GradedNilpotentAlgebra) -> CriterionReport:
    _require_maximal_rank(A)
    report = central_configuration_scan(A)
    table, overall = weight_condition_report(A)
    report.per_weight = table
    report.flags = {name: test(A) for name, test in RIGID_TESTS}
    report.flags[LOCAL_TEST] = overall
    return report


def decide(A: GradedNilpotentAlgebra, confirm: bool = False, threads: Optional[int] = None) -> RigidityVerdict:
    """Rigidity tests first, then the central-configuration scan, then computation.

    With ``confirm=True`` the invariant cohomology is computed as well and
    filled into the verdict (the label still names the deciding test).
    """
    _require_maximal_rank(A)
    crit: Optional[str] = None
    for name, test in RIGID_TESTS:
        if test(A):
            crit = name
            break
    if crit is None and weight_condition_report(A)[1]:
        crit = LOCAL_TEST
    if crit is not None:
        verdict = RigidityVerdict(rigid=True, source="criterion", criterion=crit)
        if confirm:
            computed = rigidity(A, threads=threads, witnesses=False)
            verdict.dim_h2, verdict.h_inv = computed.dim_h2, computed.h_inv
        return verdict
    scan = central_configuration_scan(A)
    if scan.matches:
        first = scan.matches[0][0]
        cases = sorted(scan.cases)
        label = CASE_NAMES[first] if len(cases) == 1 else "central configurations " + ", ".join(cases)
        verdict = RigidityVerdict(
            rigid=False, source="criterion", criterion=label,
            lower_bound=scan.lower_bound, matches=list(scan.matches),
            witnesses=[witness_cocycle(A, m) for m in scan.matches],
        )
        if confirm:
            computed = rigidity(A, threads=threads, witnesses=False)
            verdict.dim_h2, verdict.h_inv = computed.dim_h2, computed.h_inv
        return verdict
    return rigidity(A, threads=threads)
