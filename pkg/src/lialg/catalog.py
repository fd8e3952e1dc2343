"""Named example algebras and standard baselines.

Every builder returns a validated, maximal-rank ``GradedNilpotentAlgebra``
and raises ``BadParameter`` (naming the failing Jacobi triple) otherwise.
Where the customary constants are inconsistent, the builder applies
a minimal, documented correction and records it in ``provenance``; the
builders with a ``literal`` switch reproduce the uncorrected data on request.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Tuple

from . import lattice
from .algebra import GradedNilpotentAlgebra
from .errors import BadParameter


def _checked(alg: GradedNilpotentAlgebra) -> GradedNilpotentAlgebra:
    report = alg.validate()
    if not report.ok:
        raise BadParameter(f"{alg.name}: constants fail validation: " + "; ".join(report.lines()))
    ok, diag = alg.check_maximal_rank()
    if not ok:
        raise BadParameter(f"{alg.name}: not of maximal rank: " + "; ".join(diag))
    return alg


def _build(rank, brackets, name, provenance="", extra_weights=()) -> GradedNilpotentAlgebra:
    weights = {lattice.unit(rank, i) for i in range(rank)}
    weights.update(tuple(w) for w in extra_weights)
    for a, b, _ in brackets:
        weights.add(tuple(a))
        weights.add(tuple(b))
        weights.add(lattice.add(tuple(a), tuple(b)))
    alg = GradedNilpotentAlgebra.from_brackets(
        rank, sorted(weights), brackets, name=name, provenance=provenance
    )
    return _checked(alg)


def heisenberg() -> GradedNilpotentAlgebra:
    return _build(2, [((1, 0), (0, 1), 1)], "heisenberg")


def abelian(n: int) -> GradedNilpotentAlgebra:
    if n < 1:
        raise BadParameter("abelian(n) needs n >= 1")
    return _build(n, [], f"abelian({n})")


def model_filiform(n: int) -> GradedNilpotentAlgebra:
    """``[e1, ej] = e_{j+1}`` for ``2 <= j < n``; ``e1 -> a1``, ``ej -> (j-2)a1 + a2``."""
    if n < 4:
        raise BadParameter("model_filiform(n) needs n >= 4")
    brackets = [((1, 0), (j - 2, 1), 1) for j in range(2, n)]
    return _build(2, brackets, f"model_filiform({n})")


def model_nilpotent(blocks) -> GradedNilpotentAlgebra:
    """Chains of lengths ``blocks`` hanging off a common ``e1``.

    The ``j``-th element of chain ``i`` has weight ``(j-1)a1 + a_{i+1}``.
    """
    blocks = tuple(int(b) for b in blocks)
    if not blocks or any(b < 2 or b > 4 for b in blocks):
        raise BadParameter("model_nilpotent blocks must each lie in {2, 3, 4}")
    rank = len(blocks) + 1
    brackets = []
    for i, size in enumerate(blocks):
        head = lattice.unit(rank, i + 1)
        for j in range(1, size):
            lower = lattice.add(lattice.scale(j - 1, lattice.unit(rank, 0)), head)
            brackets.append((lattice.unit(rank, 0), lower, 1))
    label = ",".join(str(b) for b in blocks)
    return _build(rank, brackets, f"model_nilpotent({label})")


def g_family(n: int, t, literal: bool = False) -> GradedNilpotentAlgebra:
    """The ``3(n+1)``-dimensional rank-two family with parameter ``t``.

    Basis weights ``k a1 + (k-1) a2``, ``(k-1) a1 + k a2`` and ``k(a1 + a2)``
    for ``1 <= k <= n+1``.  Five bracket families, for ``1 <= i <= j <= n``:

      1. ``[e_{(i-1, i)}, e_{(j-i+1, j-i)}] = s1 e_{(j, j)}``
      2. ``[e_{(i, i)}, e_{(j-i+1, j-i)}] = (-1)^[i=j] e_{(j+1, j)}``
      3. ``[e_{(i, i)}, e_{(j-i, j-i+1)}] = s3 e_{(j, j+1)}``
      4. ``[e_{a1}, e_{(n, n+1)}] = t e_{(n+1, n+1)}``
      5. ``[e_{(i-1, i)}, e_{(n-i+2, n-i+1)}] = t e_{(n+1, n+1)}``

    With ``literal=True`` the signs are the customary
    ``s1 = (-1)^[i=1]`` and ``s3 = -(-1)^[i=j]``; those break the Jacobi
    identity for every ``t != 0`` and the builder raises.  The default uses
    ``s1 = (-1)^[i=j]`` and ``s3 = -1``, the smallest sign change that makes
    the whole family a Lie algebra (checked for ``n <= 4``).
    """
    if n < 1:
        raise BadParameter("g_family needs n >= 1")
    t = Fraction(t)

    def sgn(flag: bool) -> int:
        return -1 if flag else 1

    brackets: Dict[Tuple, Fraction] = {}

    def put(a, b, v):
        key = frozenset((a, b))
        if key in brackets:
            raise BadParameter(f"g_family: pair {a}, {b} defined twice")
        brackets[key] = (a, b, Fraction(v))

    for j in range(1, n + 1):
        for i in range(1, j + 1):
            s1 = sgn(i == 1) if literal else sgn(i == j)
            s3 = -sgn(i == j) if literal else -1
            put((i - 1, i), (j - i + 1, j - i), s1)
            put((i, i), (j - i + 1, j - i), sgn(i == j))
            put((i, i), (j - i, j - i + 1), s3)
    if t != 0:
        put((1, 0), (n, n + 1), t)
        for i in range(1, n + 1):
            put((i - 1, i), (n - i + 2, n - i + 1), t)
    weights = []
    for k in range(1, n + 2):
        weights += [(k, k - 1), (k - 1, k), (k, k)]
    note = "rank-two family free of 3a1+a2 and a1+3a2"
    if not literal:
        note += "; signs of families 1 and 3 corrected so that Jacobi holds"
    alg = GradedNilpotentAlgebra.from_brackets(
        2, weights, list(brackets.values()), name=f"g({n},{t})", provenance=note,
    )
    return _checked(alg)


def n9() -> GradedNilpotentAlgebra:
    a1, a2 = (1, 0), (0, 1)
    pairs = [
        (a1, a2), (a1, (1, 1)), (a1, (1, 2)), ((1, 1), (2, 1)), ((1, 1), (1, 2)),
        (a1, (2, 1)), (a1, (2, 2)), (a2, (1, 1)), (a2, (2, 1)), ((2, 2), a2),
    ]
    return _build(2, [(a, b, 1) for a, b in pairs], "n9")


def n10(literal: bool = False) -> GradedNilpotentAlgebra:
    """Ten-dimensional rank-two algebra with a central ``4a1+2a2``.

    With all twelve constants equal to 1 (the customary form) Jacobi fails on
    ``(a1, a2, 3a1+a2)``.  By default ``c(a2, 4a1+a2) = -1`` instead (one sign
    flip; flipping ``c(a1, 3a1+a2)`` instead gives an isomorphic algebra, as
    replacing ``e_{4a1+a2}`` by its negative turns one into the other).
    """
    a1, a2 = (1, 0), (0, 1)
    pairs = [
        (a1, a2), (a1, (1, 1)), (a1, (2, 1)), (a1, (1, 2)),
        (a1, (3, 1)), (a1, (2, 2)), (a1, (3, 2)), (a2, (1, 1)),
        (a2, (2, 1)), (a2, (4, 1)), ((1, 1), (2, 1)), ((1, 1), (3, 1)),
    ]
    flip = set() if literal else {(a2, (4, 1))}
    note = "two primitive weights, so the rank is 2"
    if not literal:
        note += "; c(a2, 4a1+a2) = -1 so that Jacobi holds"
    return _build(2, [(a, b, -1 if (a, b) in flip else 1) for a, b in pairs], "n10", provenance=note)


def n7() -> GradedNilpotentAlgebra:
    a1, a2, a3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    pairs = [(a1, a2), (a1, a3), (a2, a3), ((1, 1, 0), a3), ((1, 0, 1), a2)]
    return _build(3, [(a, b, 1) for a, b in pairs], "n7")


N12_CORRECTIONS = (
    ("c(a2, 3a1+2a2) = 1", "c(a2, 5a1+a2) = 1"),
    ("c(2a1+a2, 5a1+a2) = 1", "c(2a1+a2, 3a1+2a2) = 1"),
    ("c(a1, 5a1+a2) = 1/2", "c(a1, 3a1+2a2) = 1/2"),
    ("c(5a1+a2, a1+a2) = 1/2", "c(3a1+2a2, a1+a2) = 1/2"),
    ("c(3a1+a1, a1+a2) = 1/2", "c(3a1+a2, a1+a2) = 1/2"),
)


def n12() -> GradedNilpotentAlgebra:
    """Twelve-dimensional rank-two algebra that no sufficient test classifies, yet ``H^2 != 0``.

    Weights: ``a1, a2, k a1 + a2`` (``1 <= k <= 5``), ``3a1+2a2, 4a1+2a2,
    5a1+2a2, 4a1+3a2, 5a1+3a2``.  The eighteen customary constants
    (fourteen equal to 1, four equal to 1/2) reach sixteen weights and break
    Jacobi.  Four of them have ``5a1+a2`` and ``3a1+2a2`` interchanged in one
    argument, and one writes ``3a1+a1`` for ``3a1+a2``; with exactly those
    repairs (values unchanged, see ``N12_CORRECTIONS``) the data is a
    12-dimensional algebra of maximal rank.  A minimal-edit search over the
    admissible pairs of this weight set found no repair with fewer changes.
    """
    a1, a2 = (1, 0), (0, 1)
    h = Fraction(1, 2)
    brackets = [
        (a1, a2, 1), (a1, (4, 1), 1), (a1, (4, 2), 1), ((1, 1), (2, 1), 1), (a2, (3, 1), 1),
        (a1, (3, 1), 1), (a1, (4, 3), 1), (a2, (5, 1), 1), ((2, 1), (3, 1), 1), ((2, 1), a1, 1),
        (a2, (4, 1), 1), (a2, (4, 2), 1), (a2, (5, 2), 1), ((2, 1), (3, 2), 1),
        ((1, 1), a1, h), (a1, (3, 2), h), ((3, 1), (1, 1), h), ((3, 2), (1, 1), h),
    ]
    note = "corrected: " + "; ".join(f"{old} -> {new}" for old, new in N12_CORRECTIONS)
    return _build(2, brackets, "n12", provenance=note)


# -- registry ---------------------------------------------------------------


def _blocks(text) -> tuple:
    if isinstance(text, (tuple, list)):
        return tuple(int(b) for b in text)
    return tuple(int(b) for b in str(text).replace(" ", "").split(",") if b)


def _flag(text) -> bool:
    if isinstance(text, bool):
        return text
    value = str(text).lower()
    if value in ("1", "true", "yes"):
        return True
    if value in ("0", "false", "no"):
        return False
    raise BadParameter(f"expected a boolean, got {text!r}")


def _rational(text) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise BadParameter(f"expected a rational, got {text!r}") from exc


def _int(text) -> int:
    try:
        return int(str(text))
    except ValueError as exc:
        raise BadParameter(f"expected an integer, got {text!r}") from exc


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    builder: Callable[..., GradedNilpotentAlgebra]
    parameters: Dict[str, Tuple[Callable, object]] = field(default_factory=dict)
    description: str = ""

    def build(self, **params) -> GradedNilpotentAlgebra:
        unknown = set(params) - set(self.parameters)
        if unknown:
            raise BadParameter(f"{self.name}: unknown parameter(s) {', '.join(sorted(unknown))}")
        kwargs = {}
        for key, (convert, default) in self.parameters.items():
            kwargs[key] = convert(params[key]) if key in params else default
        return self.builder(**kwargs)


ENTRIES: Dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("heisenberg", heisenberg, {}, "3-dimensional Heisenberg algebra"),
        CatalogEntry("abelian", abelian, {"n": (_int, 2)}, "abelian algebra of dimension n"),
        CatalogEntry("filiform", model_filiform, {"n": (_int, 5)}, "model filiform algebra of dimension n"),
        CatalogEntry("model", model_nilpotent, {"blocks": (_blocks, (2, 3))},
                     "chains of lengths blocks hanging off e1"),
        CatalogEntry("g", g_family, {"n": (_int, 1), "t": (_rational, Fraction(1)), "literal": (_flag, False)},
                     "rank-two family of dimension 3(n+1) with parameter t"),
        CatalogEntry("n9", n9, {}, "central 3a1+2a2 configuration"),
        CatalogEntry("n10", n10, {"literal": (_flag, False)}, "central 4a1+2a2 configuration"),
        CatalogEntry("n7", n7, {}, "central a1+a2+a3 configuration"),
        CatalogEntry("n12", n12, {}, "non-rigid although no sufficient test applies"),
    ]
}


def build(name: str, **params) -> GradedNilpotentAlgebra:
    try:
        entry = ENTRIES[name]
    except KeyError:
        raise BadParameter(f"unknown catalog entry {name!r}; try one of {', '.join(ENTRIES)}") from None
    return entry.build(**params)
