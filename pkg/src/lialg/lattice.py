"""Weights over the primitive weights and finite weight systems.

A weight is a plain tuple of non-negative integers; coordinate ``i`` is the
multiplicity of the ``i``-th primitive weight.  Tuples keep weights hashable
and cheap, which matters because every cochain basis is keyed by them.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .errors import RankError

Weight = Tuple[int, ...]


def weight(*coords: int) -> Weight:
    """Build a weight, checking that all coordinates are non-negative ints."""
    if len(coords) == 1 and not isinstance(coords[0], int):
        coords = tuple(coords[0])
    w = tuple(int(c) for c in coords)
    if any(c < 0 for c in w):
        raise ValueError(f"negative coordinate in weight {w}")
    return w


def zero(rank: int) -> Weight:
    return (0,) * rank


def unit(rank: int, i: int) -> Weight:
    return tuple(1 if j == i else 0 for j in range(rank))


def length(w: Weight) -> int:
    return sum(w)


def diff(w: Weight) -> int:
    """``|p - q|`` for a rank-2 weight ``p*a1 + q*a2``."""
    if len(w) != 2:
        raise RankError(f"diff is defined only for rank 2, got rank {len(w)}")
    return abs(w[0] - w[1])


def _check_ranks(a: Weight, b: Weight) -> None:
    if len(a) != len(b):
        raise RankError(f"rank mismatch: {a} vs {b}")


def add(a: Weight, b: Weight) -> Weight:
    _check_ranks(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Optional[Weight]:
    """``a - b``, or ``None`` when some coordinate would go negative."""
    _check_ranks(a, b)
    out = tuple(x - y for x, y in zip(a, b))
    if any(c < 0 for c in out):
        return None
    return out


def scale(k: int, w: Weight) -> Weight:
    return tuple(k * c for c in w)


def is_primitive(w: Weight) -> bool:
    return length(w) == 1


def canonical_key(w: Weight) -> tuple:
    return (length(w), w)


def fmt(w: Weight) -> str:
    """Human form such as ``2a1+a2``; the zero weight prints as ``0``."""
    parts = []
    for i, c in enumerate(w):
        if c == 0:
            continue
        parts.append(f"a{i + 1}" if c == 1 else f"{c}a{i + 1}")
    return "+".join(parts) if parts else "0"


class WeightSystem:
    """A finite set of distinct weights of a common rank, in canonical order.

    Canonical order sorts by length and then lexicographically on the
    coordinates, so enumerations built on top of it are deterministic.
    """

    __slots__ = ("rank", "members", "_index")

    def __init__(self, rank: int, members: Iterable[Sequence[int]]):
        if rank < 1:
            raise RankError("rank must be positive")
        ws = [weight(*m) for m in members]
        for w in ws:
            if len(w) != rank:
                raise RankError(f"weight {w} does not have rank {rank}")
            if length(w) == 0:
                raise ValueError("the zero weight cannot be a member of W")
        if len(set(ws)) != len(ws):
            raise ValueError("weights in a system must be distinct")
        self.rank = rank
        self.members: Tuple[Weight, ...] = tuple(sorted(ws, key=canonical_key))
        self._index = {w: i for i, w in enumerate(self.members)}

    def __contains__(self, w: object) -> bool:
        return w in self._index

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeightSystem)
            and self.rank == other.rank
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.members))

    def __repr__(self) -> str:
        return f"WeightSystem(rank={self.rank}, members={list(self.members)})"

    def index(self, w: Weight) -> int:
        return self._index[w]

    def primitives(self) -> Tuple[Weight, ...]:
        return tuple(w for w in self.members if is_primitive(w))

    def max_length(self) -> int:
        return max((length(w) for w in self.members), default=0)

    def of_length(self, k: int) -> Tuple[Weight, ...]:
        return tuple(w for w in self.members if length(w) == k)


def decompositions(lam: Weight, W: WeightSystem) -> list:
    """All unordered pairs ``(a, b)`` of members of ``W`` with ``a + b == lam``.

    Each pair is reported once, with ``a`` first in canonical order.  A pair
    ``(a, a)`` appears only when ``2a == lam``.
    """
    if len(lam) != W.rank:
        raise RankError(f"weight {lam} does not have rank {W.rank}")
    out = []
    for a in W:
        b = sub(lam, a)
        if b is None or b not in W:
            continue
        if canonical_key(a) <= canonical_key(b):
            out.append((a, b))
    return out
