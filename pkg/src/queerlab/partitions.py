"""Strict partitions, containment order, delta, staircases, poset ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True, order=True)
class StrictPartition:
    """A strictly decreasing sequence of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = tuple(self.parts)
        object.__setattr__(self, "parts", p)
        for i, x in enumerate(p):
            if x <= 0:
                raise ValueError("parts must be positive: %r" % (p,))
            if i + 1 < len(p) and p[i + 1] >= x:
                raise ValueError("parts must strictly decrease: %r" % (p,))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based; missing parts read as 0."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def serialize(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @staticmethod
    def parse(text: str) -> "StrictPartition":
        text = text.strip()
        if not text:
            return StrictPartition(())
        return StrictPartition(tuple(int(t) for t in text.split(",")))

    def __repr__(self):
        return "(%s)" % self.serialize()


EMPTY = StrictPartition(())


def delta(lam: StrictPartition) -> int:
    """0 if the number of parts is even, 1 if odd."""
    return lam.length % 2


def contains(lam: StrictPartition, mu: StrictPartition) -> bool:
    """Young-diagram containment lam <= mu, i.e. lam_i <= mu_i for all i."""
    if lam.length > mu.length:
        return False
    return all(l <= m for l, m in zip(lam.parts, mu.parts))


@lru_cache(maxsize=None)
def enumerate_strict(n: int) -> tuple[StrictPartition, ...]:
    """All strict partitions of n, lexicographically descending."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(remaining, maxpart):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, maxpart), 0, -1):
            for rest in rec(remaining - first, first - 1):
                yield (first,) + rest

    return tuple(StrictPartition(p) for p in rec(n, n))


def all_strict_upto(n: int) -> list[StrictPartition]:
    """All strict partitions of size 0..n, grouped by size, lex descending."""
    out = []
    for k in range(n + 1):
        out.extend(enumerate_strict(k))
    return out


def staircase(r: int) -> StrictPartition:
    """The staircase partition (r+1, r, ..., 2, 1)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return StrictPartition(tuple(range(r + 1, 0, -1)))


def add_box_candidates(lam: StrictPartition) -> list[StrictPartition]:
    """Strict partitions obtained from lam by adding one box."""
    out = []
    parts = lam.parts
    for i in range(len(parts)):
        if i == 0 or parts[i] + 1 < parts[i - 1]:
            out.append(StrictPartition(parts[:i] + (parts[i] + 1,) + parts[i + 1 :]))
    if not parts or parts[-1] > 1:
        out.append(StrictPartition(parts + (1,)))
    return out


def remove_box_candidates(lam: StrictPartition) -> list[StrictPartition]:
    """Strict partitions obtained from lam by removing one box."""
    out = []
    parts = lam.parts
    for i in range(len(parts)):
        if parts[i] - 1 > (parts[i + 1] if i + 1 < len(parts) else 0):
            out.append(StrictPartition(parts[:i] + (parts[i] - 1,) + parts[i + 1 :]))
        elif parts[i] == 1:
            out.append(StrictPartition(parts[:i]))
    return out


class PosetIdeal:
    """Upward-closed set of strict partitions, stored by a reduced antichain."""

    def __init__(self, generators):
        gens = set(generators)
        reduced = {
            g
            for g in gens
            if not any(h != g and contains(h, g) for h in gens)
        }
        self.generators = frozenset(reduced)

    def __eq__(self, other):
        return isinstance(other, PosetIdeal) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        gens = sorted(self.generators)
        return "PosetIdeal{%s}" % ", ".join(map(repr, gens))


def ideal_member(ideal: PosetIdeal, mu: StrictPartition) -> bool:
    """True iff some generator of the ideal is contained in mu."""
    return any(contains(g, mu) for g in ideal.generators)
