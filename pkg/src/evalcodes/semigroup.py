"""Numerical semigroups: additively closed subsets of the naturals
containing 0, described by a finite generating set with gcd 1.

Membership is decided by dynamic-programming reachability over a bit
table.  The table initially extends to twice the two-generator conductor
estimate of the smallest coprime generator pair (squared-generator
fallback when no pair is coprime) and then grows until the top min(gens)
consecutive entries are all reachable, which certifies that every larger
integer is reachable too; the conductor read off the table is therefore
exact, never an estimate.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from itertools import combinations
from typing import Iterable

from .errors import (
    EmptyGeneratorsError,
    InfiniteGapsError,
    NotAnElementError,
    NotCoprimeError,
)


def frobenius_two_gen(a: int, b: int) -> tuple[int, int, int]:
    """(Frobenius number, conductor, genus) of the semigroup <a, b>.

    Closed forms for two coprime generators: ab - a - b, (a-1)(b-1),
    and (a-1)(b-1)/2.
    """
    if a < 2 or b < 2 or math.gcd(a, b) != 1:
        raise NotCoprimeError(f"need coprime generators >= 2, got ({a}, {b})")
    return a * b - a - b, (a - 1) * (b - 1), (a - 1) * (b - 1) // 2


class NumericalSemigroup:
    """Finitely generated numerical semigroup with finite gap set."""

    __slots__ = ("generators", "gaps", "conductor", "genus", "_member", "_small")

    def __init__(self, generators: Iterable[int]):
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise EmptyGeneratorsError("at least one generator required")
        if any(g < 1 for g in gens):
            raise EmptyGeneratorsError(f"generators must be positive, got {gens}")
        if math.gcd(*gens) != 1:
            raise InfiniteGapsError(f"gcd of {gens} exceeds 1: infinitely many gaps")
        self.generators = tuple(gens)
        self._member = self._reach_table(gens)
        gaps = [i for i, m in enumerate(self._member) if not m]
        self.gaps = tuple(gaps)
        self.conductor = gaps[-1] + 1 if gaps else 0
        self.genus = len(gaps)
        # elements strictly below the conductor; everything >= conductor is in
        self._small = tuple(i for i in range(self.conductor) if self._member[i])

    @staticmethod
    def _reach_table(gens: list[int]) -> list[bool]:
        a1 = gens[0]
        est = None
        for x, y in combinations(gens, 2):
            if math.gcd(x, y) == 1:
                est = (x - 1) * (y - 1)
                break
        bound = max(2 * est if est is not None else 2 * gens[-1] ** 2, 2 * gens[-1], 16)
        while True:
            reach = [False] * (bound + 1)
            reach[0] = True
            for i in range(1, bound + 1):
                for g in gens:
                    if g <= i and reach[i - g]:
                        reach[i] = True
                        break
            # a full window of a1 consecutive members certifies the tail
            if a1 == 1 or all(reach[bound - a1 + 1 : bound + 1]):
                return reach
            bound *= 2

    # -- membership and enumeration

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return x < len(self._member) and self._member[x]

    def nth(self, l: int) -> int:
        """l-th smallest element, 1-indexed: nth(1) = 0."""
        if l < 1:
            raise IndexError(f"element index must be >= 1, got {l}")
        small = len(self._small)
        if l <= small:
            return self._small[l - 1]
        return self.conductor + (l - small - 1)  # equals l + genus - 1

    def index_of(self, value: int) -> int:
        """Position l with nth(l) == value."""
        if value not in self:
            raise NotAnElementError(f"{value} is not in {self!r}")
        if value >= self.conductor:
            return value - self.genus + 1
        return bisect_right(self._small, value)

    def elements_upto(self, bound: int) -> list[int]:
        out = [e for e in self._small if e <= bound]
        out.extend(range(self.conductor, bound + 1))
        return out

    def gap_count_below(self, l: int) -> int:
        """Number of gaps smaller than the l-th element: nth(l) - l + 1."""
        rho = self.nth(l)
        return rho - l + 1

    def is_symmetric(self) -> bool:
        """Conductor equals twice the genus."""
        return self.conductor == 2 * self.genus

    def shifted_diff_count(self, s: int) -> int:
        """Cardinality of the difference set Lambda \\ (s + Lambda).

        Computed by enumeration below s + conductor, beyond which the two
        sets agree; the count always equals s.
        """
        if s not in self:
            raise NotAnElementError(f"{s} is not in {self!r}")
        horizon = s + self.conductor
        members = self.elements_upto(horizon)
        return sum(1 for e in members if not (e >= s and (e - s) in self))

    def __repr__(self) -> str:
        return "<" + ",".join(str(g) for g in self.generators) + ">"


def sg_new(generators: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup(generators)
