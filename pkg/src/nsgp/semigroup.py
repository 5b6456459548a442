"""Numerical semigroups: construction, membership, invariants, and adjoining elements.

A numerical semigroup H is stored through its Frobenius number F and a dense
membership table on ``[0, F+1]``; everything above F is a member.
"""
from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Iterable

from .errors import BadFamilyParameters, EmptyGenerators, NotCoprime


class NumericalSemigroup:
    """Immutable numerical semigroup.

    Equality and hashing use the value set, so two semigroups built from
    different generating sets compare equal when they have the same members.
    """

    __slots__ = ("_table", "frobenius", "_min_gens")

    def __init__(self, table: tuple[bool, ...], frobenius: int):
        # table covers [0, frobenius + 1]; validated by the constructors
        self._table = table
        self.frobenius = frobenius
        self._min_gens = None

    # construction ----------------------------------------------------------

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] < 1:
            raise ValueError(f"generators must be positive, got {gens[0]}")
        if reduce(gcd, gens) != 1:
            raise NotCoprime(f"gcd{tuple(gens)} = {reduce(gcd, gens)} != 1")
        smallest = gens[0]
        reach = [True]
        run = 1
        n = 0
        # a run of `smallest` consecutive members means every later n is a member
        while run < smallest:
            n += 1
            hit = any(g <= n and reach[n - g] for g in gens)
            reach.append(hit)
            run = run + 1 if hit else 0
        frob = max((v for v, hit in enumerate(reach) if not hit), default=-1)
        return cls(tuple(reach[: frob + 2]), frob)

    @classmethod
    def from_members(cls, members: Iterable[int], frobenius: int) -> "NumericalSemigroup":
        """Build from the members below ``frobenius`` (all larger n are members).

        Raises ValueError if the resulting set is not additively closed.
        """
        members = set(members)
        table = [v == 0 or v in members for v in range(frobenius + 2)]
        if frobenius >= 0:
            table[frobenius] = False
            table[frobenius + 1] = True
        H = cls(tuple(table), frobenius)
        H._check_closed()
        return H

    @classmethod
    def from_lead(cls, lead: Iterable[int]) -> "NumericalSemigroup":
        """Build ``lead{0, b_1, ..., b_r}``: the listed values plus everything >= b_r."""
        lead = sorted(set(lead) | {0})
        top = lead[-1]
        return cls.from_members(lead, top - 1 if top > 0 else -1)

    @classmethod
    def naturals(cls) -> "NumericalSemigroup":
        return cls((True,), -1)

    def _check_closed(self):
        F = self.frobenius
        members = [v for v in range(1, F + 2) if self._table[v]]
        for i, x in enumerate(members):
            for y in members[i:]:
                if x + y > F:
                    break
                if not self._table[x + y]:
                    raise ValueError(f"{x} + {y} = {x + y} is not a member: set is not closed")

    # invariants -------------------------------------------------------------

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        return n > self.frobenius or self._table[n]

    def contains(self, n: int) -> bool:
        return n in self

    @property
    def is_full(self) -> bool:
        return self.frobenius == -1

    @property
    def multiplicity(self) -> int:
        return next(v for v in range(1, self.frobenius + 3) if v in self)

    @property
    def gamma(self) -> tuple[int, ...]:
        """Nonzero members that are at most F+1, ascending."""
        return tuple(v for v in range(1, self.frobenius + 2) if self._table[v])

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(v for v in range(0, self.frobenius + 1) if not self._table[v])

    @property
    def gap_count(self) -> int:
        """|Gamma(H)|, the count that drops by one per greedy step."""
        return len(self.gamma)

    def lead_set(self) -> tuple[int, ...]:
        return (0,) + self.gamma

    def members_below(self, bound: int) -> list[int]:
        return [v for v in range(bound) if v in self]

    @property
    def min_generators(self) -> tuple[int, ...]:
        if self._min_gens is None:
            if self.is_full:
                self._min_gens = (1,)
            else:
                limit = self.frobenius + self.multiplicity + 1
                # sums[v]: v is a sum of kept generators (all of which are < v)
                sums = [False] * limit
                sums[0] = True
                kept = []
                for v in range(1, limit):
                    if v not in self:
                        continue
                    if not any(sums[v - g] for g in kept):
                        kept.append(v)
                    sums[v] = True
                self._min_gens = tuple(kept)
        return self._min_gens

    def adjoin(self, b: int) -> "NumericalSemigroup":
        """H[[b]] = <min generators of H, b>."""
        if b < 1:
            raise ValueError(f"adjoined element must be positive, got {b}")
        if b in self:
            return self
        return NumericalSemigroup.from_generators(self.min_generators + (b,))

    def issubset(self, other: "NumericalSemigroup") -> bool:
        return all(v in other for v in range(self.frobenius + 2) if v in self)

    def __le__(self, other):
        return self.issubset(other)

    # dunder / serialization ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.frobenius == other.frobenius and self._table == other._table

    def __hash__(self):
        return hash((self.frobenius, self._table))

    def __repr__(self):
        if self.is_full:
            return "NumericalSemigroup(N0)"
        return f"NumericalSemigroup<{', '.join(map(str, self.min_generators))}>"

    def label(self) -> str:
        return "N0" if self.is_full else "<" + ",".join(map(str, self.min_generators)) + ">"

    def to_dict(self) -> dict:
        return {
            "generators": list(self.min_generators),
            "frobenius": self.frobenius,
            "multiplicity": self.multiplicity,
            "gamma": list(self.gamma),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "NumericalSemigroup":
        H = cls.from_generators(data["generators"])
        for key in ("frobenius", "multiplicity"):
            if key in data and data[key] != getattr(H, key):
                raise ValueError(f"{key} mismatch: stored {data[key]}, computed {getattr(H, key)}")
        if "gamma" in data and tuple(data["gamma"]) != H.gamma:
            raise ValueError("gamma mismatch")
        return H


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(gens)


def contains(H: NumericalSemigroup, n: int) -> bool:
    return n in H


def adjoin(H: NumericalSemigroup, b: int) -> NumericalSemigroup:
    return H.adjoin(b)


def lead_set(H: NumericalSemigroup) -> tuple[int, ...]:
    return H.lead_set()


def check_family_parameters(n: int, a: int, i: int) -> None:
    if n % 2 or n < 6:
        raise BadFamilyParameters(f"n must be even and >= 6, got {n}")
    if not 3 * n // 2 + 1 <= a <= 2 * n - 1:
        raise BadFamilyParameters(f"a must lie in [{3 * n // 2 + 1}, {2 * n - 1}], got {a}")
    if i < 1:
        raise BadFamilyParameters(f"i must be >= 1, got {i}")


def family_ring(n: int, a: int, i: int) -> NumericalSemigroup:
    """The starting ring A_n^a(i) of the two-parameter family.

    ``A(1) = lead{0, n, 3n/2}`` and for ``i >= 2``
    ``A(i) = lead{0, jn/2 (j = 2..i+1), a + 1 + (i-2)n/2}``.
    """
    check_family_parameters(n, a, i)
    half = n // 2
    if i == 1:
        return NumericalSemigroup.from_lead([0, n, 3 * half])
    lead = [0] + [j * half for j in range(2, i + 2)] + [a + 1 + (i - 2) * half]
    return NumericalSemigroup.from_lead(lead)
