"""Relative ideals: value sets with a full tail that are stable under an ambient semigroup.

These encode fractional ideals of a numerical semigroup ring whose elements
all have non-negative valuation: maximal ideals, the truncated ideals R_{i,j},
and the Hom modules colon(I, J) = {v : v + J subset of I}.
"""
from __future__ import annotations

from typing import Iterable

from .errors import AmbientMismatch, IndexOutOfRange
from .semigroup import NumericalSemigroup

# extra window used when re-checking stability above the conductor
STABILITY_DELTA = 8


class RelativeIdeal:
    """Value set I with ``I + ambient subset of I`` and ``[conductor, inf) subset of I``."""

    __slots__ = ("ambient", "conductor", "_low", "_table")

    def __init__(self, ambient: NumericalSemigroup, members: Iterable[int], conductor: int):
        members = frozenset(v for v in members if v < conductor)
        if any(v < 0 for v in members):
            raise ValueError("relative ideals only hold non-negative values")
        # shrink to the minimal conductor
        while conductor > 0 and (conductor - 1) in members:
            conductor -= 1
            members = members - {conductor}
        self.ambient = ambient
        self.conductor = conductor
        self._low = members
        self._table = tuple(v in members for v in range(conductor))
        self._check_stable()

    @classmethod
    def from_predicate(cls, ambient, pred, bound: int) -> "RelativeIdeal":
        """Collect ``v < bound`` with ``pred(v)``; the caller guarantees a tail from ``bound``."""
        return cls(ambient, [v for v in range(bound) if pred(v)], bound)

    def _check_stable(self):
        A = self.ambient
        for v in self._low:
            for h in range(0, self.conductor - v):
                if h in A and (v + h) not in self:
                    raise ValueError(f"{v} + {h} leaves the ideal: not stable under {A.label()}")

    def __contains__(self, v: int) -> bool:
        if v >= self.conductor:
            return True
        return v >= 0 and self._table[v]

    def values_below(self, bound: int) -> list[int]:
        return [v for v in range(bound) if v in self]

    @property
    def minimum(self) -> int:
        return min(self._low) if self._low else self.conductor

    def over(self, ambient: NumericalSemigroup) -> "RelativeIdeal":
        """Restrict scalars to a smaller ambient semigroup."""
        if not ambient.issubset(self.ambient):
            raise AmbientMismatch(f"{ambient.label()} is not contained in {self.ambient.label()}")
        return RelativeIdeal(ambient, self._low, self.conductor)

    def shift(self, s: int) -> "RelativeIdeal":
        if self.minimum + s < 0:
            raise ValueError("shift would create negative values")
        return RelativeIdeal(self.ambient, (v + s for v in self._low), self.conductor + s)

    def issubset(self, other: "RelativeIdeal") -> bool:
        bound = max(self.conductor, other.conductor)
        return all(v in other for v in range(bound) if v in self)

    def __le__(self, other):
        return self.issubset(other)

    def __add__(self, other: "RelativeIdeal") -> "RelativeIdeal":
        """Sumset I + J (the product of the corresponding monomial ideals)."""
        bound = self.minimum + other.minimum + max(self.conductor, other.conductor) + 1
        lo_self = [v for v in range(bound) if v in self]
        lo_other = [v for v in range(bound) if v in other]
        vals = {x + y for x in lo_self for y in lo_other if x + y < bound}
        return RelativeIdeal(self.ambient, vals, bound)

    def __or__(self, other: "RelativeIdeal") -> "RelativeIdeal":
        bound = max(self.conductor, other.conductor)
        return RelativeIdeal(self.ambient, [v for v in range(bound) if v in self or v in other], bound)

    def generators(self) -> tuple[int, ...]:
        """Minimal set G with I = union of g + ambient (greedy ascending sieve)."""
        A = self.ambient
        bound = self.conductor + A.multiplicity + 1
        covered = [False] * bound
        gens = []
        for v in range(bound):
            if v not in self or covered[v]:
                continue
            gens.append(v)
            for w in range(v, bound):
                if (w - v) in A:
                    covered[w] = True
        return tuple(gens)

    def same_values(self, other) -> bool:
        if isinstance(other, NumericalSemigroup):
            other = as_ideal(other)
        return self.conductor == other.conductor and self._low == other._low

    def __eq__(self, other):
        if isinstance(other, NumericalSemigroup):
            other = as_ideal(other)
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return self.conductor == other.conductor and self._low == other._low

    def __hash__(self):
        return hash((self.conductor, self._low))

    def lead(self) -> tuple[int, ...]:
        """Members below the conductor followed by the conductor itself."""
        return tuple(sorted(self._low)) + (self.conductor,)

    def __repr__(self):
        return f"RelativeIdeal(lead{{{', '.join(map(str, self.lead()))}}})"

    def to_dict(self) -> dict:
        return {
            "ambient": self.ambient.to_dict(),
            "generators": list(self.generators()),
            "conductor": self.conductor,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RelativeIdeal":
        A = NumericalSemigroup.from_dict(data["ambient"])
        gens = data["generators"]
        c = data["conductor"]
        bound = c + 1
        vals = [v for v in range(bound) if any(v - g in A for g in gens)]
        I = cls(A, vals, bound)
        if I.conductor != c:
            raise ValueError(f"conductor mismatch: stored {c}, computed {I.conductor}")
        return I


def as_ideal(H: NumericalSemigroup, ambient: NumericalSemigroup | None = None) -> RelativeIdeal:
    """H viewed as an ideal over ``ambient`` (default: over itself)."""
    ambient = H if ambient is None else ambient
    if not ambient.issubset(H):
        raise AmbientMismatch(f"{ambient.label()} is not contained in {H.label()}")
    return RelativeIdeal(ambient, H.members_below(H.frobenius + 1), H.frobenius + 1)


def _coerce(X, ambient=None) -> RelativeIdeal:
    if isinstance(X, NumericalSemigroup):
        return as_ideal(X, ambient)
    return X


def colon(I, J, *, verify: bool = False) -> RelativeIdeal:
    """{v >= 0 : v + J subset of I}, the value set of Hom(J, I).

    Both arguments must share an ambient semigroup. Semigroups are accepted and
    coerced to ideals over the other argument's ambient when that is possible.
    """
    if isinstance(I, NumericalSemigroup) and isinstance(J, NumericalSemigroup):
        amb = I if I.issubset(J) else J if J.issubset(I) else None
        if amb is None:
            raise AmbientMismatch(f"{I.label()} and {J.label()} share no chain ambient")
        I, J = as_ideal(I, amb), as_ideal(J, amb)
    elif isinstance(I, NumericalSemigroup):
        I = as_ideal(I, J.ambient)
    elif isinstance(J, NumericalSemigroup):
        J = as_ideal(J, I.ambient)
    if I.ambient != J.ambient:
        raise AmbientMismatch(f"ambients differ: {I.ambient.label()} vs {J.ambient.label()}")
    cI, cJ = I.conductor, J.conductor
    j_low = [h for h in range(cJ) if h in J]
    vals = []
    for v in range(cI):
        # h >= cJ: v + h lands in I's tail once v + h >= cI
        ok = all((v + h) in I for h in j_low) and all(
            (v + h) in I for h in range(cJ, max(cJ, cI - v)))
        if ok:
            vals.append(v)
    result = RelativeIdeal(I.ambient, vals, cI)
    if verify:
        bound = result.conductor + STABILITY_DELTA
        for v in range(bound):
            inside = all((v + h) in I for h in range(max(cI, cJ) + bound) if h in J)
            if inside != (v in result):
                raise AssertionError(f"colon stability re-check failed at {v}")
    return result


def maximal_ideal(H: NumericalSemigroup) -> RelativeIdeal:
    return RelativeIdeal(H, H.members_below(H.frobenius + 2)[1:] if not H.is_full else [],
                         max(H.frobenius + 1, 1))


def lead_ideal(H: NumericalSemigroup, j: int) -> RelativeIdeal:
    """R_{H,j}: members of H that are >= beta_j (j = 0 gives H itself)."""
    gamma = H.gamma
    if not 0 <= j <= len(gamma):
        raise IndexOutOfRange(f"j={j} outside [0, {len(gamma)}]")
    if j == 0:
        return as_ideal(H)
    beta = gamma[j - 1]
    return RelativeIdeal(H, [v for v in range(beta, H.frobenius + 1) if v in H],
                         max(H.frobenius + 1, beta))


def shift(I: RelativeIdeal, s: int) -> RelativeIdeal:
    return I.shift(s)


def scaled_ideal_identity_check(H_j: NumericalSemigroup, H_j1: NumericalSemigroup, b: int) -> bool:
    """Whether R_{j,b} = t^{e(R_j)} R_{j+1,b-1} holds as value sets."""
    if not 1 <= b <= H_j.gap_count:
        raise IndexOutOfRange(f"b={b} outside [1, {H_j.gap_count}]")
    if b - 1 > H_j1.gap_count:
        raise IndexOutOfRange(f"b-1={b - 1} exceeds |Gamma| of the next ring")
    lhs = lead_ideal(H_j, b)
    rhs = lead_ideal(H_j1, b - 1).shift(H_j.multiplicity)
    return lhs.same_values(rhs)


def ideal_generators(I: RelativeIdeal) -> tuple[int, ...]:
    return I.generators()
