"""Radical chains H_1 <= H_2 <= ... <= H_l = N_0 with H_{i+1} inside End(m_i).

Two canonical builders are provided: the lazy chain adjoins the Frobenius
number at every step, the greedy chain jumps straight to End(m_i).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import FullSemigroup, LastRingNotFull, NotAChain
from .ideals import colon, maximal_ideal
from .semigroup import NumericalSemigroup

CONSTRUCTIONS = ("lazy", "greedy", "custom")


def endomorphism_ring(H: NumericalSemigroup) -> NumericalSemigroup:
    """The semigroup of End(m) = colon(m, m)."""
    m = maximal_ideal(H)
    E = colon(m, m)
    return NumericalSemigroup.from_members(E.values_below(E.conductor), E.conductor - 1)


@dataclass(frozen=True)
class RadicalChain:
    rings: tuple[NumericalSemigroup, ...]
    construction: str
    # (first index of ring i, number of occurrences), 1-based
    repetition: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.rings)

    @property
    def length(self) -> int:
        return len(self.rings)

    def __getitem__(self, i):
        return self.rings[i]

    def class_of(self, i: int) -> range:
        """1-based indices of the rings equal to ring ``i``."""
        a, n = self.repetition[i - 1]
        return range(a, a + n)

    def representatives(self) -> list[int]:
        return sorted({a for a, _ in self.repetition})

    def prepend(self, times: int) -> "RadicalChain":
        """The chain with ``times`` extra copies of the first ring in front."""
        return validate_chain((self.rings[0],) * times + self.rings)

    def to_dict(self) -> dict:
        return {"construction": self.construction, "rings": [H.to_dict() for H in self.rings]}

    @classmethod
    def from_dict(cls, data: dict) -> "RadicalChain":
        rings = [NumericalSemigroup.from_dict(r) for r in data["rings"]]
        return validate_chain(rings, construction=data.get("construction", "custom"))


def _repetition(rings) -> tuple[tuple[int, int], ...]:
    out = []
    for i, H in enumerate(rings):
        first = next(j for j in range(i + 1) if rings[j] == H)
        out.append((first + 1, sum(1 for R in rings if R == H)))
    return tuple(out)


def validate_chain(rings: Sequence[NumericalSemigroup], construction: str = "custom") -> RadicalChain:
    """Check the radical-chain conditions and attach repetition metadata.

    Repeated rings are allowed everywhere except for the final N_0. Violations
    raise NotAChain carrying the 1-based index ``i`` of the failing step
    ``H_i -> H_{i+1}``.
    """
    rings = tuple(rings)
    if not rings:
        raise ValueError("a chain needs at least one ring")
    if construction not in CONSTRUCTIONS:
        raise ValueError(f"unknown construction tag {construction!r}")
    if not rings[-1].is_full:
        raise LastRingNotFull(f"last ring {rings[-1].label()} is not N0")
    if len(rings) >= 2 and rings[-2].is_full:
        raise NotAChain(len(rings) - 1, "N0 may only occur once, as the last ring")
    for i in range(len(rings) - 1):
        H, K = rings[i], rings[i + 1]
        if not H.issubset(K):
            raise NotAChain(i + 1, f"{H.label()} is not contained in {K.label()}")
        if not K.issubset(endomorphism_ring(H)):
            raise NotAChain(i + 1, f"{K.label()} is not inside End(m) of {H.label()}")
        if construction in ("lazy", "greedy") and H == K:
            raise NotAChain(i + 1, f"{construction} chains must be strict")
    return RadicalChain(rings, construction, _repetition(rings))


def _build(H: NumericalSemigroup, step, construction: str) -> RadicalChain:
    if H.is_full:
        raise FullSemigroup("the starting ring must differ from N0")
    rings = [H]
    cap = H.frobenius + 2
    while not rings[-1].is_full:
        if len(rings) > cap:
            raise RuntimeError(f"{construction} chain did not terminate within {cap} steps")
        nxt = step(rings[-1])
        if nxt == rings[-1]:
            raise RuntimeError(f"{construction} step stalled at {nxt.label()}")
        rings.append(nxt)
    return validate_chain(rings, construction)


def lazy_chain(H: NumericalSemigroup) -> RadicalChain:
    return _build(H, lambda R: R.adjoin(R.frobenius), "lazy")


def greedy_chain(H: NumericalSemigroup) -> RadicalChain:
    return _build(H, endomorphism_ring, "greedy")
