"""The endomorphism order E = End(H_1 + ... + H_l) of a radical chain.

E is stored as the l x l grid E[i][j] = colon(H_i, H_j) of value sets over
the starting ring, together with its Jacobson radical. Row i of E is the
indecomposable projective P_i; the simple S_i is P_i modulo row i of J(E).
Public indices are 1-based, matching the usual matrix notation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .chains import RadicalChain, validate_chain
from .errors import IndexOutOfRange
from .ideals import RelativeIdeal, as_ideal, colon, maximal_ideal
from .modules import Frame, ModuleMap, Row, RowModule


class _Cell:
    """Fast membership for one grid entry."""

    __slots__ = ("conductor", "table")

    def __init__(self, ideal: RelativeIdeal):
        self.conductor = ideal.conductor
        self.table = tuple(v in ideal for v in range(ideal.conductor))

    def __contains__(self, v):
        return v >= self.conductor or (v >= 0 and self.table[v])


@dataclass(frozen=True)
class ProjectiveDescriptor:
    index: int
    row: tuple[RelativeIdeal, ...]


@dataclass(frozen=True)
class SimpleDescriptor:
    index: int
    support: tuple[int, int]  # inclusive column interval, 1-based
    residue: str = "k"

    @property
    def columns(self) -> range:
        return range(self.support[0], self.support[1] + 1)


class EndomorphismOrder:
    def __init__(self, chain: RadicalChain, entries, radical):
        self.chain = chain
        self.entries = tuple(tuple(row) for row in entries)
        self.radical = tuple(tuple(row) for row in radical)
        self._E = tuple(tuple(_Cell(x) for x in row) for row in self.entries)
        self._J = tuple(tuple(_Cell(x) for x in row) for row in self.radical)
        # memo of frame presence patterns, filled by the homology engine
        self._present = {}

    @property
    def length(self) -> int:
        return len(self.chain)

    def __len__(self):
        return len(self.chain)

    # fast 1-based membership used by the homology engine
    def in_entry(self, i: int, j: int, v: int) -> bool:
        return v in self._E[i - 1][j - 1]

    def in_radical(self, i: int, j: int, v: int) -> bool:
        return v in self._J[i - 1][j - 1]

    @cached_property
    def max_conductor(self) -> int:
        return max(c.conductor for row in self._E for c in row)

    def class_of(self, i: int) -> range:
        return self.chain.class_of(i)

    def representative(self, i: int) -> int:
        """First index of the isomorphism class of P_i."""
        return self.chain.repetition[i - 1][0]

    def reported_index(self, i: int) -> int:
        """Largest index of the class of P_i; used to label cover summands."""
        return self.class_of(i)[-1]

    def representatives(self) -> list[int]:
        return self.chain.representatives()

    @cached_property
    def radical_left_generators(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each column c, pairs (c', beta) whose left E-multiples span column c of J(E).

        Right-multiplying a module by J(E) then only needs these finitely many
        monomials t^beta e_{c'c} instead of every element of the radical.
        """
        l = self.length
        bound = 2 * self.max_conductor + 2
        out = []
        for c in range(1, l + 1):
            kept: list[tuple[int, int]] = []
            for beta in range(bound):
                for cp in range(1, l + 1):
                    if not self.in_radical(cp, c, beta):
                        continue
                    if any(self.in_entry(cp, c2, beta - b2) for c2, b2 in kept):
                        continue
                    kept.append((cp, beta))
            out.append(tuple(kept))
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, EndomorphismOrder):
            return NotImplemented
        return self.entries == other.entries and self.radical == other.radical

    def __hash__(self):
        return hash(self.entries)

    # presentation ---------------------------------------------------------

    def symbol(self, ideal: RelativeIdeal) -> str:
        """R_a / m_a when the value set is a chain ring or its maximal ideal."""
        for a in self.representatives():
            H = self.chain.rings[a - 1]
            if ideal.same_values(as_ideal(H)):
                return f"R{a}"
        for a in self.representatives():
            if ideal.same_values(maximal_ideal(self.chain.rings[a - 1])):
                return f"m{a}"
        return "lead{" + ",".join(map(str, ideal.lead())) + "}"

    def symbol_grid(self, which: str = "entries") -> list[list[str]]:
        grid = self.entries if which == "entries" else self.radical
        return [[self.symbol(x) for x in row] for row in grid]

    def table(self, which: str = "entries") -> str:
        grid = self.symbol_grid(which)
        width = max(len(s) for row in grid for s in row)
        return "\n".join("  ".join(s.ljust(width) for s in row) for row in grid)

    def to_dict(self) -> dict:
        def cell(x):
            return {"lead": list(x.lead()), "conductor": x.conductor, "symbol": self.symbol(x)}

        return {
            "chain": self.chain.to_dict(),
            "rows": [r.label() for r in self.chain.rings],
            "entries": [[cell(x) for x in row] for row in self.entries],
            "radical": [[cell(x) for x in row] for row in self.radical],
        }


def _radical_grid(chain: RadicalChain, entries):
    """J(E): row i equals E except on the block of rings equal to H_i, where it is m_i."""
    l = len(chain)
    grid = []
    for i in range(1, l + 1):
        a, n_a = chain.repetition[i - 1]
        m = maximal_ideal(chain.rings[i - 1]).over(chain.rings[0])
        row = []
        for j in range(1, l + 1):
            if j < a:
                row.append(as_ideal(chain.rings[i - 1], chain.rings[0]))
            elif j < a + n_a:
                row.append(m)
            else:
                row.append(entries[i - 1][j - 1])
        grid.append(row)
    return grid


def build_order(chain: RadicalChain) -> EndomorphismOrder:
    base = chain.rings[0]
    rings = [as_ideal(H, base) for H in chain.rings]
    entries = [[colon(rings[i], rings[j]) for j in range(len(rings))] for i in range(len(rings))]
    return EndomorphismOrder(chain, entries, _radical_grid(chain, entries))


def projective(E: EndomorphismOrder, i: int) -> ProjectiveDescriptor:
    if not 1 <= i <= E.length:
        raise IndexOutOfRange(f"projective index {i} outside [1, {E.length}]")
    return ProjectiveDescriptor(i, E.entries[i - 1])


def simple(E: EndomorphismOrder, i: int) -> SimpleDescriptor:
    if not 1 <= i <= E.length:
        raise IndexOutOfRange(f"simple index {i} outside [1, {E.length}]")
    a, n_a = E.chain.repetition[i - 1]
    return SimpleDescriptor(i, (a, a + n_a - 1))


def ceil_order(E: EndomorphismOrder, a: int) -> EndomorphismOrder:
    """E with ``a`` extra copies of the starting ring prepended to its chain."""
    if a < 0:
        raise ValueError("a must be non-negative")
    if a == 0:
        return E
    return build_order(E.chain.prepend(a))


def ceil_order_blocks(E: EndomorphismOrder, a: int) -> EndomorphismOrder:
    """The same order assembled by duplicating the first row and column of both grids."""
    def dup(grid):
        rows = [list(grid[0][:1]) * a + list(grid[0]) for _ in range(a)]
        rows += [[r[0]] * a + list(r) for r in grid]
        return rows

    chain = validate_chain((E.chain.rings[0],) * a + E.chain.rings)
    return EndomorphismOrder(chain, dup(E.entries), dup(E.radical))


# the block functor on frames, maps and row modules ---------------------------


def _ceil_labels(b: int, a: int) -> tuple[int, ...]:
    return tuple(range(1, a + 2)) if b == 1 else (b + a,)


def ceil_frame(W: Frame, a: int) -> Frame:
    """P_1 becomes Q_1 + ... + Q_{a+1}; P_b becomes Q_{b+a} for b > 1."""
    idx, sh = [], []
    for b, d in W:
        for q in _ceil_labels(b, a):
            idx.append(q)
            sh.append(d)
    return Frame(tuple(idx), tuple(sh))


def is_scalar_map(f: ModuleMap) -> bool:
    """Whether f is multiplication by a single c t^alpha on one frame."""
    if f.source.indices != f.target.indices or not f.source.indices:
        return False
    diffs = {s - t for s, t in zip(f.source.shifts, f.target.shifts)}
    if len(diffs) != 1:
        return False
    c = f.coeffs[0][0]
    return all(f.coeffs[r][s] == (c if r == s else f.field.zero)
               for r in range(len(f.target)) for s in range(len(f.source)))


def ceil_map(f: ModuleMap, a: int) -> ModuleMap:
    """Apply the block functor to a map.

    Scalar maps c t^alpha stay c t^alpha. Any other map has every row and
    column belonging to a P_1 summand repeated a+1 times, entries included.
    """
    if a < 0:
        raise ValueError("a must be non-negative")
    src, tgt = ceil_frame(f.source, a), ceil_frame(f.target, a)
    if is_scalar_map(f):
        c = f.coeffs[0][0]
        coeffs = [[c if r == s else f.field.zero for s in range(len(src))] for r in range(len(tgt))]
        return ModuleMap(src, tgt, coeffs, f.field)
    rows = [r for r, b in enumerate(f.target.indices) for _ in _ceil_labels(b, a)]
    cols = [s for s, b in enumerate(f.source.indices) for _ in _ceil_labels(b, a)]
    return ModuleMap(src, tgt, [[f.coeffs[r][s] for s in cols] for r in rows], f.field)


def ceil_module(X: RowModule, a: int) -> RowModule:
    """Repeat the first column a extra times in every row, and every label-1 row a extra times."""
    if a < 0:
        raise ValueError("a must be non-negative")

    def widen(xs):
        return None if xs is None else (xs[0],) * a + tuple(xs)

    rows = []
    for row in X.rows:
        for q in _ceil_labels(row.label, a):
            rows.append(Row(q, widen(row.upper), widen(row.lower)))
    return RowModule(rows)
