"""Frames of graded projectives, homogeneous maps between them, and row modules.

A frame is a direct sum of indecomposable projectives ``P_b`` each placed in
some degree ``d``: its generator ``e_b`` sits in t-degree ``d``. A map between
frames is homogeneous, so entry (r, s) is ``c * t^(d_s - d'_r)`` for a scalar
``c`` and the whole map is a scalar matrix plus the two shift vectors.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotHomogeneous, ShapeMismatch
from .field import QQ


@dataclass(frozen=True)
class Frame:
    indices: tuple[int, ...]
    shifts: tuple[int, ...]

    def __post_init__(self):
        if len(self.indices) != len(self.shifts):
            raise ShapeMismatch("indices and shifts differ in length")

    @classmethod
    def of(cls, indices, shifts=None) -> "Frame":
        indices = tuple(indices)
        return cls(indices, tuple(shifts) if shifts is not None else (0,) * len(indices))

    def __len__(self):
        return len(self.indices)

    def __add__(self, other: "Frame") -> "Frame":
        return Frame(self.indices + other.indices, self.shifts + other.shifts)

    def __iter__(self):
        return iter(zip(self.indices, self.shifts))

    @property
    def max_shift(self) -> int:
        return max(self.shifts, default=0)

    def label(self) -> str:
        return " + ".join(f"P{b}" for b in self.indices) or "0"

    def to_dict(self) -> dict:
        return {"indices": list(self.indices), "shifts": list(self.shifts)}

    @classmethod
    def from_dict(cls, data) -> "Frame":
        return cls.of(data["indices"], data.get("shifts"))


def _terms(F, c, deg):
    num, den = F.to_pair(c)
    return [{"deg": deg, "num": num, "den": den}]


class ModuleMap:
    """Homogeneous map ``source -> target`` given by a scalar matrix.

    ``coeffs[r][s]`` is the coefficient of the entry linking source summand
    ``s`` to target summand ``r``; its degree is fixed by the frame shifts.
    """

    def __init__(self, source: Frame, target: Frame, coeffs, field=QQ):
        self.source = source
        self.target = target
        self.field = field
        self.coeffs = tuple(tuple(field(c) for c in row) for row in coeffs)
        if len(self.coeffs) != len(target) or any(len(r) != len(source) for r in self.coeffs):
            raise ShapeMismatch(
                f"matrix shape does not match frames {len(target)}x{len(source)}")

    def degree(self, r: int, s: int) -> int:
        return self.source.shifts[s] - self.target.shifts[r]

    def nonzero(self):
        z = self.field.zero
        for r, row in enumerate(self.coeffs):
            for s, c in enumerate(row):
                if c != z:
                    yield r, s, c

    def column(self, s: int) -> tuple:
        return tuple(row[s] for row in self.coeffs)

    def is_zero(self) -> bool:
        return next(self.nonzero(), None) is None

    def is_well_defined(self, E) -> bool:
        """Every entry t^alpha lies in the matching entry of E."""
        return all(E.in_entry(self.target.indices[r], self.source.indices[s], self.degree(r, s))
                   for r, s, _ in self.nonzero())

    def entries_in_radical(self, E) -> bool:
        return all(E.in_radical(self.target.indices[r], self.source.indices[s], self.degree(r, s))
                   for r, s, _ in self.nonzero())

    def is_signed_monomial(self) -> bool:
        F = self.field
        return all(c in (F.one, F.neg(F.one)) for _, _, c in self.nonzero())

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """``self o other``; ``other.target`` must be ``self.source``."""
        if other.target != self.source:
            raise ShapeMismatch("frames do not compose")
        F = self.field
        rows = []
        for r in range(len(self.target)):
            row = []
            for u in range(len(other.source)):
                acc = F.zero
                for s in range(len(self.source)):
                    acc = F.add(acc, F.mul(self.coeffs[r][s], other.coeffs[s][u]))
                row.append(acc)
            rows.append(row)
        return ModuleMap(other.source, self.target, rows, F)

    def __eq__(self, other):
        if not isinstance(other, ModuleMap):
            return NotImplemented
        return (self.source, self.target, self.coeffs) == (other.source, other.target, other.coeffs)

    def __repr__(self):
        return f"ModuleMap({self.source.label()} -> {self.target.label()}, {self.pretty()})"

    def pretty(self) -> str:
        """Star-form matrix with monomial entries, e.g. ``(1 t^3)``."""
        F = self.field

        def cell(r, s):
            c = self.coeffs[r][s]
            if c == F.zero:
                return "0"
            num, den = F.to_pair(c)
            d = self.degree(r, s)
            mono = "1" if d == 0 else ("t" if d == 1 else f"t^{d}")
            if (num, den) == (1, 1):
                return mono
            if (num, den) == (-1, 1):
                return "-" + mono
            coef = str(num) if den == 1 else f"{num}/{den}"
            return coef if d == 0 else f"{coef}{mono}"

        return "; ".join("(" + " ".join(cell(r, s) for s in range(len(self.source))) + ")"
                         for r in range(len(self.target)))

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "entries": [{"row": r + 1, "col": s + 1, "terms": _terms(self.field, c, self.degree(r, s))}
                        for r, s, c in self.nonzero()],
        }

    @classmethod
    def from_entries(cls, source_indices, target: Frame, entries, field=QQ, source_shifts=None):
        """Build a map from JSON-style entries, inferring source shifts when absent.

        Each entry must be a single monomial; the degree of every nonzero entry
        in column s has to agree with one shift ``d_s``. Otherwise the map is
        not homogeneous and NotHomogeneous is raised.
        """
        source_indices = tuple(source_indices)
        m, k = len(target), len(source_indices)
        coeffs = [[field.zero] * k for _ in range(m)]
        shifts = list(source_shifts) if source_shifts is not None else [None] * k
        for e in entries:
            r, s = e["row"] - 1, e["col"] - 1
            if not (0 <= r < m and 0 <= s < k):
                raise ShapeMismatch(f"entry ({e['row']}, {e['col']}) outside a {m}x{k} matrix")
            terms = [t for t in e["terms"] if t.get("num", 1) != 0]
            if not terms:
                continue
            if len(terms) != 1:
                raise NotHomogeneous(f"entry ({r + 1}, {s + 1}) has {len(terms)} terms")
            t = terms[0]
            d = target.shifts[r] + t["deg"]
            if shifts[s] is None:
                shifts[s] = d
            elif shifts[s] != d:
                raise NotHomogeneous(f"column {s + 1} needs shifts {shifts[s]} and {d}")
            coeffs[r][s] = field.add(coeffs[r][s], field(t.get("num", 1), t.get("den", 1)))
        shifts = [0 if d is None else d for d in shifts]
        return cls(Frame(source_indices, tuple(shifts)), target, coeffs, field)

    @classmethod
    def from_dict(cls, data, field=QQ) -> "ModuleMap":
        src = Frame.from_dict(data["source"])
        tgt = Frame.from_dict(data["target"])
        f = cls.from_entries(src.indices, tgt, data["entries"], field, source_shifts=src.shifts)
        if f.source != src:
            raise NotHomogeneous("entry degrees disagree with the stored source shifts")
        return f


# row modules -----------------------------------------------------------------


@dataclass(frozen=True)
class Row:
    """One row module ``U / L`` living in row ``label`` of the order.

    ``upper[c]`` and ``lower[c]`` are value sets (None for the zero entry);
    a ``lower`` of None means nothing is divided out.
    """

    label: int
    upper: tuple
    lower: tuple | None = None

    def same(self, other: "Row") -> bool:
        return (self.label == other.label and _same_tuple(self.upper, other.upper)
                and _same_tuple(self.lower, other.lower))


def _same_entry(x, y):
    if x is None or y is None:
        return x is None and y is None
    return x.same_values(y)


def _same_tuple(xs, ys):
    if xs is None or ys is None:
        return xs is None and ys is None
    return len(xs) == len(ys) and all(_same_entry(x, y) for x, y in zip(xs, ys))


def _union(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return x | y


class RowModule:
    """Direct sum of row modules; the matrix picture used for the block functor."""

    def __init__(self, rows):
        self.rows = tuple(rows)

    @classmethod
    def projective(cls, E, i: int, shift: int = 0) -> "RowModule":
        return cls([Row(i, tuple(x.shift(shift) for x in E.entries[i - 1]))])

    @classmethod
    def simple(cls, E, i: int) -> "RowModule":
        return cls([Row(i, E.entries[i - 1], E.radical[i - 1])])

    @classmethod
    def from_frame(cls, E, frame: Frame) -> "RowModule":
        rows = []
        for b, d in frame:
            rows.extend(cls.projective(E, b, d).rows)
        return cls(rows)

    def __add__(self, other: "RowModule") -> "RowModule":
        return RowModule(self.rows + other.rows)

    def __len__(self):
        return len(self.rows)

    def radical(self, E) -> "RowModule":
        """X J(E), computed entrywise as unions of sumsets."""
        out = []
        for row in self.rows:
            cols = []
            for c in range(len(row.upper)):
                acc = row.lower[c] if row.lower is not None else None
                for b, U in enumerate(row.upper):
                    if U is not None:
                        acc = _union(acc, U + E.radical[b][c])
                cols.append(acc)
            out.append(Row(row.label, tuple(cols), row.lower))
        return RowModule(out)

    def same(self, other: "RowModule") -> bool:
        return len(self) == len(other) and all(x.same(y) for x, y in zip(self.rows, other.rows))

    def labels(self) -> tuple[int, ...]:
        return tuple(r.label for r in self.rows)

    def support(self) -> list[tuple[int, ...]]:
        """For quotient rows: the columns where upper and lower differ."""
        out = []
        for row in self.rows:
            if row.lower is None:
                out.append(tuple(range(1, len(row.upper) + 1)))
            else:
                out.append(tuple(c + 1 for c, (u, w) in enumerate(zip(row.upper, row.lower))
                                 if not _same_entry(u, w)))
        return out
