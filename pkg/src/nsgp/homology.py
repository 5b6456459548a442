"""Minimal projective resolutions over an endomorphism order.

Every module here is a graded submodule of a frame. Its piece at column ``c``
and t-degree ``D`` is a subspace of k^m (m = number of summands): coordinate
``s`` is available exactly when ``D - d_s`` lies in ``E[b_s][c]``. Maps are
homogeneous, so kernels and images are computed piece by piece with exact
Gaussian elimination. Only degrees below a truncation bound N are stored;
generator degrees are re-checked at N + delta.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from . import linalg
from .errors import (
    IndexOutOfRange, NoValidIndex, ResolutionTooLong, ShapeMismatch,
    TruncationOverflow, UnstableTruncation,
)
from .field import QQ, field_from_env
from .modules import Frame, ModuleMap
from .order import EndomorphismOrder

DEFAULT_DELTA = 8


@dataclass(frozen=True)
class TruncationContext:
    """Truncation bound (None = sized automatically per step), re-check window and field.

    ``pad`` adds extra degrees on top of the automatic bound; comparing runs
    with pad 0 and pad 8 is the N versus N+8 stability test.
    """

    bound: int | None = None
    delta: int = DEFAULT_DELTA
    field: object = QQ
    pad: int = 0

    @classmethod
    def from_env(cls, **overrides) -> "TruncationContext":
        raw = os.environ.get("NSGP_TRUNCATION")
        kw = {"bound": int(raw) if raw else None, "field": field_from_env()}
        kw.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kw)

    def with_bound(self, bound) -> "TruncationContext":
        return TruncationContext(bound, self.delta, self.field, self.pad)


def required_bound(E: EndomorphismOrder, *frames: Frame) -> int:
    """Smallest N for which generator degrees of kernels on these frames are certain."""
    top = max((f.max_shift for f in frames), default=0)
    return top + 2 * E.max_conductor + 2


def auto_bound(E: EndomorphismOrder, *frames: Frame) -> int:
    top = max((f.max_shift for f in frames), default=0)
    return 2 * E.max_conductor + 2 * top + E.length + 8


def _bound(E, ctx: TruncationContext, *frames) -> int:
    need = required_bound(E, *frames)
    if ctx.bound is None:
        return max(need, auto_bound(E, *frames)) + ctx.pad
    if ctx.bound < need:
        raise TruncationOverflow(f"truncation {ctx.bound} is below the required {need}")
    return ctx.bound


# graded pieces ---------------------------------------------------------------


def present(E: EndomorphismOrder, frame: Frame, c: int, D: int) -> tuple[int, ...]:
    """Coordinates of ``frame`` that carry a nonzero element at (column c, degree D)."""
    key = (frame, c, D)
    hit = E._present.get(key)
    if hit is None:
        hit = E._present[key] = tuple(s for s, (b, d) in enumerate(frame) if E.in_entry(b, c, D - d))
    return hit


class SubModule:
    """Graded submodule of a frame, stored as echelon bases per (column, degree < bound)."""

    def __init__(self, E, frame: Frame, bound: int, piece_fn, field=QQ):
        self.E = E
        self.frame = frame
        self.bound = bound
        self.field = field
        self._fn = piece_fn
        self._cache = {}

    def piece(self, c: int, D: int):
        if D < 0:
            return ()
        if D >= self.bound:
            raise TruncationOverflow(f"degree {D} is outside the truncation [0, {self.bound})")
        key = (c, D)
        if key not in self._cache:
            self._cache[key] = tuple(self._fn(c, D))
        return self._cache[key]

    def dimension(self, c: int, D: int) -> int:
        return len(self.piece(c, D))

    def is_zero(self) -> bool:
        return all(not self.piece(c, D) for c in range(1, self.E.length + 1) for D in range(self.bound))

    def same_as(self, other: "SubModule") -> list[tuple[int, int]]:
        """Positions (column, degree) where the two submodules differ."""
        bound = min(self.bound, other.bound)
        seen = {}
        out = []
        for c in range(1, self.E.length + 1):
            for D in range(bound):
                a, b = self.piece(c, D), other.piece(c, D)
                key = (id(a), id(b))
                if key not in seen:
                    seen[key] = a == b
                if not seen[key]:
                    out.append((c, D))
        return out

    @property
    def generators(self):
        return minimal_generators(self, self.E)


def full_module(E, frame: Frame, bound: int, field=QQ) -> SubModule:
    m = len(frame)

    def fn(c, D):
        return [(s, tuple(field.one if k == s else field.zero for k in range(m)))
                for s in present(E, frame, c, D)]

    return SubModule(E, frame, bound, fn, field)


def radical_of_frame(E, frame: Frame, bound: int, field=QQ) -> SubModule:
    """J(W) for a frame W: coordinate s survives where ``D - d_s`` lies in the radical."""
    m = len(frame)

    def fn(c, D):
        return [(s, tuple(field.one if k == s else field.zero for k in range(m)))
                for s, (b, d) in enumerate(frame) if E.in_radical(b, c, D - d)]

    return SubModule(E, frame, bound, fn, field)


def image(f: ModuleMap, E, bound: int) -> SubModule:
    F = f.field
    cols = [f.column(s) for s in range(len(f.source))]

    @lru_cache(maxsize=None)
    def by_pattern(pattern):
        return tuple(linalg.echelon([cols[s] for s in pattern], F))

    return SubModule(E, f.target, bound, lambda c, D: by_pattern(present(E, f.source, c, D)), F)


def kernel_pieces(f: ModuleMap, E, bound: int) -> SubModule:
    F = f.field
    m = len(f.source)

    @lru_cache(maxsize=None)
    def by_pattern(pattern):
        if not pattern:
            return ()
        rows = [tuple(f.coeffs[r][s] for s in pattern) for r in range(len(f.target))]
        out = []
        for v in linalg.nullspace(rows, len(pattern), F):
            full = [F.zero] * m
            for s, x in zip(pattern, v):
                full[s] = x
            out.append(tuple(full))
        return tuple(linalg.echelon(out, F))

    return SubModule(E, f.source, bound, lambda c, D: by_pattern(present(E, f.source, c, D)), F)


def radical_multiply(X: SubModule, E: EndomorphismOrder) -> SubModule:
    """X J(E): column c collects X at (c', D - beta) over left generators t^beta of J's column c."""
    gens = E.radical_left_generators
    F = X.field
    sums = {}

    def fn(c, D):
        full = len(X.piece(c, D))
        parts = {}
        for cp, beta in gens[c - 1]:
            if beta > D:
                continue
            p = X.piece(cp, D - beta)
            if len(p) == full:
                return p
            if p:
                parts[id(p)] = p
        # pieces are shared between positions, so sums repeat often
        key = frozenset(parts)
        if key not in sums:
            basis = []
            for p in parts.values():
                for _, v in p:
                    linalg.insert(basis, v, F)
            sums[key] = tuple(basis)
        return sums[key]

    return SubModule(E, X.frame, X.bound, fn, F)


@dataclass(frozen=True)
class Generator:
    column: int  # class representative column where the generator lives
    degree: int
    vector: tuple


def minimal_generators(X: SubModule, E: EndomorphismOrder, lo: int = 0) -> list[Generator]:
    """A basis of X / X J(E) lifted to X, searched in degrees [lo, bound).

    Columns of isomorphic projectives coincide, so one column per class is
    enough; the generator is attached to the largest index of the class.
    """
    XJ = radical_multiply(X, E)
    F = X.field
    out = []
    for rep in E.representatives():
        c = E.reported_index(rep)
        for D in range(lo, X.bound):
            piece = X.piece(c, D)
            if not piece:
                continue
            sub = XJ.piece(c, D)
            if len(sub) == len(piece):
                continue
            for v in linalg.quotient_complement(list(sub), [v for _, v in piece], F):
                out.append(Generator(c, D, v))
    out.sort(key=lambda g: (g.column, g.degree))
    return out


def projective_cover(X: SubModule, E: EndomorphismOrder) -> tuple[Frame, ModuleMap]:
    gens = minimal_generators(X, E)
    F = X.field
    frame = Frame(tuple(g.column for g in gens), tuple(g.degree for g in gens))
    coeffs = [[g.vector[r] for g in gens] for r in range(len(X.frame))]
    f = ModuleMap(frame, X.frame, coeffs, F)
    if not f.is_well_defined(E):
        raise NoValidIndex("a cover column has an entry outside E; representation bug")
    return frame, f


def kernel(f: ModuleMap, E: EndomorphismOrder, ctx: TruncationContext | None = None) -> SubModule:
    """ker f with its generator degrees checked again on a window of ``delta`` more degrees."""
    ctx = ctx or TruncationContext(field=f.field)
    N = _bound(E, ctx, f.source, f.target)
    K = kernel_pieces(f, E, N + ctx.delta)
    late = minimal_generators(K, E, lo=N)
    if late:
        g = late[0]
        raise UnstableTruncation(
            f"kernel generator at degree {g.degree} (column {g.column}) appears beyond N={N}")
    K.bound = N
    K._cache = {k: v for k, v in K._cache.items() if k[1] < N}
    return K


# resolutions -----------------------------------------------------------------


@dataclass
class Certificate:
    well_defined: bool = True
    d_squared_zero: bool = True
    minimal: bool = True
    exact: bool = True
    resolves_simple: bool = True
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.well_defined and self.d_squared_zero and self.minimal and self.exact

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "well_defined": self.well_defined,
            "d_squared_zero": self.d_squared_zero,
            "minimal": self.minimal,
            "exact": self.exact,
            "resolves_simple": self.resolves_simple,
            "failures": [list(f) if isinstance(f, tuple) else f for f in self.failures],
        }


@dataclass
class Resolution:
    simple: int
    frames: list  # W_0 .. W_k
    maps: list  # d_1 .. d_k with d_j : W_j -> W_{j-1}
    certificate: Certificate | None = None

    @property
    def length(self) -> int:
        return len(self.maps)

    @property
    def signed_monomial(self) -> bool:
        return all(d.is_signed_monomial() for d in self.maps)

    def shape(self):
        """(indices, shifts) per frame: the comparison key used against known resolutions."""
        return [(W.indices, W.shifts) for W in self.frames]

    def to_dict(self) -> dict:
        return {
            "simple": self.simple,
            "length": self.length,
            "frames": [W.to_dict() for W in self.frames],
            "maps": [d.to_dict()["entries"] for d in self.maps],
            "signed_monomial": self.signed_monomial,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


def _check_index(E, i):
    if not 1 <= i <= E.length:
        raise IndexOutOfRange(f"simple index {i} outside [1, {E.length}]")


def resolve_simple(E: EndomorphismOrder, i: int, max_len: int | None = None,
                   ctx: TruncationContext | None = None, certify: bool = True) -> Resolution:
    _check_index(E, i)
    ctx = ctx or TruncationContext()
    F = ctx.field
    max_len = E.length if max_len is None else max_len
    W0 = Frame((i,), (0,))
    N = _bound(E, ctx, W0)
    X = radical_of_frame(E, W0, N + ctx.delta, F)
    if minimal_generators(X, E, lo=N):
        raise UnstableTruncation("radical generators beyond the truncation bound")
    X.bound = N
    frames, maps = [W0], []
    while True:
        W, d = projective_cover(X, E)
        if len(W) == 0:
            break
        if len(maps) >= max_len:
            raise ResolutionTooLong(f"resolution of S_{i} exceeds {max_len} steps")
        frames.append(W)
        maps.append(d)
        X = kernel(d, E, ctx)
    res = Resolution(i, frames, maps)
    if certify:
        res.certificate = certify_resolution(E, res, ctx)
    return res


def projective_dimension(E, i, ctx=None) -> int:
    return resolve_simple(E, i, ctx=ctx, certify=False).length


def global_dimension(E, ctx=None) -> int:
    return max(projective_dimension(E, i, ctx) for i in E.representatives())


def certify_resolution(E, res: Resolution, ctx: TruncationContext | None = None) -> Certificate:
    """Exactness and minimality checked at the working bound and again ``delta`` higher."""
    ctx = ctx or TruncationContext()
    cert = Certificate()
    maps, frames = res.maps, res.frames
    for j, d in enumerate(maps, start=1):
        if d.source != frames[j] or d.target != frames[j - 1]:
            raise ShapeMismatch(f"d_{j} does not run from W_{j} to W_{j - 1}")
        if not d.is_well_defined(E):
            cert.well_defined = False
            cert.failures.append(("well_defined", j))
        if not d.entries_in_radical(E):
            cert.minimal = False
            cert.failures.append(("minimal", j))
    for j in range(1, len(maps)):
        if not maps[j - 1].compose(maps[j]).is_zero():
            cert.d_squared_zero = False
            cert.failures.append(("d_squared_zero", j))
    base = ctx.bound if ctx.bound is not None else auto_bound(E, *frames) + ctx.pad
    for N in (base, base + ctx.delta):
        _exactness(E, res, N, ctx.field, cert)
    cert.resolves_simple = cert.exact and len(frames[0]) == 1 and frames[0].indices[0] == res.simple
    return cert


def _exactness(E, res, N, F, cert):
    frames, maps = res.frames, res.maps
    # position 0: the first map must hit exactly the radical of W_0
    target = radical_of_frame(E, frames[0], N, F)
    if maps:
        bad = image(maps[0], E, N).same_as(target)
    else:
        bad = [] if target.is_zero() else [(0, 0)]
    if bad:
        cert.exact = False
        cert.failures.append(("exact", 0, N, bad[0]))
    for j in range(1, len(maps)):
        bad = image(maps[j], E, N).same_as(kernel_pieces(maps[j - 1], E, N))
        if bad:
            cert.exact = False
            cert.failures.append(("exact", j, N, bad[0]))
    if maps and not kernel_pieces(maps[-1], E, N).is_zero():
        cert.exact = False
        cert.failures.append(("exact", len(maps), N, "last map not injective"))


def check_complex(E: EndomorphismOrder, frames, maps, augmentation: int,
                  ctx: TruncationContext | None = None) -> Certificate:
    """Certify a user-supplied complex W_0 <- W_1 <- ... against S_augmentation.

    ``frames`` are index lists; ``maps`` are lists of JSON-style entries
    ``{row, col, terms: [{deg, num, den}]}`` in star form (rows index the
    target). Shifts are inferred from W_0 sitting in degree 0.
    """
    ctx = ctx or TruncationContext()
    F = ctx.field
    if len(maps) != len(frames) - 1:
        raise ShapeMismatch(f"{len(frames)} frames need {len(frames) - 1} maps, got {len(maps)}")
    for idx in frames:
        for b in idx:
            if not 1 <= b <= E.length:
                raise ShapeMismatch(f"projective index {b} outside [1, {E.length}]")
    W = [Frame.of(frames[0])]
    built = []
    for j, entries in enumerate(maps, start=1):
        d = ModuleMap.from_entries(frames[j], W[-1], entries, F)
        W.append(d.source)
        built.append(d)
    res = Resolution(augmentation, W, built)
    cert = certify_resolution(E, res, ctx)
    if frames[0] != [augmentation] and tuple(frames[0]) != (augmentation,):
        cert.resolves_simple = False
    return cert
