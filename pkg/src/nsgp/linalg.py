"""Small exact linear algebra over a coefficient field.

Vectors are tuples of field elements. Subspaces are kept as reduced row
echelon bases: lists of (pivot, vector) with vector[pivot] == 1 and every
other basis vector zero at that pivot. Field zero must be falsy.
"""
from __future__ import annotations


def _reduce(vec, basis, F):
    vec = list(vec)
    for piv, b in basis:
        c = vec[piv]
        if c:
            for k, bk in enumerate(b):
                if bk:
                    vec[k] = F.sub(vec[k], F.mul(c, bk))
    return vec


def insert(basis, vec, F):
    """Add ``vec`` to the echelon ``basis`` in place; return True if it was new."""
    vec = _reduce(vec, basis, F)
    piv = next((k for k, x in enumerate(vec) if x), None)
    if piv is None:
        return False
    inv = F.inv(vec[piv])
    vec = tuple(F.mul(inv, x) for x in vec)
    for idx, (p, b) in enumerate(basis):
        c = b[piv]
        if c:
            basis[idx] = (p, tuple(F.sub(bk, F.mul(c, vk)) for bk, vk in zip(b, vec)))
    basis.append((piv, vec))
    basis.sort(key=lambda pb: pb[0])
    return True


def echelon(vectors, F):
    basis = []
    for v in vectors:
        insert(basis, v, F)
    return basis


def contains(basis, vec, F) -> bool:
    return not any(_reduce(vec, basis, F))


def nullspace(matrix, ncols, F):
    """Basis of {x : matrix x = 0}; ``matrix`` is a list of rows."""
    rows = echelon(matrix, F)
    pivots = {p: v for p, v in rows}
    free = [k for k in range(ncols) if k not in pivots]
    out = []
    for f in free:
        x = [F.zero] * ncols
        x[f] = F.one
        for p, v in rows:
            x[p] = F.neg(v[f])
        out.append(tuple(x))
    return out


def quotient_complement(sub_basis, space_vectors, F):
    """Vectors of ``space_vectors`` reduced modulo ``sub_basis`` that extend it to a basis.

    Returned vectors are reduced against the sub-basis and against each other,
    then scaled so their first nonzero entry is one.
    """
    work = list(sub_basis)
    extra = []
    for v in space_vectors:
        if insert(work, v, F):
            extra.append(v)
    # canonical representatives: echelon form of the new part modulo sub_basis
    reduced = []
    for v in extra:
        insert(reduced, _reduce(v, sub_basis, F), F)
    return [tuple(_reduce(v, sub_basis, F)) for _, v in reduced]
