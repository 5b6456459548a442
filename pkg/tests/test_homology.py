import random
from fractions import Fraction

import pytest

from nsgp import linalg
from nsgp.chains import greedy_chain, lazy_chain, validate_chain
from nsgp.errors import (
    IndexOutOfRange, NotHomogeneous, ResolutionTooLong, ShapeMismatch, TruncationOverflow,
)
from nsgp.field import QQ, PrimeField, parse_field
from nsgp.homology import (
    TruncationContext, check_complex, full_module, global_dimension, image, kernel,
    minimal_generators, projective_cover, projective_dimension, radical_multiply,
    radical_of_frame, resolve_simple,
)
from nsgp.modules import Frame, ModuleMap
from nsgp.order import build_order
from nsgp.semigroup import NumericalSemigroup, family_ring
from nsgp.verify import shape

N0 = NumericalSemigroup.naturals()


def sg(*gens):
    return NumericalSemigroup.from_generators(gens)


@pytest.fixture(scope="module")
def E_two():
    return build_order(validate_chain([sg(3, 4, 5), N0]))


@pytest.fixture(scope="module")
def E_lazy():
    return build_order(lazy_chain(sg(4, 6, 9)))


def test_radical_multiply_of_projective_is_radical_row(E_lazy):
    E = E_lazy
    N = 40
    for i in range(1, E.length + 1):
        W = Frame.of([i])
        got = radical_multiply(full_module(E, W, N), E)
        assert not got.same_as(radical_of_frame(E, W, N))


def test_radical_multiply_of_zero(E_two):
    Z = radical_of_frame(E_two, Frame.of([]), 20)
    assert radical_multiply(Z, E_two).is_zero()


def test_generators_of_bottom_radical(E_lazy):
    E = E_lazy
    l = E.length
    X = radical_of_frame(E, Frame.of([l]), 40)
    gens = minimal_generators(X, E)
    assert [g.column for g in gens] == [l - 1, l]
    assert [g.degree for g in gens] == [0, 1]
    assert len(minimal_generators(full_module(E, Frame.of([2]), 40), E)) == 1


def test_cover_is_onto_and_generators_are_needed(E_lazy):
    E = E_lazy
    N = 40
    for i in range(1, E.length + 1):
        X = radical_of_frame(E, Frame.of([i]), N)
        W, f = projective_cover(X, E)
        assert not image(f, E, N).same_as(X)
        for drop in range(len(W)):
            keep = [s for s in range(len(W)) if s != drop]
            g = ModuleMap(Frame(tuple(W.indices[s] for s in keep), tuple(W.shifts[s] for s in keep)),
                          f.target, [[row[s] for s in keep] for row in f.coeffs])
            assert image(g, E, N).same_as(X)


def test_bottom_kernel_is_lambda(E_lazy):
    E = E_lazy
    l = E.length
    e = E.chain.rings[l - 2].multiplicity
    f = ModuleMap(Frame((l - 1, l), (0, 1)), Frame.of([l]), [[1, 1]])
    K = kernel(f, E)
    gens = minimal_generators(K, E)
    assert len(gens) == 1
    W, lam = projective_cover(K, E)
    assert [lam.degree(0, 0), lam.degree(1, 0)] == [e, e - 1]
    assert lam.coeffs[0][0] == -lam.coeffs[1][0]


def test_single_column_monomial_is_injective(E_lazy):
    E = E_lazy
    f = ModuleMap(Frame((1,), (4,)), Frame.of([3]), [[1]])
    assert f.is_well_defined(E)
    assert kernel(f, E).is_zero()


def test_lazy_second_family_resolution():
    E = build_order(lazy_chain(family_ring(6, 10, 2)))
    res = resolve_simple(E, 1)
    assert res.certificate.ok
    assert [list(W.indices) for W in res.frames] == [[1], [5, 8], [E.length]]
    assert res.maps[0].pretty() == "(t^6 t^9)"


def test_greedy_second_simple_cover():
    E = build_order(greedy_chain(family_ring(6, 10, 3)))
    res = resolve_simple(E, 2)
    assert res.frames[1].indices == (1, 3)
    assert res.maps[0].pretty() == "(1 t^3)"
    assert resolve_simple(E, 1).maps[0].pretty() == "(t^6)"


def test_dimensions_and_bounds():
    E = build_order(greedy_chain(family_ring(6, 10, 4)))
    assert global_dimension(E) == 2
    assert projective_dimension(E, 1) == 1
    E5 = build_order(lazy_chain(family_ring(6, 10, 5)))
    assert projective_dimension(E5, 1) == 3
    g = global_dimension(E5)
    assert 3 <= g <= E5.length


def test_fields_agree():
    E = build_order(lazy_chain(family_ring(8, 13, 3)))
    for i in E.representatives():
        a = resolve_simple(E, i, ctx=TruncationContext(field=QQ))
        b = resolve_simple(E, i, ctx=TruncationContext(field=PrimeField(101)))
        assert shape(a) == shape(b)
        assert b.certificate.ok


def test_errors(E_two):
    with pytest.raises(IndexOutOfRange):
        resolve_simple(E_two, 3)
    with pytest.raises(TruncationOverflow):
        resolve_simple(E_two, 1, ctx=TruncationContext(bound=3))
    with pytest.raises(ResolutionTooLong):
        resolve_simple(E_two, 2, max_len=1)


# complexes built from closed forms -----------------------------------------------


def _entry(row, col, deg, num=1):
    return {"row": row, "col": col, "terms": [{"deg": deg, "num": num, "den": 1}]}


def test_check_complex_accepts_middle_greedy_resolution():
    # (n, a, i, j) = (6, 10, 3, 3): S_3 <- P_3 <- P_2 + P_4 <- P_3 with (1 t^3), (t^3; -1)
    E = build_order(greedy_chain(family_ring(6, 10, 3)))
    frames = [[3], [2, 4], [3]]
    maps = [[_entry(1, 1, 0), _entry(1, 2, 3)], [_entry(1, 1, 3), _entry(2, 1, 0, -1)]]
    cert = check_complex(E, frames, maps, 3)
    assert cert.ok and cert.resolves_simple


def test_check_complex_rejects_flipped_sign():
    E = build_order(greedy_chain(family_ring(6, 10, 3)))
    frames = [[3], [2, 4], [3]]
    maps = [[_entry(1, 1, 0), _entry(1, 2, 3)], [_entry(1, 1, 3), _entry(2, 1, 0, 1)]]
    cert = check_complex(E, frames, maps, 3)
    assert not cert.d_squared_zero and not cert.exact and not cert.ok


def test_check_complex_detects_wrong_simple_and_nonminimal():
    E = build_order(validate_chain([sg(3, 4, 5), N0]))
    cert = check_complex(E, [[2], [1, 2], [2]],
                         [[_entry(1, 1, 0), _entry(1, 2, 1)], [_entry(1, 1, 3), _entry(2, 1, 2, -1)]], 1)
    assert cert.ok and not cert.resolves_simple
    bad = check_complex(E, [[2], [2]], [[_entry(1, 1, 0)]], 2)
    assert not bad.minimal


def test_check_complex_shape_errors():
    E = build_order(validate_chain([sg(3, 4, 5), N0]))
    with pytest.raises(ShapeMismatch):
        check_complex(E, [[2], [1, 2]], [], 2)
    with pytest.raises(ShapeMismatch):
        check_complex(E, [[7]], [], 7)
    with pytest.raises(NotHomogeneous):
        check_complex(E, [[2], [1]], [[{"row": 1, "col": 1, "terms": [{"deg": 3}, {"deg": 4}]}]], 2)
    with pytest.raises(NotHomogeneous):
        ModuleMap.from_entries((1,), Frame((2, 2), (0, 0)), [_entry(1, 1, 3), _entry(2, 1, 4)])


# maps and linear algebra -------------------------------------------------------


def test_map_serialization_and_compose():
    f = ModuleMap(Frame((1, 2), (0, 1)), Frame.of([2]), [[1, -1]])
    g = ModuleMap(Frame((2,), (3,)), f.source, [[Fraction(1, 2)], [1]])
    assert ModuleMap.from_dict(f.to_dict()) == f
    assert f.compose(g).coeffs == ((Fraction(-1, 2),),)
    assert g.pretty() == "(1/2t^3); (t^2)"
    with pytest.raises(ShapeMismatch):
        g.compose(f)


def test_linalg_against_fraction_rank():
    import oracle
    rng = random.Random(3)
    for _ in range(200):
        rows = [tuple(QQ(rng.randint(-2, 2)) for _ in range(4)) for _ in range(rng.randint(1, 4))]
        null = linalg.nullspace(rows, 4, QQ)
        assert len(null) == 4 - oracle._rank(rows)
        for x in null:
            assert all(sum(r[k] * x[k] for k in range(4)) == 0 for r in rows)


def test_prime_field_arithmetic():
    F = parse_field("prime:7")
    assert F.mul(F(3), F.inv(F(3))) == F.one
    assert F(1, 2) == F(4)
    assert F.to_pair(F(-1)) == (-1, 1)
    assert parse_field("rational") is QQ or parse_field("rational") == QQ
    with pytest.raises(ValueError):
        parse_field("complex")
