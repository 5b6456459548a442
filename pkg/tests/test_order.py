import random

import pytest

from nsgp.chains import greedy_chain, lazy_chain, validate_chain
from nsgp.errors import IndexOutOfRange
from nsgp.modules import Frame, ModuleMap, RowModule
from nsgp.order import (
    build_order, ceil_frame, ceil_map, ceil_module, ceil_order, ceil_order_blocks, projective,
    simple,
)
from nsgp.semigroup import NumericalSemigroup
from nsgp.verify import random_map, random_row_module

import oracle

N0 = NumericalSemigroup.naturals()
LIMIT = 120


def sg(*gens):
    return NumericalSemigroup.from_generators(gens)


def grid_sets(grid, limit=LIMIT // 2):
    return [[oracle.member_set(x, limit) for x in row] for row in grid]


def random_chains(count, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        sets, limit = oracle.random_chain_generators(rng, max_frobenius=20, max_len=6)
        out.append(validate_chain([NumericalSemigroup.from_generators(oracle.gens_of(S, limit))
                                   for S in sets]))
    return out


@pytest.mark.parametrize("chain", random_chains(15, 11), ids=lambda c: "-".join(H.label() for H in c.rings))
def test_grids_match_brute_force(chain):
    E = build_order(chain)
    rings = [oracle.member_set(H, LIMIT) for H in chain.rings]
    ref_E, ref_J = oracle.order_grids(rings, LIMIT)
    assert grid_sets(E.entries) == ref_E
    assert grid_sets(E.radical) == ref_J


@pytest.mark.parametrize("chain", random_chains(10, 12), ids=lambda c: str(len(c)))
def test_order_invariants(chain):
    E = build_order(chain)
    l = E.length
    for i in range(l):
        for j in range(l):
            assert E.radical[i][j].issubset(E.entries[i][j])
            if j <= i:
                assert E.entries[i][j].same_values(chain.rings[i])
            for k in range(l):
                assert (E.entries[i][k] + E.entries[k][j]).issubset(E.entries[i][j])
                assert (E.entries[i][k] + E.radical[k][j]).issubset(E.radical[i][j])


def test_repeated_chain_grids():
    E = build_order(validate_chain([sg(3, 4, 5), sg(3, 4, 5), sg(2, 3), sg(2, 3), N0]))
    assert E.symbol_grid("entries") == [
        ["R1", "R1", "m1", "m1", "m1"],
        ["R1", "R1", "m1", "m1", "m1"],
        ["R3", "R3", "R3", "R3", "m3"],
        ["R3", "R3", "R3", "R3", "m3"],
        ["R5", "R5", "R5", "R5", "R5"],
    ]
    assert E.symbol_grid("radical") == [
        ["m1"] * 5,
        ["m1"] * 5,
        ["R3", "R3", "m3", "m3", "m3"],
        ["R3", "R3", "m3", "m3", "m3"],
        ["R5", "R5", "R5", "R5", "m5"],
    ]
    assert [x.lead() for x in projective(E, 1).row] == [(0, 3), (0, 3), (3,), (3,), (3,)]
    assert list(simple(E, 1).columns) == [1, 2]
    assert list(simple(E, 3).columns) == [3, 4]
    assert list(simple(E, 5).columns) == [5]
    with pytest.raises(IndexOutOfRange):
        simple(E, 6)
    with pytest.raises(IndexOutOfRange):
        projective(E, 0)


def test_two_ring_example_and_functor():
    E = build_order(validate_chain([sg(3, 4, 5), N0]))
    assert E.symbol_grid("entries") == [["R1", "m1"], ["R2", "R2"]]
    assert E.symbol_grid("radical") == [["m1", "m1"], ["R2", "m2"]]
    E1 = ceil_order(E, 1)
    assert E1.symbol_grid("entries") == [["R1", "R1", "m1"], ["R1", "R1", "m1"], ["R3", "R3", "R3"]]
    assert E1 == ceil_order_blocks(E, 1)
    # f = (1 t) from P1 + P2 onto P2 becomes (1 1 t)
    f = ModuleMap(Frame((1, 2), (0, 1)), Frame((2,), (0,)), [[1, 1]])
    assert f.is_well_defined(E)
    g = ceil_map(f, 1)
    assert g.pretty() == "(1 1 t)"
    assert g.source.indices == (1, 2, 3) and g.target.indices == (3,)
    assert ceil_frame(Frame.of([1]), 1).indices == (1, 2)
    S2 = RowModule.simple(E, 2)
    U3 = ceil_module(S2, 1)
    assert U3.labels() == (3,) and U3.support() == [(3,)]
    assert U3.same(RowModule.simple(E1, 3))


def test_single_ring_order():
    E = build_order(validate_chain([N0]))
    assert E.symbol_grid("entries") == [["R1"]] and E.symbol_grid("radical") == [["m1"]]


def test_ceil_order_composition_and_identity():
    E = build_order(lazy_chain(sg(3, 5)))
    assert ceil_order(E, 0) is E
    assert ceil_order(ceil_order(E, 1), 2) == ceil_order(E, 3)
    for a in (1, 2, 3):
        assert ceil_order(E, a) == ceil_order_blocks(E, a)


def test_scalar_map_stays_scalar():
    E = build_order(greedy_chain(sg(4, 6, 9)))
    W = Frame((1, 2), (0, 0))
    f = ModuleMap(Frame((1, 2), (3, 3)), W, [[1, 0], [0, 1]])
    g = ceil_map(f, 2)
    assert g.source.indices == (1, 2, 3, 4) and all(
        g.coeffs[r][s] == (1 if r == s else 0) for r in range(4) for s in range(4))
    assert g.degree(0, 0) == 3


FUNCTOR_CHAINS = [greedy_chain(sg(*g)) for g in ((3, 4, 5), (4, 5, 6, 7), (5, 7, 9), (4, 6, 9), (5, 6, 7))]


def test_functor_properties_on_random_instances():
    rng = random.Random(5)
    for _ in range(120):
        E = build_order(rng.choice(FUNCTOR_CHAINS))
        a, b = rng.randint(0, 3), rng.randint(0, 2)
        Ea = ceil_order(E, a)
        X, Y = random_row_module(E, rng), random_row_module(E, rng)
        assert ceil_module(X + Y, a).same(ceil_module(X, a) + ceil_module(Y, a))
        assert ceil_module(X, a).radical(Ea).same(ceil_module(X.radical(E), a))
        assert ceil_module(X, 0).same(X)
        assert ceil_module(ceil_module(X, a), b).same(ceil_module(X, a + b))
        f = random_map(E, rng, radical=True)
        assert ceil_map(f, a).entries_in_radical(Ea)
        assert ceil_map(f, a).is_well_defined(Ea)
        assert ceil_map(ceil_map(f, a), b) == ceil_map(f, a + b)


def test_ceil_map_loses_onto_for_first_label_targets():
    """Repeating the P_1 row of a map onto P_1 only reaches the diagonal copy."""
    from nsgp.homology import full_module, image
    E = build_order(validate_chain([sg(3, 4, 5), N0]))
    f = ModuleMap(Frame((1, 2), (0, 0)), Frame.of([1]), [[1, 0]])
    Ea = ceil_order(E, 1)
    N = 30
    assert not image(f, E, N).same_as(full_module(E, f.target, N))
    g = ceil_map(f, 1)
    assert image(g, Ea, N).same_as(full_module(Ea, g.target, N))
