"""Binary subspaces and the MacWilliams transform."""

import random
from math import comb

import pytest

from krawtchouk import core, gf2
from krawtchouk.spectral import binomial_vector


def test_bitstring_parsing():
    assert gf2.vector_from_bits("110") == 0b011  # coordinate 1 first
    assert gf2.vector_to_bits(0b011, 3) == "110"
    with pytest.raises(ValueError):
        gf2.vector_from_bits("10x")


def test_subspace_construction_and_dims():
    assert gf2.subspace_from(["110"], 3).dim == 1
    assert gf2.subspace_from(["110", "110"], 3).dim == 1
    assert gf2.subspace_from(["100", "010", "110"], 3).dim == 2
    assert gf2.subspace_from([], 4).dim == 0
    with pytest.raises(ValueError):
        gf2.subspace_from([], None)
    with pytest.raises(ValueError):
        gf2.subspace_from([0b1000], 3)


def test_rref_is_canonical():
    a = gf2.subspace_from(["110", "011"], 3)
    b = gf2.subspace_from(["101", "110"], 3)
    assert a.basis == b.basis  # same span, same canonical form
    c = gf2.subspace_from(["011"], 3)
    assert a.basis != c.basis


def test_rref_canonical_under_regeneration():
    # rebuilding a subspace from any generating subset of its own span
    # must reproduce the identical basis tuple, and the span itself
    rng = random.Random(77)
    for _ in range(150):
        n = rng.randint(1, 8)
        space = gf2.random_subspace(rng, n)
        span = list(space.vectors())
        sample = [rng.choice(span) for _ in range(2 * n)] + span
        rng.shuffle(sample)
        rebuilt = gf2.subspace_from(sample, n)
        assert rebuilt.basis == space.basis
        assert sorted(rebuilt.vectors()) == sorted(span)
        # every basis row has its pivot bit cleared from all other rows
        for row in rebuilt.basis:
            pivot = row & -row
            assert all(other == row or not other & pivot
                       for other in rebuilt.basis)


def test_membership_and_enumeration():
    w = gf2.subspace_from(["110", "001"], 3)
    members = sorted(w.vectors())
    assert len(members) == 4
    assert all(w.contains(v) for v in members)
    assert not w.contains(0b001)  # "100" is outside span{110, 001}
    assert not w.contains(0b010)


def test_complement_examples():
    w = gf2.subspace_from(["110"], 3)
    perp = gf2.complement(w)
    assert perp.dim == 2
    assert sorted(perp.vectors()) == sorted(
        gf2.subspace_from(["110", "001"], 3).vectors())
    zero = gf2.subspace_from([], 3)
    assert gf2.complement(zero).dim == 3
    full = gf2.subspace_from(["100", "010", "001"], 3)
    assert gf2.complement(full).dim == 0


def test_double_complement_random():
    rng = random.Random(31)
    for _ in range(100):
        n = rng.randint(1, 10)
        w = gf2.random_subspace(rng, n)
        assert gf2.complement(gf2.complement(w)).basis == w.basis
        assert w.dim + gf2.complement(w).dim == n


def test_weight_characters():
    w = gf2.subspace_from(["110"], 3)
    assert gf2.weight_character(w).as_list() == [1, 0, 1, 0]
    perp = gf2.subspace_from(["110", "001"], 3)
    assert gf2.weight_character(perp).as_list() == [1, 1, 1, 1]
    full = gf2.subspace_from([1 << i for i in range(5)], 5)
    assert gf2.weight_character(full).as_list() == \
        [comb(5, i) for i in range(6)]
    for n in range(1, 8):
        space = gf2.random_subspace(random.Random(n), n)
        counts = gf2.weight_character(space).as_list()
        assert counts[0] == 1
        assert sum(counts) == 2 ** space.dim


def test_macwilliams_worked_example():
    w = gf2.subspace_from(["110"], 3)
    assert gf2.macwilliams_check(w)
    # 2 * [1,1,1,1] = K3 * [1,0,1,0]
    assert core.k_genfunc(3).mat.mul_vector([1, 0, 1, 0]) == [2, 2, 2, 2]


def test_macwilliams_span10_in_z2_squared():
    w = gf2.subspace_from(["10"], 2)
    assert gf2.weight_character(w).as_list() == [1, 1, 0]
    perp = gf2.complement(w)
    assert gf2.weight_character(perp).as_list() == [1, 1, 0]
    assert core.k_genfunc(2).mat.mul_vector([1, 1, 0]) == [2, 2, 0]
    assert gf2.macwilliams_check(w)


def test_macwilliams_full_space():
    for n in range(1, 8):
        full = gf2.subspace_from([1 << i for i in range(n)], n)
        assert gf2.macwilliams_check(full)
        char = gf2.weight_character(full).as_list()
        image = core.k_genfunc(n).mat.mul_vector(char)
        assert image == [2 ** n] + [0] * n


def test_macwilliams_random_subspaces():
    rng = random.Random(42)
    for _ in range(500):
        n = rng.randint(2, 12)
        space = gf2.random_subspace(rng, n)
        assert gf2.macwilliams_check(space), str(space)


def test_scaling_is_cardinality_not_dimension():
    # span{e1} in Z2^2: K char(W) = 2 char(W-perp) although dim W-perp = 1
    w = gf2.subspace_from(["10"], 2)
    perp_char = gf2.weight_character(gf2.complement(w)).as_list()
    image = core.k_genfunc(2).mat.mul_vector(
        gf2.weight_character(w).as_list())
    assert image == [2 * c for c in perp_char]
    assert image != [1 * c for c in perp_char]


def test_coordinate_subspaces_reproduce_binomial_transform():
    for n in range(1, 10):
        for k in range(n + 1):
            axes = gf2.subspace_from([1 << i for i in range(k)], n)
            assert gf2.weight_character(axes).as_list() == \
                binomial_vector(n, k)
            assert gf2.coordinate_subspace_note(axes)
    with pytest.raises(ValueError, match="standard basis"):
        gf2.coordinate_subspace_note(gf2.subspace_from(["110"], 3))


def test_double_transform_consistency():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 10)
        space = gf2.random_subspace(rng, n)
        char = gf2.weight_character(space).as_list()
        k = core.k_genfunc(n).mat
        assert k.mul_vector(k.mul_vector(char)) == [2 ** n * c for c in char]


def test_enumeration_bound():
    wide = gf2.subspace_from([1 << i for i in range(25)], 25)
    with pytest.raises(ValueError, match="enumeration bound"):
        list(wide.vectors())
    with pytest.raises(ValueError, match="bound"):
        gf2.macwilliams_check(gf2.subspace_from(["1" * 17], 17))
