"""Root system realizations: roots, weights, rho, coordinate changes."""

import random
from fractions import Fraction

import pytest

from weylalt import lattice
from weylalt.errors import NotInRootSpan, UnsupportedRank
from weylalt.rootsystem import (build, dominant_integral_weights_in_box,
                                fundamental_weight, highest_root, is_dominant,
                                is_dominant_integral, sum_of_simple_roots,
                                sum_of_simple_roots_in_fundamental_basis,
                                to_fundamental_coords, to_simple_root_coords)

ALL_SYSTEMS = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("B", 4),
               ("C", 3), ("C", 4), ("D", 4), ("D", 5), ("G2", 2), ("F4", 4),
               ("E6", 6), ("E7", 7), ("E8", 8)]

POSITIVE_COUNTS = {("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("B", 2): 4,
                   ("B", 3): 9, ("B", 4): 16, ("C", 3): 9, ("C", 4): 16,
                   ("D", 4): 12, ("D", 5): 20, ("G2", 2): 6, ("F4", 4): 24,
                   ("E6", 6): 36, ("E7", 7): 63, ("E8", 8): 120}


@pytest.mark.parametrize("label, rank", ALL_SYSTEMS)
def test_positive_root_count(label, rank):
    rs = build(label, rank)
    assert len(rs.positive_roots) == POSITIVE_COUNTS[(label, rank)]
    assert len(set(rs.positive_roots)) == len(rs.positive_roots)


@pytest.mark.parametrize("label, rank", ALL_SYSTEMS)
def test_simple_roots_open_the_positive_list(label, rank):
    # every simple root is positive with alpha-coords a standard basis vector
    rs = build(label, rank)
    for i, alpha in enumerate(rs.simple_roots):
        k = rs.positive_roots.index(alpha)
        expected = tuple(1 if j == i else 0 for j in range(rank))
        assert rs.positive_root_alpha_coords[k] == expected


@pytest.mark.parametrize("label, rank", ALL_SYSTEMS)
def test_alpha_coords_are_nonnegative_integers(label, rank):
    rs = build(label, rank)
    for coords, root in zip(rs.positive_root_alpha_coords, rs.positive_roots):
        assert all(isinstance(c, int) and c >= 0 for c in coords)
        assert sum(c > 0 for c in coords) >= 1
        rebuilt = lattice.zeros(rs.ambient_dim)
        for c, alpha in zip(coords, rs.simple_roots):
            rebuilt = lattice.add(rebuilt, lattice.scale(c, alpha))
        assert rebuilt == root


@pytest.mark.parametrize("label, rank", ALL_SYSTEMS)
def test_fundamental_weights_dual_to_coroots(label, rank):
    rs = build(label, rank)
    for i in range(1, rank + 1):
        w = fundamental_weight(rs, i)
        for j in range(1, rank + 1):
            assert rs.coroot_pairing(w, j) == (1 if i == j else 0)


@pytest.mark.parametrize("label, rank", ALL_SYSTEMS)
def test_rho_is_half_sum_and_sum_of_weights(label, rank):
    rs = build(label, rank)
    half_sum = lattice.zeros(rs.ambient_dim)
    for root in rs.positive_roots:
        half_sum = lattice.add(half_sum, root)
    half_sum = lattice.scale(Fraction(1, 2), half_sum)
    assert rs.rho == half_sum
    weight_sum = lattice.zeros(rs.ambient_dim)
    for w in rs.fundamental_weights:
        weight_sum = lattice.add(weight_sum, w)
    assert rs.rho == weight_sum


def test_b3_frozen_values():
    rs = build("B", 3)
    assert rs.simple_roots == (lattice.vector([1, -1, 0]),
                               lattice.vector([0, 1, -1]),
                               lattice.vector([0, 0, 1]))
    assert rs.rho == (Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))
    assert to_simple_root_coords(rs.rho, rs) == (Fraction(5, 2), 4, Fraction(9, 2))
    assert fundamental_weight(rs, 1) == (1, 0, 0)
    assert fundamental_weight(rs, 2) == (1, 1, 0)
    assert fundamental_weight(rs, 3) == (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
    assert rs.cartan_matrix == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))


def test_g2_frozen_values():
    rs = build("G2", 2)
    assert rs.cartan_matrix == ((2, -3), (-1, 2))
    # the long fundamental weight is the highest root, three alpha1 plus two alpha2
    w2 = fundamental_weight(rs, 2)
    assert w2 == highest_root(rs)
    assert to_simple_root_coords(w2, rs) == (3, 2)


def test_f4_frozen_values():
    rs = build("F4", 4)
    assert rs.cartan_matrix == ((2, -1, 0, 0), (-1, 2, -1, 0),
                                (0, -2, 2, -1), (0, 0, -1, 2))
    assert rs.rho == (Fraction(11, 2), Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))
    assert highest_root(rs) == (1, 1, 0, 0)


@pytest.mark.parametrize("label, rank, expected", [
    ("A", 3, (1, 0, 0, -1)),
    ("B", 3, (1, 1, 0)),
    ("C", 3, (2, 0, 0)),
    ("D", 4, (1, 1, 0, 0)),
    ("G2", 2, (-1, -1, 2)),
    ("F4", 4, (1, 1, 0, 0)),
])
def test_highest_root_frozen(label, rank, expected):
    assert highest_root(build(label, rank)) == lattice.vector(expected)


@pytest.mark.parametrize("label, rank", ALL_SYSTEMS)
def test_highest_root_dominates(label, rank):
    rs = build(label, rank)
    theta = highest_root(rs)
    assert is_dominant(theta, rs)
    # strictly taller than every other positive root
    heights = [sum(c) for c in rs.positive_root_alpha_coords]
    assert heights.count(max(heights)) == 1


@pytest.mark.parametrize("label, rank", [("A", 0), ("B", 1), ("C", 2),
                                         ("D", 3), ("G2", 3), ("F4", 2),
                                         ("E6", 5), ("E8", 7)])
def test_unsupported_ranks(label, rank):
    with pytest.raises(UnsupportedRank):
        build(label, rank)


def test_unknown_type():
    with pytest.raises(UnsupportedRank):
        build("H", 3)


def test_to_simple_root_coords_rejects_off_span():
    rs = build("A", 2)
    with pytest.raises(NotInRootSpan):
        to_simple_root_coords(lattice.vector([1, 0, 0]), rs)  # nonzero coordinate sum
    with pytest.raises(ValueError):
        to_simple_root_coords(lattice.vector([1, 0]), rs)  # wrong dimension


@pytest.mark.parametrize("label, rank", [("A", 2), ("B", 3), ("C", 3),
                                         ("D", 4), ("G2", 2), ("F4", 4),
                                         ("E6", 6)])
def test_coordinate_round_trips(label, rank):
    rs = build(label, rank)
    rng = random.Random(11)
    for _ in range(25):
        coords = [Fraction(rng.randint(-6, 6), rng.choice([1, 1, 2])) for _ in range(rank)]
        v = lattice.zeros(rs.ambient_dim)
        for c, alpha in zip(coords, rs.simple_roots):
            v = lattice.add(v, lattice.scale(c, alpha))
        assert to_simple_root_coords(v, rs) == tuple(coords)
    for _ in range(25):
        coords = [Fraction(rng.randint(-6, 6)) for _ in range(rank)]
        v = lattice.zeros(rs.ambient_dim)
        for c, w in zip(coords, rs.fundamental_weights):
            v = lattice.add(v, lattice.scale(c, w))
        assert to_fundamental_coords(v, rs) == tuple(coords)


def test_dominance_predicates():
    rs = build("B", 3)
    w2 = fundamental_weight(rs, 2)
    assert is_dominant(w2, rs) and is_dominant_integral(w2, rs)
    assert not is_dominant(lattice.neg(w2), rs)
    half = lattice.scale(Fraction(1, 2), fundamental_weight(rs, 1))
    assert is_dominant(half, rs) and not is_dominant_integral(half, rs)
    w3 = fundamental_weight(rs, 3)  # half-odd coordinates, still integral
    assert is_dominant_integral(w3, rs)


@pytest.mark.parametrize("label, rank, expected", [
    ("A", 1, (2,)),
    ("A", 2, (1, 1)),
    ("A", 5, (1, 0, 0, 0, 1)),
    ("B", 2, (1, 0)),
    ("B", 6, (1, 0, 0, 0, 0, 0)),
    ("C", 3, (1, -1, 1)),
    ("C", 5, (1, 0, 0, -1, 1)),
    ("D", 4, (1, -1, 1, 1)),
    ("D", 6, (1, 0, 0, -1, 1, 1)),
    ("G2", 2, (-1, 1)),
    ("F4", 4, (1, 0, -1, 1)),
    ("E6", 6, (1, 1, 0, -1, 0, 1)),
    ("E7", 7, (1, 1, 0, -1, 0, 0, 1)),
    ("E8", 8, (1, 1, 0, -1, 0, 0, 0, 1)),
])
def test_sum_of_simple_roots_fundamental_coords(label, rank, expected):
    rs = build(label, rank)
    fc = sum_of_simple_roots_in_fundamental_basis(rs)
    assert fc == tuple(Fraction(c) for c in expected)
    assert is_dominant(sum_of_simple_roots(rs), rs) == (label in ("A", "B"))


def test_box_enumeration_b2():
    rs = build("B", 2)
    box = dominant_integral_weights_in_box(rs, 1)
    assert box == [lattice.vector([0, 0]),
                   lattice.vector(["1/2", "1/2"]),
                   lattice.vector([1, 0]),
                   lattice.vector([1, 1])]


def test_box_enumeration_b3():
    rs = build("B", 3)
    box = dominant_integral_weights_in_box(rs, 1)
    assert len(box) == 5
    assert lattice.vector(["1/2", "1/2", "1/2"]) in box
    assert all(is_dominant_integral(w, rs) for w in box)


@pytest.mark.parametrize("label, rank", [("A", 2), ("B", 3), ("C", 3), ("D", 4)])
def test_box_bound_zero_is_origin(label, rank):
    rs = build(label, rank)
    assert dominant_integral_weights_in_box(rs, 0) == [lattice.zeros(rs.ambient_dim)]


def test_build_is_cached():
    assert build("B", 3) is build("B", 3)
