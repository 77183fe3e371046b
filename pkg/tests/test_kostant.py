"""Partition function q-analog: polynomial type, recursion, brute force, cache."""

import json
import random
from fractions import Fraction

import pytest

from weylalt import lattice
from weylalt.errors import HeightExceeded
from weylalt.kostant import (PartitionCache, QPolynomial, partition,
                             partition_q, partition_q_alpha,
                             partition_q_bruteforce)
from weylalt.rootsystem import build, fundamental_weight


def combo(rs, coords):
    """Integer combination of simple roots as an ambient vector."""
    v = lattice.zeros(rs.ambient_dim)
    for c, alpha in zip(coords, rs.simple_roots):
        v = lattice.add(v, lattice.scale(c, alpha))
    return v


# === QPolynomial ===

def test_qpolynomial_trims_and_compares():
    assert QPolynomial((0, 1, 0, 0)) == QPolynomial((0, 1))
    assert QPolynomial(()) == QPolynomial.zero()
    assert QPolynomial((1,)) == QPolynomial.one()
    assert not QPolynomial.zero()
    assert QPolynomial((0, 1))
    assert QPolynomial((1, 2)) != QPolynomial((1, 2, 3))


def test_qpolynomial_is_immutable_and_hashable():
    p = QPolynomial((1, 2))
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
    assert hash(p) == hash(QPolynomial((1, 2)))


def test_qpolynomial_arithmetic():
    p = QPolynomial((0, 1, 1))  # q + q^2
    q = QPolynomial((1, 1))     # 1 + q
    assert p + q == QPolynomial((1, 2, 1))
    assert p - p == QPolynomial.zero()
    assert p * q == QPolynomial((0, 1, 2, 1))
    assert q ** 3 == QPolynomial((1, 3, 3, 1))
    assert q ** 0 == QPolynomial.one()
    assert p.shift(2) == QPolynomial((0, 0, 0, 1, 1))
    assert p.scale(-2) == QPolynomial((0, -2, -2))
    assert p.evaluate(1) == 2
    assert p.evaluate(3) == 3 + 9
    assert QPolynomial.geometric(1, 3) == QPolynomial((0, 1, 1, 1))
    assert QPolynomial.geometric(2, 1) == QPolynomial.zero()
    assert QPolynomial.monomial(4, -3) == QPolynomial((0, 0, 0, 0, -3))


def test_qpolynomial_pow_rejects_negative():
    with pytest.raises(ValueError):
        QPolynomial((1, 1)) ** -1
    with pytest.raises(ValueError):
        QPolynomial.monomial(-1)


@pytest.mark.parametrize("coeffs, text", [
    ((), "0"),
    ((1,), "1"),
    ((0, 1), "q"),
    ((0, 1, 2), "2q^2 + q"),
    ((0, 1, 2, 1), "q^3 + 2q^2 + q"),
    ((1, 0, -1), "-q^2 + 1"),
    ((0, -2,), "-2q"),
])
def test_qpolynomial_str(coeffs, text):
    assert str(QPolynomial(coeffs)) == text


# === partition values frozen by hand ===

def test_partition_q_zero_vector_is_one():
    rs = build("B", 2)
    assert partition_q(lattice.zeros(2), rs) == QPolynomial.one()


def test_partition_q_single_simple_root():
    rs = build("B", 2)
    for alpha in rs.simple_roots:
        assert partition_q(alpha, rs) == QPolynomial.monomial(1)


def test_partition_q_b2_frozen():
    rs = build("B", 2)
    assert partition_q(combo(rs, (1, 1)), rs) == QPolynomial((0, 1, 1))
    assert partition_q(combo(rs, (2, 2)), rs) == QPolynomial((0, 0, 2, 1, 1))


def test_partition_q_b3_vector_weight():
    rs = build("B", 3)
    w1 = fundamental_weight(rs, 1)
    assert partition_q(w1, rs) == QPolynomial((0, 1, 2, 1))


def test_partition_q_a2():
    rs = build("A", 2)
    assert partition_q(combo(rs, (1, 1)), rs) == QPolynomial((0, 1, 1))
    assert partition_q(combo(rs, (2, 1)), rs) == QPolynomial((0, 0, 1, 1))


def test_partition_q_outside_cone_is_zero():
    rs = build("B", 2)
    assert partition_q(combo(rs, (-1, 2)), rs) == QPolynomial.zero()
    # off the root lattice entirely (half coordinates)
    half = lattice.scale(Fraction(1, 2), rs.simple_roots[0])
    assert partition_q(half, rs) == QPolynomial.zero()
    # off the root span (type A, nonzero coordinate sum)
    a2 = build("A", 2)
    assert partition_q(lattice.vector([1, 0, 0]), a2) == QPolynomial.zero()


def test_partition_q_alpha_validates_length():
    rs = build("B", 3)
    with pytest.raises(ValueError):
        partition_q_alpha((1, 1), rs)


def test_partition_counts_decompositions():
    rs = build("B", 2)
    # e1 = a1 + a2: as itself, or a1 + a2, so two decompositions
    assert partition(combo(rs, (1, 1)), rs) == 2


# === brute force agreement (the two routes stay independent) ===

@pytest.mark.parametrize("label, rank", [("A", 2), ("A", 3), ("B", 2),
                                         ("B", 3), ("C", 3), ("G2", 2)])
def test_partition_q_matches_bruteforce(label, rank):
    rs = build(label, rank)
    rng = random.Random(101)
    for _ in range(40):
        coords = [rng.randint(0, 3) for _ in range(rank)]
        xi = combo(rs, coords)
        assert partition_q(xi, rs) == partition_q_bruteforce(xi, rs)


def test_bruteforce_height_guard():
    rs = build("B", 2)
    with pytest.raises(HeightExceeded):
        partition_q_bruteforce(combo(rs, (16, 15)), rs)


def test_bruteforce_rejects_wrong_dimension():
    rs = build("B", 2)
    with pytest.raises(ValueError):
        partition_q_bruteforce(lattice.vector([1, 0, 0]), rs)


# === ordering independence of the recursion ===

@pytest.mark.parametrize("label, rank", [("B", 3), ("C", 3), ("D", 4)])
def test_partition_q_independent_of_root_order(label, rank):
    rs = build(label, rank)
    rng = random.Random(13)
    n = len(rs.positive_roots)
    for _ in range(10):
        coords = [rng.randint(0, 3) for _ in range(rank)]
        xi = combo(rs, coords)
        reference = partition_q(xi, rs)
        order = list(range(n))
        rng.shuffle(order)
        assert partition_q(xi, rs, root_order=order) == reference


def test_partition_q_rejects_bad_root_order():
    rs = build("B", 2)
    xi = combo(rs, (1, 1))
    with pytest.raises(ValueError):
        partition_q(xi, rs, root_order=[0, 0, 1, 2])


# === cache behavior ===

def test_cache_round_trip(tmp_path):
    rs = build("B", 3)
    cache = PartitionCache(rs.type_label, rs.rank)
    xi = combo(rs, (2, 3, 2))
    reference = partition_q(xi, rs, cache=cache)
    assert len(cache) > 0
    path = tmp_path / "b3.json"
    cache.save(path)
    loaded = PartitionCache.load(path)
    assert loaded.matches(rs)
    assert loaded.table == cache.table
    assert partition_q(xi, rs, cache=loaded) == reference


def test_cache_matches_other_system():
    cache = PartitionCache("B", 3)
    assert not cache.matches(build("B", 2))
    assert not cache.matches(build("C", 3))


def test_cache_load_rejects_other_format(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text(json.dumps({"format": "something-else", "version": 1,
                                "type": "B", "rank": 2, "entries": []}))
    with pytest.raises(ValueError):
        PartitionCache.load(path)


def test_cache_max_entries_only_limits_storage():
    rs = build("B", 3)
    unlimited = PartitionCache(rs.type_label, rs.rank)
    capped = PartitionCache(rs.type_label, rs.rank, max_entries=2)
    xi = combo(rs, (2, 2, 2))
    assert partition_q(xi, rs, cache=unlimited) == partition_q(xi, rs, cache=capped)
    assert len(capped) <= 2


def test_partition_coefficients_are_nonnegative():
    rs = build("D", 4)
    rng = random.Random(5)
    for _ in range(20):
        coords = [rng.randint(0, 3) for _ in range(4)]
        p = partition_q(combo(rs, coords), rs)
        assert all(c >= 0 for c in p.coeffs)
        if any(coords):
            # every decomposition uses at least one part and at most the height
            assert p.coeffs[:1] in ((), (0,))
            assert p.degree <= sum(coords)
