"""Exact vector and matrix arithmetic over Fraction."""

import random
from fractions import Fraction

import pytest

from weylalt import lattice


def test_vector_coerces_to_fraction():
    v = lattice.vector([1, "1/2", Fraction(3, 4)])
    assert v == (Fraction(1), Fraction(1, 2), Fraction(3, 4))
    assert all(isinstance(c, Fraction) for c in v)


def test_zeros():
    assert lattice.zeros(3) == (Fraction(0),) * 3


@pytest.mark.parametrize("u, v, total", [
    ((1, 2), (3, 4), (4, 6)),
    ((Fraction(1, 2), 0), (Fraction(1, 2), 1), (1, 1)),
])
def test_add_sub(u, v, total):
    u, v, total = lattice.vector(u), lattice.vector(v), lattice.vector(total)
    assert lattice.add(u, v) == total
    assert lattice.sub(total, v) == u


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        lattice.add(lattice.vector([1]), lattice.vector([1, 2]))
    with pytest.raises(ValueError):
        lattice.dot(lattice.vector([1]), lattice.vector([1, 2]))


def test_scale_neg_dot():
    v = lattice.vector([2, -3, Fraction(1, 2)])
    assert lattice.scale(Fraction(1, 2), v) == (1, Fraction(-3, 2), Fraction(1, 4))
    assert lattice.neg(v) == (-2, 3, Fraction(-1, 2))
    assert lattice.dot(v, v) == 4 + 9 + Fraction(1, 4)
    assert lattice.is_zero(lattice.sub(v, v))


def test_matrix_identity_and_mat_vec():
    eye = lattice.identity_matrix(3)
    v = lattice.vector([1, Fraction(2, 3), -5])
    assert lattice.mat_vec(eye, v) == v
    m = lattice.matrix([[0, 1], [1, 0]])
    assert lattice.mat_vec(m, lattice.vector([3, 7])) == (7, 3)


def test_mat_mul_and_transpose():
    a = lattice.matrix([[1, 2], [3, 4]])
    b = lattice.matrix([[0, 1], [1, 0]])
    assert lattice.mat_mul(a, b) == lattice.matrix([[2, 1], [4, 3]])
    assert lattice.transpose(a) == lattice.matrix([[1, 3], [2, 4]])


def test_invert_exact():
    m = lattice.matrix([[1, Fraction(1, 2)], [0, 2]])
    inv = lattice.invert(m)
    assert lattice.mat_mul(m, inv) == lattice.identity_matrix(2)
    assert lattice.mat_mul(inv, m) == lattice.identity_matrix(2)


def test_invert_singular():
    with pytest.raises(ValueError):
        lattice.invert(lattice.matrix([[1, 2], [2, 4]]))


def test_invert_random_matrices():
    rng = random.Random(7)
    built = 0
    while built < 20:
        n = rng.randint(1, 4)
        rows = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                 for _ in range(n)] for _ in range(n)]
        m = lattice.matrix(rows)
        try:
            inv = lattice.invert(m)
        except ValueError:
            continue
        assert lattice.mat_mul(m, inv) == lattice.identity_matrix(n)
        built += 1
