"""Weyl group elements as exact orthogonal matrices with reduced-word bookkeeping.

Elements carry their lexicographically least reduced word. Breadth-first
enumeration (frontier in word order, generators ascending) discovers exactly
that word for every element, and the greedy smallest-left-descent walk
reproduces it from a bare matrix, so both construction paths agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import lattice
from .errors import CapExceeded
from .lattice import Matrix, Vector
from .rootsystem import RootSystem

DEFAULT_CAP = 2_000_000


@dataclass(frozen=True, eq=False)
class WeylElement:
    """One group element; equality and hashing go by the matrix alone."""

    matrix: Matrix
    word: tuple[int, ...]
    signed_perm: tuple[int, ...] | None = None

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    def act(self, v: Vector) -> Vector:
        """Apply the element to an ambient vector."""
        if self.signed_perm is not None:
            out = [Fraction(0)] * len(self.signed_perm)
            for i, image in enumerate(self.signed_perm):
                if image > 0:
                    out[image - 1] = v[i]
                else:
                    out[-image - 1] = -v[i]
            return tuple(out)
        return lattice.mat_vec(self.matrix, v)

    def __str__(self) -> str:
        return "e" if not self.word else "*".join(f"s{i}" for i in self.word)


def act(w: WeylElement, v: Vector) -> Vector:
    return w.act(v)


def group_order(rs: RootSystem) -> int:
    r = rs.rank
    return {
        "A": math.factorial(r + 1),
        "B": 2**r * math.factorial(r),
        "C": 2**r * math.factorial(r),
        "D": 2 ** (r - 1) * math.factorial(r),
        "G2": 12,
        "F4": 1152,
        "E6": 51840,
        "E7": 2903040,
        "E8": 696729600,
    }[rs.type_label]


def _signed_perm_of(matrix: Matrix) -> tuple[int, ...] | None:
    """Signed-permutation encoding (column i maps to +-row), or None."""
    n = len(matrix)
    perm = []
    for col in range(n):
        hit = 0
        for row in range(n):
            entry = matrix[row][col]
            if entry == 0:
                continue
            if entry not in (1, -1) or hit:
                return None
            hit = (row + 1) if entry == 1 else -(row + 1)
        if not hit:
            return None
        perm.append(hit)
    return tuple(perm)


def _reflection_matrix(alpha: Vector) -> Matrix:
    norm = lattice.dot(alpha, alpha)
    n = len(alpha)
    return tuple(
        tuple(
            (Fraction(1) if a == b else Fraction(0)) - 2 * alpha[a] * alpha[b] / norm
            for b in range(n)
        )
        for a in range(n)
    )


def identity_element(rs: RootSystem) -> WeylElement:
    m = lattice.identity_matrix(rs.ambient_dim)
    return WeylElement(m, (), _signed_perm_of(m))


def simple_reflection(i: int, rs: RootSystem) -> WeylElement:
    """Reflection s_i in the simple root alpha_i, 1-based."""
    if not 1 <= i <= rs.rank:
        raise ValueError(f"reflection index {i} out of range for {rs}")
    m = _reflection_matrix(rs.simple_roots[i - 1])
    return WeylElement(m, (i,), _signed_perm_of(m))


def coxeter_order(rs: RootSystem, i: int, j: int) -> int:
    """Order of s_i s_j from the Cartan matrix (1-based indices)."""
    if i == j:
        return 1
    product = rs.cartan_matrix[i - 1][j - 1] * rs.cartan_matrix[j - 1][i - 1]
    return {0: 2, 1: 3, 2: 4, 3: 6}[product]


_GENERATOR_CACHE: dict[tuple[str, int], tuple[WeylElement, ...]] = {}


def generators(rs: RootSystem) -> tuple[WeylElement, ...]:
    """Simple reflections s_1..s_r, Coxeter relations verified on first build."""
    key = (rs.type_label, rs.rank)
    cached = _GENERATOR_CACHE.get(key)
    if cached is not None:
        return cached
    gens = tuple(simple_reflection(i, rs) for i in range(1, rs.rank + 1))
    ident = lattice.identity_matrix(rs.ambient_dim)
    for i, g in enumerate(gens, start=1):
        if lattice.mat_mul(g.matrix, g.matrix) != ident:
            raise RuntimeError(f"{rs}: s_{i} is not an involution")
    for i in range(1, rs.rank + 1):
        for j in range(i + 1, rs.rank + 1):
            m = coxeter_order(rs, i, j)
            prod = lattice.mat_mul(gens[i - 1].matrix, gens[j - 1].matrix)
            power = prod
            for _ in range(m - 1):
                power = lattice.mat_mul(power, prod)
            if power != ident:
                raise RuntimeError(f"{rs}: braid relation for (s_{i}, s_{j}) failed")
    _GENERATOR_CACHE[key] = gens
    return gens


def enumerate_group(rs: RootSystem, cap: int = DEFAULT_CAP) -> Iterator[WeylElement]:
    """Yield every element once, in nondecreasing length, words lex-least.

    Raises CapExceeded up front when the group order surpasses cap; the
    default cap keeps E7/E8 from being enumerated by accident.
    """
    order = group_order(rs)
    if order > cap:
        raise CapExceeded(f"|W({rs})| = {order} exceeds cap {cap}")
    gens = generators(rs)
    ident = identity_element(rs)
    seen = {ident.matrix}
    frontier = [ident]
    yield ident
    while frontier:
        new_frontier = []
        for w in frontier:
            for g in gens:
                m = lattice.mat_mul(w.matrix, g.matrix)
                if m in seen:
                    continue
                seen.add(m)
                element = WeylElement(m, w.word + g.word, _signed_perm_of(m))
                new_frontier.append(element)
                yield element
        frontier = new_frontier


def inversion_length(w: WeylElement, rs: RootSystem) -> int:
    """Number of positive roots sent negative; equals len(w.word)."""
    positives = set(rs.positive_roots)
    return sum(1 for alpha in rs.positive_roots if w.act(alpha) not in positives)


def reduced_word_from_matrix(matrix: Matrix, rs: RootSystem) -> tuple[int, ...]:
    """Lex-least reduced word of the element with this matrix.

    Greedy: repeatedly strip the smallest left descent, i.e. the smallest i
    with u^-1(alpha_i) negative. Weyl matrices are orthogonal, so u^-1 is the
    transpose.
    """
    gens = generators(rs)
    positives = set(rs.positive_roots)
    ident = lattice.identity_matrix(rs.ambient_dim)
    word = []
    current = matrix
    while current != ident:
        inverse = lattice.transpose(current)
        for i in range(1, rs.rank + 1):
            if lattice.mat_vec(inverse, rs.simple_roots[i - 1]) not in positives:
                word.append(i)
                current = lattice.mat_mul(gens[i - 1].matrix, current)
                break
        else:
            raise RuntimeError(f"{rs}: matrix is not a Weyl group element")
    return tuple(word)


def element_from_matrix(matrix: Matrix, rs: RootSystem) -> WeylElement:
    return WeylElement(matrix, reduced_word_from_matrix(matrix, rs),
                       _signed_perm_of(matrix))


def orbit(v: Vector, rs: RootSystem) -> frozenset[Vector]:
    """Weyl orbit of an ambient vector (closure under simple reflections)."""
    gens = generators(rs)
    seen = {v}
    frontier = [v]
    while frontier:
        new_frontier = []
        for u in frontier:
            for g in gens:
                image = g.act(u)
                if image not in seen:
                    seen.add(image)
                    new_frontier.append(image)
        frontier = new_frontier
    return frozenset(seen)
