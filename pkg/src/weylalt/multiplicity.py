"""Weyl alternation sets, Kostant multiplicities and their q-analogs.

m(lambda, mu) = sum over sigma in W of (-1)^l(sigma) P(sigma(lambda+rho) - (mu+rho)),
and the q-analog replaces P by P_q. A term survives iff its argument has
nonnegative integer coordinates in the simple roots (simple roots are
themselves positive roots, so the coordinate test is exact); the set of
surviving sigma is the Weyl alternation set, and the sums run over it alone.

For types A and B the survivors are found without touching the rest of the
group: sigma(lambda+rho) ranges over the (signed) permutations of a vector
with distinct nonzero entries, and the coordinate test is a chain of prefix
conditions, so a depth-first search over positions with prefix pruning visits
only a sliver of the group. Other types enumerate W and filter.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import lattice
from .combinatorics import binomial, nonconsecutive_subsets
from .errors import CapExceeded, NotInRootSpan
from .kostant import PartitionCache, QPolynomial, partition_q_alpha
from .lattice import Vector
from .rootsystem import RootSystem, is_dominant_integral, to_simple_root_coords
from .weyl import (DEFAULT_CAP, WeylElement, element_from_matrix,
                   enumerate_group, group_order)


@dataclass(frozen=True)
class AlternationSet:
    """The sigma with P(sigma(lambda+rho) - (mu+rho)) > 0, as full elements."""

    lam: Vector
    mu: Vector
    elements: frozenset[WeylElement]

    def __len__(self) -> int:
        return len(self.elements)

    def words(self) -> list[tuple[int, ...]]:
        return sorted(w.word for w in self.elements)


@dataclass(frozen=True)
class WeightDiagramEntry:
    weight: Vector
    multiplicity: int


def _check_cap(rs: RootSystem, cap: int) -> None:
    order = group_order(rs)
    if order > cap:
        raise CapExceeded(f"|W({rs})| = {order} exceeds cap {cap}")


def _survivor_terms_fast(lam: Vector, mu: Vector, rs: RootSystem):
    """DFS over (signed) permutation images for types A and B.

    Returns a list of (element, xi alpha-coordinates) or None when the fast
    path does not apply (other types, or lambda+rho with repeated or, for B,
    zero absolute values, where images stop being in bijection with W).
    """
    if rs.type_label not in ("A", "B"):
        return None
    target = lattice.add(lam, rs.rho)
    shift = lattice.add(mu, rs.rho)
    signed = rs.type_label == "B"
    if signed:
        magnitudes = [abs(t) for t in target]
        if 0 in magnitudes or len(set(magnitudes)) != len(magnitudes):
            return None
    elif len(set(target)) != len(target):
        return None

    scale = lcm(*(f.denominator for f in target + shift))
    t_int = [int(f * scale) for f in target]
    s_int = [int(f * scale) for f in shift]
    dim = rs.ambient_dim
    if not signed and sum(t_int) != sum(s_int):
        return []  # xi never lands in the root lattice

    survivors = []
    used = [False] * dim
    assignment = [0] * dim  # position k holds +-(source index + 1)
    coords = []

    def rec(k: int, prefix: int) -> None:
        if k == dim:
            matrix = [[Fraction(0)] * dim for _ in range(dim)]
            for pos, signed_source in enumerate(assignment):
                source = abs(signed_source) - 1
                matrix[pos][source] = Fraction(1 if signed_source > 0 else -1)
            element = element_from_matrix(tuple(tuple(row) for row in matrix), rs)
            survivors.append((element, tuple(coords)))
            return
        s_k = s_int[k]
        track = k < rs.rank  # A_r has one trailing coordinate beyond the rank
        for j in range(dim):
            if used[j]:
                continue
            for sign in (1, -1) if signed else (1,):
                p = prefix + sign * t_int[j] - s_k
                if track and (p < 0 or p % scale):
                    continue
                used[j] = True
                assignment[k] = sign * (j + 1)
                if track:
                    coords.append(p // scale)
                rec(k + 1, p)
                if track:
                    coords.pop()
                used[j] = False

    rec(0, 0)
    return survivors


def _survivor_terms_generic(lam: Vector, mu: Vector, rs: RootSystem, cap: int):
    target = lattice.add(lam, rs.rho)
    shift = lattice.add(mu, rs.rho)
    survivors = []
    for element in enumerate_group(rs, cap):
        xi = lattice.sub(element.act(target), shift)
        try:
            coords = to_simple_root_coords(xi, rs)
        except NotInRootSpan:
            continue
        if all(c >= 0 and c.denominator == 1 for c in coords):
            survivors.append((element, tuple(int(c) for c in coords)))
    return survivors


def _survivor_terms(lam: Vector, mu: Vector, rs: RootSystem, cap: int):
    _check_cap(rs, cap)
    terms = _survivor_terms_fast(lam, mu, rs)
    if terms is None:
        terms = _survivor_terms_generic(lam, mu, rs, cap)
    return terms


def alternation_set(lam: Vector, mu: Vector, rs: RootSystem,
                    cap: int = DEFAULT_CAP) -> AlternationSet:
    """The Weyl alternation set of (lambda, mu)."""
    terms = _survivor_terms(lam, mu, rs, cap)
    return AlternationSet(lam, mu, frozenset(element for element, _ in terms))


def _sum_terms(terms, cache: PartitionCache | None, rs: RootSystem,
               threads: int) -> QPolynomial:
    def contribution(chunk) -> QPolynomial:
        total = QPolynomial.zero()
        for element, coords in chunk:
            value = partition_q_alpha(coords, rs, cache)
            if element.length % 2:
                value = -value
            total = total + value
        return total

    if threads <= 1 or len(terms) < 2:
        return contribution(terms)
    chunks = [terms[i::threads] for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        partials = list(pool.map(contribution, chunks))
    total = QPolynomial.zero()
    for part in partials:  # fixed reduction order keeps output deterministic
        total = total + part
    return total


def q_multiplicity(lam: Vector, mu: Vector, rs: RootSystem,
                   cap: int = DEFAULT_CAP, threads: int = 1,
                   cache: PartitionCache | None = None) -> QPolynomial:
    """Alternating sum of P_q over the alternation set; may have negative
    coefficients term by term, returned as computed."""
    terms = _survivor_terms(lam, mu, rs, cap)
    return _sum_terms(terms, cache, rs, threads)


def multiplicity(lam: Vector, mu: Vector, rs: RootSystem,
                 cap: int = DEFAULT_CAP, threads: int = 1,
                 cache: PartitionCache | None = None) -> int:
    """Kostant weight multiplicity m(lambda, mu)."""
    return q_multiplicity(lam, mu, rs, cap, threads, cache).evaluate(1)


def q_multiplicity_terms(lam: Vector, mu: Vector, rs: RootSystem,
                         cap: int = DEFAULT_CAP,
                         cache: PartitionCache | None = None
                         ) -> list[tuple[WeylElement, QPolynomial]]:
    """Per-element P_q values over the alternation set, sign not applied."""
    terms = _survivor_terms(lam, mu, rs, cap)
    return sorted(
        ((element, partition_q_alpha(coords, rs, cache)) for element, coords in terms),
        key=lambda pair: (pair[0].length, pair[0].word),
    )


def weight_diagram(lam: Vector, rs: RootSystem,
                   cap: int = DEFAULT_CAP) -> list[WeightDiagramEntry]:
    """All weights of the irreducible module of highest weight lambda.

    Walk downward from lambda by positive-root steps, keeping the nodes of
    positive multiplicity; every weight is reachable through such nodes, so
    the zero-multiplicity pruning loses nothing and bounds the walk.
    """
    if not is_dominant_integral(lam, rs):
        raise ValueError(f"{lam} is not a dominant integral weight of {rs}")
    found: dict[Vector, int] = {lam: multiplicity(lam, lam, rs, cap)}
    frontier = [lam]
    while frontier:
        new_frontier = []
        for weight in frontier:
            for root in rs.positive_roots:
                candidate = lattice.sub(weight, root)
                if candidate in found:
                    continue
                m = multiplicity(lam, candidate, rs, cap)
                found[candidate] = m
                if m > 0:
                    new_frontier.append(candidate)
        frontier = new_frontier
    return [WeightDiagramEntry(weight, m)
            for weight, m in sorted(found.items()) if m > 0]


def predicted_alternation_set_B(r: int) -> set[tuple[int, ...]]:
    """Alternation set of (omega_1, 0) for B_r as reduced words: products of
    commuting s_i over nonconsecutive index sets inside {2..r}."""
    if r < 2:
        raise ValueError(f"type B needs rank >= 2, got {r}")
    return set(nonconsecutive_subsets(2, r))


def predicted_pq_B(indices: tuple[int, ...], r: int) -> QPolynomial:
    """Closed form of P_q(sigma(omega_1+rho) - rho) for sigma the commuting
    product over a nonconsecutive index set inside {2..r}.

    k counts the reflections other than s_r: q^(1+k) (1+q)^(r-1-2k) without
    s_r, and q^(1+k) (1+q)^(r-2-2k) with it.
    """
    index_set = set(indices)
    if index_set and not index_set <= set(range(2, r + 1)):
        raise ValueError(f"indices {indices} not inside 2..{r}")
    if any(i + 1 in index_set for i in index_set):
        raise ValueError(f"indices {indices} contain a consecutive pair")
    has_sr = r in index_set
    k = len(index_set) - (1 if has_sr else 0)
    exponent = (r - 2 - 2 * k) if has_sr else (r - 1 - 2 * k)
    if exponent < 0:
        raise ValueError(f"indices {indices} impossible for rank {r}")
    return QPolynomial((1, 1)) ** exponent * QPolynomial.monomial(1 + k)


def predicted_count_by_length_B(r: int, k: int, has_sr: bool) -> int:
    """How many alternation-set elements have k reflections besides s_r."""
    if has_sr:
        return binomial(r - 2 - k, k)
    return binomial(r - 1 - k, k)
