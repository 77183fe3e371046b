"""Kostant partition function and its q-analog, computed exactly.

The q-analog P_q(xi) = sum_j c_j q^j counts the ways to write xi as a sum of
exactly j positive roots. The main path is a memoized recursion over the
positive roots in simple-root coordinates; partition_q_bruteforce is an
independent exhaustive search (different root order, no memo) kept as an
oracle and never merged with the main path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import HeightExceeded, NotInRootSpan
from .lattice import Vector
from .rootsystem import RootSystem, to_simple_root_coords

BRUTE_FORCE_MAX_HEIGHT = 30

CACHE_FORMAT = "weylalt-partition-cache"
CACHE_VERSION = 1


class QPolynomial:
    """Immutable polynomial in q with integer coefficients, dense and trimmed.

    Partition values have nonnegative coefficients; alternating sums go
    through the same type and may dip negative.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        trimmed = list(coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        object.__setattr__(self, "coeffs", tuple(trimmed))

    def __setattr__(self, *args):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> "QPolynomial":
        if power < 0:
            raise ValueError("negative power")
        return cls((0,) * power + (coefficient,))

    @classmethod
    def geometric(cls, low: int, high: int) -> "QPolynomial":
        """q^low + q^(low+1) + ... + q^high; zero when the range is empty."""
        if high < low:
            return cls()
        return cls((0,) * low + (1,) * (high - low + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if self.is_zero or other.is_zero:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    def __pow__(self, n: int) -> "QPolynomial":
        if n < 0:
            raise ValueError("negative exponent")
        result = QPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q^k."""
        if self.is_zero:
            return self
        return QPolynomial((0,) * k + self.coeffs)

    def scale(self, c: int) -> "QPolynomial":
        return QPolynomial(tuple(c * x for x in self.coeffs))

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            elif power == 1:
                body = "q" if mag == 1 else f"{mag}q"
            else:
                body = f"q^{power}" if mag == 1 else f"{mag}q^{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPolynomial({self.coeffs!r})"


@dataclass
class PartitionCache:
    """Memo table for one root system's partition recursion.

    Keys are (remaining simple-root coordinates, next root index); values are
    coefficient tuples. Entries are immutable once written and the recursion
    is deterministic, so concurrent readers and writers at worst repeat work.
    max_entries caps the table; past it, values are computed but not stored.
    """

    type_label: str
    rank: int
    max_entries: int | None = None
    table: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.table)

    def matches(self, rs: RootSystem) -> bool:
        return self.type_label == rs.type_label and self.rank == rs.rank

    def save(self, path) -> None:
        entries = sorted(
            [list(coords), index, list(coeffs)]
            for (coords, index), coeffs in self.table.items()
        )
        payload = {
            "format": CACHE_FORMAT,
            "version": CACHE_VERSION,
            "type": self.type_label,
            "rank": self.rank,
            "entries": entries,
        }
        with open(path, "w", encoding="ascii") as handle:
            json.dump(payload, handle, separators=(",", ":"), sort_keys=True)
            handle.write("\n")

    @classmethod
    def load(cls, path) -> "PartitionCache":
        with open(path, encoding="ascii") as handle:
            payload = json.load(handle)
        if payload.get("format") != CACHE_FORMAT or payload.get("version") != CACHE_VERSION:
            raise ValueError(f"{path}: not a version-{CACHE_VERSION} partition cache")
        cache = cls(type_label=payload["type"], rank=int(payload["rank"]))
        for coords, index, coeffs in payload["entries"]:
            cache.table[(tuple(int(c) for c in coords), int(index))] = tuple(
                int(c) for c in coeffs)
        return cache


_DEFAULT_CACHES: dict[tuple[str, int], PartitionCache] = {}


def default_cache(rs: RootSystem) -> PartitionCache:
    key = (rs.type_label, rs.rank)
    cache = _DEFAULT_CACHES.get(key)
    if cache is None:
        cache = _DEFAULT_CACHES.setdefault(key, PartitionCache(rs.type_label, rs.rank))
    return cache


def set_default_cache(rs: RootSystem, cache: PartitionCache) -> None:
    if not cache.matches(rs):
        raise ValueError(f"cache is for {cache.type_label}{cache.rank}, not {rs}")
    _DEFAULT_CACHES[(rs.type_label, rs.rank)] = cache


def _validated_alpha_coords(xi: Vector, rs: RootSystem) -> tuple[int, ...] | None:
    """Simple-root coordinates as ints, or None when P_q(xi) is trivially zero."""
    try:
        coords = to_simple_root_coords(xi, rs)
    except NotInRootSpan:
        return None
    if any(c.denominator != 1 or c < 0 for c in coords):
        return None
    return tuple(int(c) for c in coords)


def _recurse(target: tuple[int, ...], index: int,
             roots: Sequence[tuple[int, ...]],
             cache: PartitionCache | None) -> tuple[int, ...]:
    if not any(target):
        return (1,)
    if index == len(roots):
        return ()
    key = (target, index)
    if cache is not None:
        hit = cache.table.get(key)
        if hit is not None:
            return hit
    acc = list(_recurse(target, index + 1, roots, cache))
    root = roots[index]
    current = target
    multiplicity = 0
    while True:
        reduced = tuple(a - b for a, b in zip(current, root))
        if any(c < 0 for c in reduced):
            break
        multiplicity += 1
        sub = _recurse(reduced, index + 1, roots, cache)
        need = multiplicity + len(sub)
        if len(acc) < need:
            acc.extend([0] * (need - len(acc)))
        for power, c in enumerate(sub):
            acc[multiplicity + power] += c
        current = reduced
    while acc and acc[-1] == 0:
        acc.pop()
    result = tuple(acc)
    if cache is not None and (cache.max_entries is None or len(cache.table) < cache.max_entries):
        cache.table[key] = result
    return result


def partition_q_alpha(coords: Sequence[int], rs: RootSystem,
                      cache: PartitionCache | None = None) -> QPolynomial:
    """P_q for a vector given directly by simple-root coordinates."""
    if len(coords) != rs.rank:
        raise ValueError(f"expected {rs.rank} coordinates, got {len(coords)}")
    if any(c != int(c) for c in coords):
        return QPolynomial.zero()
    coords = tuple(int(c) for c in coords)
    if any(c < 0 for c in coords):
        return QPolynomial.zero()
    if cache is None:
        cache = default_cache(rs)
    return QPolynomial(_recurse(coords, 0, rs.positive_root_alpha_coords, cache))


def partition_q(xi: Vector, rs: RootSystem,
                cache: PartitionCache | None = None,
                root_order: Sequence[int] | None = None) -> QPolynomial:
    """q-analog of the Kostant partition function of an ambient vector.

    Vectors outside the nonnegative integer span come back as the zero
    polynomial. root_order permutes the recursion's root list (the result
    must not depend on it); a permuted order bypasses the shared cache.
    """
    coords = _validated_alpha_coords(xi, rs)
    if coords is None:
        return QPolynomial.zero()
    if root_order is not None:
        roots = tuple(rs.positive_root_alpha_coords[i] for i in root_order)
        if sorted(roots) != sorted(rs.positive_root_alpha_coords):
            raise ValueError("root_order must be a permutation of the positive roots")
        return QPolynomial(_recurse(coords, 0, roots, None))
    return partition_q_alpha(coords, rs, cache)


def partition(xi: Vector, rs: RootSystem,
              cache: PartitionCache | None = None) -> int:
    """Plain Kostant partition function: P_q evaluated at q = 1."""
    return partition_q(xi, rs, cache).evaluate(1)


def partition_q_bruteforce(xi: Vector, rs: RootSystem) -> QPolynomial:
    """Independent oracle: exhaustively enumerate every decomposition.

    Same contract as partition_q but no memoization and the roots visited in
    reversed order; HeightExceeded for inputs of height above
    BRUTE_FORCE_MAX_HEIGHT since the search tree is unbounded otherwise.
    """
    coords = _validated_alpha_coords(xi, rs)
    if coords is None:
        return QPolynomial.zero()
    if sum(coords) > BRUTE_FORCE_MAX_HEIGHT:
        raise HeightExceeded(
            f"height {sum(coords)} exceeds brute-force bound {BRUTE_FORCE_MAX_HEIGHT}")
    roots = tuple(reversed(rs.positive_root_alpha_coords))
    counts: dict[int, int] = {}

    def explore(index: int, remaining: tuple[int, ...], parts: int) -> None:
        if index == len(roots):
            if not any(remaining):
                counts[parts] = counts.get(parts, 0) + 1
            return
        root = roots[index]
        current = remaining
        used = 0
        while True:
            explore(index + 1, current, parts + used)
            reduced = tuple(a - b for a, b in zip(current, root))
            if any(c < 0 for c in reduced):
                break
            current = reduced
            used += 1

    explore(0, coords, 0)
    if not counts:
        return QPolynomial.zero()
    coeffs = [0] * (max(counts) + 1)
    for parts, ways in counts.items():
        coeffs[parts] = ways
    return QPolynomial(coeffs)
