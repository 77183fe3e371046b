"""Fibonacci numbers, nonconsecutive index subsets, and the alternating
binomial identities behind the q-multiplicity collapse."""

from __future__ import annotations

import math
from typing import Iterator

from .kostant import QPolynomial

_fib = [0, 1, 1]


def fibonacci(n: int) -> int:
    """F_n with F_1 = F_2 = 1; results are cached."""
    if n < 1:
        raise ValueError(f"fibonacci index must be >= 1, got {n}")
    while len(_fib) <= n:
        _fib.append(_fib[-1] + _fib[-2])
    return _fib[n]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n (negative n included)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def nonconsecutive_subsets(lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """All subsets of {lo..hi} with no two consecutive members, as sorted
    tuples, the empty set included. For hi < lo only the empty set comes out.
    There are F_(hi-lo+3) of them.
    """

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        if start > hi:
            yield ()
            return
        for rest in rec(start + 1):
            yield rest
        for rest in rec(start + 2):
            yield (start,) + rest

    return rec(lo)


def verify_alternating_identity(r: int) -> bool:
    """Check both exponent-collapse identities for the given rank, exactly.

    sum_k (-1)^k C(r-1-k, k) q^(1+k) (1+q)^(r-1-2k) = q + ... + q^r, and the
    companion with parameter r-2 and opposite signs equals -(q + ... + q^(r-1)).
    """
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    one_plus_q = QPolynomial((1, 1))

    lhs1 = QPolynomial.zero()
    for k in range((r - 1) // 2 + 1):
        term = one_plus_q ** (r - 1 - 2 * k)
        term = term.scale(binomial(r - 1 - k, k) * (-1) ** k)
        lhs1 = lhs1 + term.shift(1 + k)
    if lhs1 != QPolynomial.geometric(1, r):
        return False

    lhs2 = QPolynomial.zero()
    for k in range((r - 2) // 2 + 1):
        term = one_plus_q ** (r - 2 - 2 * k)
        term = term.scale(binomial(r - 2 - k, k) * (-1) ** (1 + k))
        lhs2 = lhs2 + term.shift(1 + k)
    return lhs2 == -QPolynomial.geometric(1, r - 1)
