"""Binomial arithmetic, t-binomial expansions and Macaulay growth bounds.

Everything here is exact arbitrary-precision integer arithmetic.  These
functions underpin every growth check in the package, so no float ever
enters (or leaves) this module.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInputError


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); returns 0 when k > n."""
    if n < 0 or k < 0:
        raise InvalidInputError(f"binom requires nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


@dataclass(frozen=True)
class BinomialExpansion:
    """The unique greedy expansion c = C(m_t, t) + C(m_{t-1}, t-1) + ... + C(m_j, j).

    ``terms`` lists the pairs (m_i, i) with i descending.  The tops are
    strictly decreasing and m_i >= i >= 1 for every term.
    """

    value: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prev_m, prev_i = None, None
        for m, i in self.terms:
            if not (m >= i >= 1):
                raise InvalidInputError(f"bad expansion term ({m}, {i})")
            if prev_m is not None and not (m < prev_m and i == prev_i - 1):
                raise InvalidInputError("expansion terms must descend strictly")
            prev_m, prev_i = m, i
        if sum(binom(m, i) for m, i in self.terms) != self.value:
            raise InvalidInputError("expansion terms do not sum to the value")

    def shifted_sum(self, top_shift: int, index_shift: int) -> int:
        """Sum of C(m_i + top_shift, i + index_shift) over all terms."""
        return sum(binom(m + top_shift, i + index_shift) for m, i in self.terms)


def _largest_top(c: int, i: int) -> int:
    """Largest m with C(m, i) <= c, for c >= 1 and i >= 1."""
    lo = i  # C(i, i) = 1 <= c
    hi = i + 1
    while binom(hi, i) <= c:
        lo, hi = hi, 2 * hi
    # invariant: C(lo, i) <= c < C(hi, i)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binom(mid, i) <= c:
            lo = mid
        else:
            hi = mid
    return lo


def binomial_expansion(c: int, t: int) -> BinomialExpansion:
    """The greedy t-binomial expansion of c >= 1 with leading index t >= 1."""
    if c < 1:
        raise InvalidInputError(f"t-binomial expansion undefined for c = {c}")
    if t < 1:
        raise InvalidInputError(f"t-binomial expansion needs t >= 1, got {t}")
    terms: list[tuple[int, int]] = []
    rem, i = c, t
    while rem > 0:
        m = _largest_top(rem, i)
        terms.append((m, i))
        rem -= binom(m, i)
        i -= 1
    return BinomialExpansion(c, tuple(terms))


@lru_cache(maxsize=None)
def macaulay_growth(c: int, t: int) -> int:
    """Macaulay's upper bound c^<t> for the next value of an O-sequence.

    Shifts every term of the t-binomial expansion by (1, 1).  By
    convention 0^<t> = 0.
    """
    if t < 1:
        raise InvalidInputError(f"macaulay_growth needs t >= 1, got {t}")
    if c < 0:
        raise InvalidInputError(f"macaulay_growth needs c >= 0, got {c}")
    if c == 0:
        return 0
    return binomial_expansion(c, t).shifted_sum(1, 1)


def macaulay_multi_step_bound(c: int, t: int, steps: int) -> int:
    """Largest possible Hilbert function value at degree t + steps given value c at degree t.

    Every expansion term is shifted by (steps, steps); for steps = 1 this
    is exactly ``macaulay_growth``.
    """
    if t < 1 or steps < 1:
        raise InvalidInputError("macaulay_multi_step_bound needs t >= 1 and steps >= 1")
    if c < 0:
        raise InvalidInputError(f"macaulay_multi_step_bound needs c >= 0, got {c}")
    if c == 0:
        return 0
    return binomial_expansion(c, t).shifted_sum(steps, steps)
