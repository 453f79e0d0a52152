"""Closed-form Hilbert functions attached to Veronese embeddings.

Covers the ambient Veronese variety itself, its divisors, finite point
sets on rational normal curves, and the sampling relation between a
subvariety of the embedding and its preimage.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInputError
from .macaulay import binom
from .sequences import HilbertSequence, Tail


@dataclass(frozen=True)
class Veronese:
    """The embedding of P^n by all degree-d monomials, landing in P^N."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 1:
            raise InvalidInputError("Veronese parameters need n >= 1 and d >= 1")

    @property
    def N(self) -> int:
        """Ambient projective dimension, C(n + d, d) - 1 (always recomputed)."""
        return binom(self.n + self.d, self.d) - 1


def veronese_hf(v: Veronese, t: int) -> int:
    """Hilbert function of the ambient Veronese variety: C(n + t*d, n)."""
    if t < 0:
        raise InvalidInputError("degree must be nonnegative")
    return binom(v.n + t * v.d, v.n)


def divisor_hf(v: Veronese, e: int, t: int) -> int:
    """Hilbert function of a divisor cut out by a degree-e hypersurface upstairs.

    Equals the ambient value C(n + dt, n) through t <= floor((e-1)/d) and
    C(n + dt, n) - C(n + dt - e, n) afterwards.
    """
    if e < 1:
        raise InvalidInputError("divisor degree parameter e must be >= 1")
    if t < 0:
        raise InvalidInputError("degree must be nonnegative")
    full = binom(v.n + v.d * t, v.n)
    if t <= (e - 1) // v.d:
        return full
    return full - binom(v.n + v.d * t - e, v.n)


def rnc_points_hf(d: int, s: int, t: int) -> int:
    """Hilbert function of s reduced points on the rational normal curve of degree d.

    dt + 1 until the points are resolved, then s.
    """
    if d < 1 or s < 1:
        raise InvalidInputError("rnc_points_hf needs d >= 1 and s >= 1")
    if t < 0:
        raise InvalidInputError("degree must be nonnegative")
    if t <= (s - 2) // d:
        return d * t + 1
    return s


def rnc_points_sequence(d: int, s: int) -> HilbertSequence:
    """The full constant-tail sequence of rnc_points_hf."""
    t2 = max((s - 2) // d + 1, 0)
    return HilbertSequence(tuple(rnc_points_hf(d, s, t) for t in range(t2 + 1)), Tail.CONSTANT)


def sample(k: HilbertSequence, step: int) -> HilbertSequence:
    """The sampled sequence h(t) = k(step * t); a constant tail is preserved.

    With an unspecified tail only the stored prefix is sampled.
    """
    if step < 1:
        raise InvalidInputError("sampling step must be >= 1")
    if k.tail is Tail.CONSTANT:
        # one index past the last stored value pins the constant tail
        t_max = (len(k.values) - 1 + step - 1) // step + 1
        vals = tuple(k.at(step * t) for t in range(t_max + 1))
        return HilbertSequence(vals, Tail.CONSTANT)
    t_max = (len(k.values) - 1) // step
    vals = tuple(k.at(step * t) for t in range(t_max + 1))
    return HilbertSequence(vals, Tail.UNSPECIFIED)
