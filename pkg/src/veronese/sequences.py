"""Candidate Hilbert functions and their first differences.

Two small value types carry every sequence in the package.  A
``HilbertSequence`` stores a finite prefix of values h(0), h(1), ... plus a
declared tail: ``constant`` (the last stored value repeats forever, the
shape of a finite point set) or ``unspecified`` (nothing is claimed beyond
the stored prefix, the shape of a positive-dimensional variety).  A
``DeltaSequence`` is a first difference, with tail ``zero`` or
``unspecified``.

Point-set deciders only accept constant tails; sequences with unspecified
tails are refused rather than silently truncated.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidInputError
from .macaulay import macaulay_growth


class Tail(str, Enum):
    CONSTANT = "constant"
    ZERO = "zero"
    UNSPECIFIED = "unspecified"


@dataclass(frozen=True)
class HilbertSequence:
    """Values h(0), h(1), ..., h(T) plus a declared tail mode.

    Constant-tail sequences are normalized on construction: trailing
    values equal to their predecessor are dropped, so two sequences are
    equal exactly when they agree at every index.
    """

    values: tuple[int, ...]
    tail: Tail = Tail.CONSTANT

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise InvalidInputError("a sequence needs at least one stored value")
        if any(v < 0 for v in vals):
            raise InvalidInputError("Hilbert function values must be nonnegative")
        if self.tail not in (Tail.CONSTANT, Tail.UNSPECIFIED):
            raise InvalidInputError("a Hilbert sequence tail is constant or unspecified")
        if self.tail is Tail.CONSTANT:
            k = len(vals)
            while k >= 2 and vals[k - 1] == vals[k - 2]:
                k -= 1
            vals = vals[:k]
        object.__setattr__(self, "values", vals)

    def at(self, t: int) -> int:
        if t < 0:
            return 0
        if t < len(self.values):
            return self.values[t]
        if self.tail is Tail.CONSTANT:
            return self.values[-1]
        raise InvalidInputError(f"index {t} is past the stored prefix of an unspecified-tail sequence")

    @property
    def last(self) -> int:
        return self.values[-1]

    def first_difference(self) -> DeltaSequence:
        deltas = tuple(self.at(t) - self.at(t - 1) for t in range(len(self.values)))
        tail = Tail.ZERO if self.tail is Tail.CONSTANT else Tail.UNSPECIFIED
        return DeltaSequence(deltas, tail)

    def to_json_obj(self) -> dict:
        return {"values": list(self.values), "tail": self.tail.value}

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: object) -> "HilbertSequence":
        values, tail = _parse_sequence_obj(obj)
        return cls(values, tail)

    @classmethod
    def loads(cls, text: str) -> "HilbertSequence":
        return cls.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class DeltaSequence:
    """A first-difference sequence; tail ``zero`` means all later values vanish."""

    values: tuple[int, ...]
    tail: Tail = Tail.ZERO

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if not vals:
            raise InvalidInputError("a sequence needs at least one stored value")
        if self.tail not in (Tail.ZERO, Tail.UNSPECIFIED):
            raise InvalidInputError("a difference sequence tail is zero or unspecified")
        if self.tail is Tail.ZERO:
            k = len(vals)
            while k >= 2 and vals[k - 1] == 0:
                k -= 1
            vals = vals[:k]
        object.__setattr__(self, "values", vals)

    def at(self, t: int) -> int:
        if t < 0:
            return 0
        if t < len(self.values):
            return self.values[t]
        if self.tail is Tail.ZERO:
            return 0
        raise InvalidInputError(f"index {t} is past the stored prefix of an unspecified-tail sequence")

    def total(self) -> int:
        """Sum of all values; for a valid point-set difference, the point count."""
        if self.tail is not Tail.ZERO:
            raise InvalidInputError("total is only defined for zero-tail differences")
        return sum(self.values)

    def prefix_sums(self) -> HilbertSequence:
        sums: list[int] = []
        acc = 0
        for v in self.values:
            acc += v
            sums.append(acc)
        tail = Tail.CONSTANT if self.tail is Tail.ZERO else Tail.UNSPECIFIED
        return HilbertSequence(tuple(sums), tail)

    def to_json_obj(self) -> dict:
        return {"values": list(self.values), "tail": self.tail.value}

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: object) -> "DeltaSequence":
        values, tail = _parse_sequence_obj(obj)
        return cls(values, tail)

    @classmethod
    def loads(cls, text: str) -> "DeltaSequence":
        return cls.from_json_obj(json.loads(text))


def _parse_sequence_obj(obj: object) -> tuple[tuple[int, ...], Tail]:
    if not isinstance(obj, dict):
        raise InvalidInputError("sequence object must be a JSON object")
    extra = set(obj) - {"values", "tail"}
    if extra:
        raise InvalidInputError(f"unknown sequence fields: {sorted(extra)}")
    raw = obj.get("values")
    if not isinstance(raw, list) or not raw:
        raise InvalidInputError("'values' must be a nonempty array of integers")
    values: list[int] = []
    for v in raw:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidInputError(f"sequence value {v!r} is not an integer")
        values.append(v)
    tag = obj.get("tail")
    try:
        tail = Tail(tag)
    except ValueError:
        raise InvalidInputError(f"unknown tail {tag!r}") from None
    return tuple(values), tail


def first_difference(h: HilbertSequence) -> DeltaSequence:
    """Delta(t) = h(t) - h(t-1) with h(-1) = 0; constant tail maps to zero tail."""
    return h.first_difference()


def _raw_values(s) -> tuple[int, ...]:
    if isinstance(s, (HilbertSequence, DeltaSequence)):
        return s.values
    return tuple(int(v) for v in s)


def is_o_sequence(s) -> bool:
    """True iff s(0) = 1 and s(t+1) <= s(t)^<t> for every stored t >= 1.

    Accepts a plain iterable of integers or either sequence type; a
    declared constant or zero tail never violates growth once the stored
    prefix passes, so checking the prefix is enough.
    """
    vals = _raw_values(s)
    if not vals or vals[0] != 1:
        return False
    if any(v < 0 for v in vals):
        return False
    for t in range(1, len(vals) - 1):
        if vals[t + 1] > macaulay_growth(vals[t], t):
            return False
    return True


def is_differentiable_o_sequence(s) -> bool:
    """True iff s and its first difference are both O-sequences."""
    vals = _raw_values(s)
    if not is_o_sequence(vals):
        return False
    deltas = [vals[0]] + [vals[t] - vals[t - 1] for t in range(1, len(vals))]
    return is_o_sequence(deltas)


def is_plane_points_difference(delta: DeltaSequence) -> bool:
    """Whether delta is the first difference of some reduced point set in the plane.

    The admissible shapes: a ramp delta(t) = t + 1 up to some t', then a
    non-increasing tail that eventually reaches zero, with delta(t) <= t + 1
    everywhere.
    """
    if delta.tail is not Tail.ZERO:
        raise InvalidInputError("plane point differences must have a zero tail")
    vals = delta.values
    if vals[0] != 1:
        return False
    if any(v < 0 for v in vals):
        return False
    if any(vals[t] > t + 1 for t in range(len(vals))):
        return False
    ramp_end = 0  # largest t with vals[tau] = tau + 1 for all tau <= t
    while ramp_end + 1 < len(vals) and vals[ramp_end + 1] == ramp_end + 2:
        ramp_end += 1
    for t in range(ramp_end + 1, len(vals) - 1):
        if vals[t] < vals[t + 1]:
            return False
    return True


def is_step_sampled(
    h: HilbertSequence,
    step: int,
    ambient_dim: int,
    *,
    budget: int | None = None,
) -> tuple[bool, HilbertSequence | None]:
    """Whether h(t) = k(step * t) for some differentiable O-sequence k with k(1) <= ambient_dim + 1.

    Returns (found, witness); the witness is one such k.  Sequences with
    an unspecified tail are refused, because the search would be unbounded.
    """
    from .surface import enumerate_completions  # local import to avoid a cycle

    kwargs = {"limit": 1}
    if budget is not None:
        kwargs["budget"] = budget
    found = enumerate_completions(h, step, ambient_dim, **kwargs)
    if not found:
        return False, None
    return True, found[0].prefix_sums()
