"""Sign vectors, the prefix-sum partial order, and partition arithmetic.

A subset S of [n] is encoded as the length-n vector with +1 at positions in S
and -1 elsewhere; the signed partition difference of S is the inner product of
that vector with the instance weights.  The order compares running sums
componentwise, so comparability of two vectors decides the inequality of their
differences for every weight vector at once.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInput, LengthMismatch, NegativeValue, Overflow

MAX_N = 64
"""Vector lengths are capped by the bitmask encoding."""

VALUE_LIMIT = 1 << 63
"""Weights and totals must stay below 2**63 so signed 64-bit arithmetic is exact."""


@dataclass(frozen=True)
class SignVector:
    """A length-n vector over {+1, -1}.

    Bit i-1 of ``mask`` is set exactly when entry i equals +1 (entries are
    1-based throughout, matching the [n] index convention).
    """

    n: int
    mask: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"length must be in [1, {MAX_N}], got {self.n}")
        if not 0 <= self.mask < 1 << self.n:
            raise ValueError("mask has bits beyond position n-1")

    @classmethod
    def from_entries(cls, entries: Iterable[int]) -> "SignVector":
        entries = tuple(entries)
        mask = 0
        for i, e in enumerate(entries):
            if e == 1:
                mask |= 1 << i
            elif e != -1:
                raise ValueError(f"entries must be +1 or -1, got {e!r}")
        return cls(len(entries), mask)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(1 if self.mask >> i & 1 else -1 for i in range(self.n))

    def entry(self, i: int) -> int:
        """The i-th entry, 1-based."""
        if not 1 <= i <= self.n:
            raise IndexError(f"entry index {i} outside [1, {self.n}]")
        return 1 if self.mask >> (i - 1) & 1 else -1

    def sign_string(self) -> str:
        """Entries left to right as '+'/'-', e.g. '+-+--'."""
        return "".join("+" if self.mask >> i & 1 else "-" for i in range(self.n))

    def __neg__(self) -> "SignVector":
        return negate(self)

    def __le__(self, other: "SignVector") -> bool:
        # partial order: incomparable pairs fail in both directions
        return leq(self, other)

    def __repr__(self) -> str:
        return f"SignVector({self.sign_string()!r})"


@dataclass(frozen=True)
class SubsetRef:
    """A subset of [n], kept as a strictly increasing tuple of 1-based indices."""

    indices: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(self.indices))
        prev = 0
        for i in self.indices:
            if not prev < i <= self.n:
                raise ValueError(
                    f"indices must be strictly increasing within [1, {self.n}]"
                )
            prev = i

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class Instance:
    """A normalized instance: weights sorted non-increasingly.

    ``perm[k]`` is the original 1-based position of ``c[k]``, so results
    computed on the sorted weights can be reported in input order.
    """

    c: tuple[int, ...]
    perm: tuple[int, ...]
    total: int

    @property
    def n(self) -> int:
        return len(self.c)


def normalize_instance(raw: Sequence[int]) -> Instance:
    """Sort weights non-increasingly (stable on ties) and record the permutation."""
    try:
        values = [operator.index(v) for v in raw]
    except TypeError as exc:
        raise NegativeValue(f"weights must be integers: {exc}") from None
    if not values:
        raise EmptyInput("an instance needs at least one weight")
    total = 0
    for v in values:
        if v < 0:
            raise NegativeValue(f"weights must be nonnegative, got {v}")
        if v >= VALUE_LIMIT:
            raise Overflow(f"weight {v} does not fit in 63 bits")
        total += v
    if total >= VALUE_LIMIT:
        raise Overflow("total weight does not fit in 63 bits")
    order = sorted(range(len(values)), key=lambda k: (-values[k], k))
    return Instance(
        c=tuple(values[k] for k in order),
        perm=tuple(k + 1 for k in order),
        total=total,
    )


def from_subset(s: SubsetRef) -> SignVector:
    """The vector with +1 exactly at the subset's positions."""
    mask = 0
    for i in s.indices:
        mask |= 1 << (i - 1)
    return SignVector(s.n, mask)


def to_subset(v: SignVector) -> SubsetRef:
    """Positions carrying +1, as a subset of [n]; inverse of from_subset."""
    return SubsetRef(tuple(i + 1 for i in range(v.n) if v.mask >> i & 1), v.n)


def negate(v: SignVector) -> SignVector:
    """Entrywise negation, i.e. the complement subset."""
    return SignVector(v.n, v.mask ^ ((1 << v.n) - 1))


def prefix_sums(v: SignVector) -> tuple[int, ...]:
    """Running sums of the entries; the last equals 2|S| - n."""
    out = []
    s = 0
    for i in range(v.n):
        s += 1 if v.mask >> i & 1 else -1
        out.append(s)
    return tuple(out)


def leq(v: SignVector, w: SignVector) -> bool:
    """Prefix-sum dominance: every running sum of v is <= the one of w."""
    if v.n != w.n:
        raise LengthMismatch(f"lengths differ: {v.n} != {w.n}")
    sv = sw = 0
    for i in range(v.n):
        sv += 1 if v.mask >> i & 1 else -1
        sw += 1 if w.mask >> i & 1 else -1
        if sv > sw:
            return False
    return True


def delta(v: SignVector, inst: Instance) -> int:
    """Signed partition difference: weights at +1 entries minus the rest."""
    if v.n != inst.n:
        raise LengthMismatch(f"vector length {v.n} != instance size {inst.n}")
    s = 0
    for i in range(v.n):
        if v.mask >> i & 1:
            s += inst.c[i]
    return s - (inst.total - s)


def diff_vector(inst: Instance) -> tuple[int, ...]:
    """Consecutive weight differences d[i] = c[i] - c[i+1], with c[n+1] = 0.

    The identity delta(v) == dot(prefix_sums(v), diff_vector(inst)) rewrites
    the difference in a form where order comparisons become sign arguments.
    """
    c = inst.c
    return tuple(c[i] - c[i + 1] for i in range(len(c) - 1)) + (c[-1],)


def iso_f(v: SignVector) -> SubsetRef:
    """Image of v in the subset-dominance world: i is in the image iff entry n+1-i is +1."""
    return SubsetRef(tuple(sorted(v.n - i for i in range(v.n) if v.mask >> i & 1)), v.n)
