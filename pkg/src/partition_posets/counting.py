"""Exact sizes and rank profiles of the posets, computed without enumeration.

The full poset's profile is the coefficient list of prod_{i<=n} (1 + q^i):
level t counts the subsets of [n] with element sum t.  The nonnegative
half-space R+(n) is profiled by a lattice-path DP refined by rank, where the
rank of a vector is (n+1) * (#up-steps) - (sum of up-step positions); the
middle poset's profile is what remains after removing both half-spaces.

All counts are plain integers, validated to stay below 2**128; the n <= 120
guard keeps that bound (and runtimes) honest, raising instead of ever
producing a wrapped or approximate count.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

from .errors import TooLarge, TooSmall
from .poset import PosetKind

MAX_COUNT_N = 120
U128_LIMIT = 1 << 128


@dataclass(frozen=True)
class RankProfile:
    """Element counts per rank level.

    For kinds P, R+ and R- the index is the P-rank (length n(n+1)/2 + 1 with
    zeros on unpopulated levels).  For kind Q the index is the Q-rank, i.e.
    the P-rank shifted down by n.
    """

    kind: PosetKind
    n: int
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class ProfileChecks:
    symmetric: bool
    unimodal: bool
    max_level: int


class _ProfileCache:
    """Incrementally extended DP state shared by the profile functions.

    ``p[n]`` and ``rplus[n]`` hold finished profiles for every n computed so
    far; ``ballot`` holds only the newest path table, keyed by up-step count
    u as (offset, coefficients) polynomials over the sum of up positions.
    Appending step n keeps a path nonnegative after a down-step only when
    2u >= n, and an up-step at position n adds n to the position sum.
    """

    def __init__(self) -> None:
        self.lock = threading.Lock()
        self.p: list[list[int]] = [[1]]
        self.rplus: list[list[int]] = [[1]]
        self.ballot: dict[int, tuple[int, list[int]]] = {0: (0, [1])}

    def extend(self, n_target: int) -> None:
        with self.lock:
            while len(self.p) <= n_target:
                n = len(self.p)
                prev = self.p[-1]
                cur = prev + [0] * n
                for t in range(len(prev) - 1, -1, -1):
                    cur[t + n] += prev[t]
                self.p.append(cur)

                nxt: dict[int, tuple[int, list[int]]] = {}
                for u, (off, coeffs) in self.ballot.items():
                    if 2 * u >= n:
                        nxt[u] = (off, coeffs[:])
                for u, (off, coeffs) in self.ballot.items():
                    shifted_off = off + n
                    if u + 1 in nxt:
                        eoff, ec = nxt[u + 1]
                        lo = min(eoff, shifted_off)
                        hi = max(eoff + len(ec), shifted_off + len(coeffs))
                        merged = [0] * (hi - lo)
                        for j, val in enumerate(ec):
                            merged[eoff - lo + j] += val
                        for j, val in enumerate(coeffs):
                            merged[shifted_off - lo + j] += val
                        nxt[u + 1] = (lo, merged)
                    else:
                        nxt[u + 1] = (shifted_off, coeffs[:])
                self.ballot = nxt

                prof = [0] * (n * (n + 1) // 2 + 1)
                for u, (off, coeffs) in nxt.items():
                    base = (n + 1) * u - off
                    for j, val in enumerate(coeffs):
                        if val:
                            prof[base - j] += val
                self.rplus.append(prof)


_CACHE = _ProfileCache()


def _guard(n: int) -> None:
    if n < 1:
        raise TooSmall("n must be at least 1")
    if n > MAX_COUNT_N:
        raise TooLarge(f"counting is capped at n = {MAX_COUNT_N}")


def p_rank_profile(n: int) -> RankProfile:
    """counts[t] = number of subsets of [n] with element sum t."""
    _guard(n)
    _CACHE.extend(n)
    counts = tuple(_CACHE.p[n])
    if sum(counts) != 1 << n:
        raise AssertionError("profile total disagrees with 2**n")
    return RankProfile(kind=PosetKind.P, n=n, counts=counts)


def rplus_rank_profile(n: int) -> RankProfile:
    """Per-rank counts of vectors whose running sums never go negative."""
    _guard(n)
    _CACHE.extend(n)
    counts = tuple(_CACHE.rplus[n])
    if sum(counts) != math.comb(n, n // 2):
        raise AssertionError("half-space total disagrees with the central binomial")
    return RankProfile(kind=PosetKind.R_PLUS, n=n, counts=counts)


def rminus_rank_profile(n: int) -> RankProfile:
    """The mirror half-space, by rank reflection of R+ (negation symmetry)."""
    plus = rplus_rank_profile(n)
    return RankProfile(kind=PosetKind.R_MINUS, n=n, counts=plus.counts[::-1])


def q_rank_profile(n: int) -> RankProfile:
    """Middle-poset counts by Q-rank: full profile minus both half-spaces,
    re-indexed by subtracting n."""
    _guard(n)
    p = p_rank_profile(n).counts
    rp = rplus_rank_profile(n).counts
    rm = rp[::-1]
    diff = [p[i] - rp[i] - rm[i] for i in range(len(p))]
    if any(v < 0 for v in diff):
        raise AssertionError("half-space profiles exceed the full profile")
    r = n * (n + 1) // 2
    lo, hi = min(n, r + 1), max(r - n + 1, 0)
    if any(diff[:lo]) or any(diff[hi:]):
        raise AssertionError("middle poset has mass outside rank window [n, r-n]")
    counts = tuple(diff[lo:hi])
    if sum(counts) != q_size(n):
        raise AssertionError("middle-poset profile total disagrees with closed form")
    return RankProfile(kind=PosetKind.Q, n=n, counts=counts)


def q_size(n: int) -> int:
    """Closed-form size of the middle poset: 2^n - 2 * C(n, floor(n/2))."""
    _guard(n)
    return (1 << n) - 2 * math.comb(n, n // 2)


def width_value(n: int) -> int:
    """The middle coefficient N([n], floor(n(n+1)/4)): the width of both posets."""
    profile = p_rank_profile(n).counts
    value = profile[n * (n + 1) // 4]
    if value != max(profile):
        raise AssertionError("middle coefficient is not the peak level")
    return value


def catalan(m: int) -> int:
    """Number of 2m-step nonnegative walks from 0 back to 0."""
    if m < 0:
        raise TooSmall("catalan is defined for m >= 0")
    if m > 63:
        raise TooLarge("catalan is capped at m = 63 to honor the 128-bit bound")
    value, rem = divmod(math.comb(2 * m, m), m + 1)
    if rem:
        raise AssertionError("central binomial not divisible by m + 1")
    return value


def ballot_count(n: int) -> int:
    """Number of n-step walks from 0 that never go negative.

    Computed by the doubling recurrence (subtracting the walks that return
    to 0 on odd steps) and cross-checked against the closed form
    C(n, floor(n/2)); the two must agree exactly.
    """
    if n == 0:
        return 1
    _guard(n)
    x = 1
    for i in range(1, n + 1):
        x = 2 * x - (catalan((i - 1) // 2) if i % 2 else 0)
    closed = math.comb(n, n // 2)
    if x != closed:
        raise AssertionError(f"recurrence {x} != closed form {closed} at n = {n}")
    if x >= U128_LIMIT:
        raise AssertionError("count exceeded the 128-bit bound")
    return x


def height_formula(n: int, kind: PosetKind) -> int:
    """Closed-form largest chain size for P(n) or Q(n)."""
    if kind is PosetKind.P:
        if n < 1:
            raise TooSmall("P(n) needs n >= 1")
        return n * (n + 1) // 2 + 1
    if kind is not PosetKind.Q:
        raise ValueError("height formulas exist for kinds P and Q")
    if n < 3:
        raise TooSmall(f"Q({n}) is empty")
    if n >= 8:
        return (n - 2) * (n - 3) // 2 + 1
    ell = (n - 1) // 2
    return n * (n - 1) // 2 - (2 * n - 3 * ell) * (ell + 1) // 2 + 1


def profile_checks(profile: RankProfile) -> ProfileChecks:
    """Rank-symmetry and rank-unimodality of the populated levels."""
    counts = list(profile.counts)
    while counts and counts[0] == 0:
        counts.pop(0)
    while counts and counts[-1] == 0:
        counts.pop()
    if not counts:
        return ProfileChecks(symmetric=True, unimodal=True, max_level=0)
    symmetric = counts == counts[::-1]
    k = 0
    while k + 1 < len(counts) and counts[k] <= counts[k + 1]:
        k += 1
    while k + 1 < len(counts) and counts[k] >= counts[k + 1]:
        k += 1
    return ProfileChecks(
        symmetric=symmetric,
        unimodal=k == len(counts) - 1,
        max_level=max(counts),
    )
