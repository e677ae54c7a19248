"""Exact partition solvers.

Two independent oracles (exhaustive scan and subset-sum DP), an enumeration
restricted to the middle poset Q(n) (which contains a representative of every
optimal partition), a dominance-pruned ascent over Q's cover DAG, and two
closed-form fast paths built on its extremal elements.  All of them report
the same optimal |delta|; subsets are reported in the original input order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .core import Instance, SignVector, SubsetRef, delta, negate
from .errors import TooLarge, TooSmall, UnknownAlgorithm
from .poset import (
    PosetKind,
    _max_element_mask,
    _min_element_mask,
    _q_membership_table,
    apply_addition,
    apply_swap,
    membership,
)

BRUTE_MAX_N = 24
PRUNED_MAX_N = 24
DP_MAX_CELLS = 10**8
_TABLE_MAX_N = 20

ALGORITHMS = ("brute", "dp", "qenum", "pruned", "minfast", "corollary", "auto")


@dataclass(frozen=True)
class Solution:
    """An exact partition result.

    ``subset`` uses original 1-based input positions.  ``nodes_visited``
    counts candidate evaluations: sign patterns scanned by the enumeration
    solvers, table cells for the DP oracle, frontier nodes processed by the
    pruned search, extremal elements tested by the fast paths.
    """

    subset: SubsetRef
    delta: int
    abs_delta: int
    algorithm: str
    nodes_visited: int
    optimal: bool


def _delta_table(c: tuple[int, ...]) -> np.ndarray:
    # all 2^n signed differences; exact in int64 because totals fit in 63 bits
    d = np.zeros(1, dtype=np.int64)
    for ci in c:
        d = np.concatenate([d - ci, d + ci])
    return d


def _mask_delta(inst: Instance, mask: int) -> int:
    s = 0
    for i in range(inst.n):
        if mask >> i & 1:
            s += inst.c[i]
    return s - (inst.total - s)


def _subset_from_mask(inst: Instance, mask: int) -> SubsetRef:
    original = sorted(inst.perm[i] for i in range(inst.n) if mask >> i & 1)
    return SubsetRef(tuple(original), inst.n)


def _make_solution(
    inst: Instance, mask: int, d: int, algorithm: str, nodes_visited: int
) -> Solution:
    d = int(d)
    return Solution(
        subset=_subset_from_mask(inst, mask),
        delta=d,
        abs_delta=abs(d),
        algorithm=algorithm,
        nodes_visited=nodes_visited,
        optimal=True,
    )


# ---------------------------------------------------------------------------
# oracles


def solve_brute(inst: Instance) -> Solution:
    """Scan the 2^(n-1) sign patterns whose first entry is +1.

    Every unordered partition has exactly one such representative because
    negation flips the first entry; |delta| ties resolve to the smallest
    bitmask.
    """
    n = inst.n
    if n > BRUTE_MAX_N:
        raise TooLarge(f"brute force is capped at n = {BRUTE_MAX_N}")
    if n <= _TABLE_MAX_N:
        dt = _delta_table(inst.c)
        odd = np.abs(dt[1::2])
        i = int(np.argmin(odd))
        mask = 2 * i + 1
        return _make_solution(inst, mask, int(dt[mask]), "brute", 1 << (n - 1))
    # beyond table range: split-table scan, O(1) per pattern
    h = n // 2
    lows = [0]
    for ci in inst.c[:h]:
        lows += [s + ci for s in lows]
    highs = [0]
    for ci in inst.c[h:]:
        highs += [s + ci for s in highs]
    total = inst.total
    best_abs = best_mask = best_delta = None
    for hi_mask, hi_sum in enumerate(highs):
        base = hi_mask << h
        for lo_mask in range(1, 1 << h, 2):
            s = hi_sum + lows[lo_mask]
            d = s - (total - s)
            if best_abs is None or abs(d) < best_abs:
                best_abs, best_mask, best_delta = abs(d), base | lo_mask, d
    return _make_solution(inst, best_mask, best_delta, "brute", 1 << (n - 1))


def solve_dp(inst: Instance) -> Solution:
    """Pseudo-polynomial oracle: reachable subset sums as bitsets.

    Picks the reachable sum closest to total/2 (preferring the nonnegative
    side on ties) and backtracks to the smallest-bitmask subset reaching it.
    """
    n, total = inst.n, inst.total
    if n * (total + 1) > DP_MAX_CELLS:
        raise TooLarge(f"DP table would exceed {DP_MAX_CELLS} cells")
    reach = 1
    snapshots = [1]
    for ci in inst.c:
        reach |= reach << ci
        snapshots.append(reach)
    half = total // 2
    s_lo = (reach & ((1 << (half + 1)) - 1)).bit_length() - 1
    rest = reach >> (half + 1)
    if rest:
        s_hi = half + 1 + ((rest & -rest).bit_length() - 1)
        if 2 * s_hi - total <= total - 2 * s_lo:
            s = s_hi
        else:
            s = s_lo
    else:
        s = s_lo
    chosen = s
    mask = 0
    for i in range(n - 1, -1, -1):
        if not snapshots[i] >> s & 1:  # unreachable without item i+1: take it
            mask |= 1 << i
            s -= inst.c[i]
    if s != 0:
        raise AssertionError("backtracking failed to reproduce the chosen sum")
    return _make_solution(
        inst, mask, 2 * chosen - total, "dp", n * (total + 1)
    )


# ---------------------------------------------------------------------------
# candidate reduction to the middle poset


def solve_q_enum(inst: Instance) -> Solution:
    """Enumerate one representative per complementary pair in Q(n).

    Q(n) carries a representative of every optimal partition, so scanning its
    first-entry-+1 members (half the poset) is exact.
    """
    n = inst.n
    if n < 3:
        raise TooSmall("Q(n) is empty for n < 3")
    if n > BRUTE_MAX_N:
        raise TooLarge(f"enumeration is capped at n = {BRUTE_MAX_N}")
    if n <= _TABLE_MAX_N:
        in_q = np.asarray(_q_membership_table(n))
        dt = _delta_table(inst.c)
        ks = np.nonzero(in_q[1::2])[0]
        masks = 2 * ks + 1
        vals = np.abs(dt[masks])
        i = int(np.argmin(vals))
        mask = int(masks[i])
        return _make_solution(inst, mask, int(dt[mask]), "qenum", len(masks))
    best = None
    examined = 0
    for mask in range(1, 1 << n, 2):
        if membership(SignVector(n, mask)) is not PosetKind.Q:
            continue
        examined += 1
        d = _mask_delta(inst, mask)
        if best is None or abs(d) < abs(best[0]):
            best = (d, mask)
    d, mask = best
    return _make_solution(inst, mask, d, "qenum", examined)


def solve_pruned(inst: Instance) -> Solution:
    """Dominance-pruned ascent over Q(n)'s cover DAG.

    Delta never decreases along covers (weights are sorted), so a node with
    nonnegative delta dominates its whole up-set and the down-set of its
    negation: it is recorded and never expanded.  Negative nodes are expanded
    to their Q-covers; their own |delta| needs no recording since the negation
    lies above a recorded node.  |delta| is congruent to the total mod 2, so a
    recorded value equal to that parity is optimal and stops the search
    early.  The frontier pops least-negative delta first, which reaches the
    nonnegative boundary quickly; any processing order gives the same value.
    """
    n = inst.n
    if n < 3:
        raise TooSmall("Q(n) is empty for n < 3")
    if n > PRUNED_MAX_N:
        raise TooLarge(f"pruned search is capped at n = {PRUNED_MAX_N}")
    c = inst.c
    total = inst.total
    parity = total & 1
    if n <= _TABLE_MAX_N:
        in_q = _q_membership_table(n)

        def is_q(mask: int) -> bool:
            return bool(in_q[mask])

    else:

        def is_q(mask: int) -> bool:
            return membership(SignVector(n, mask)) is PosetKind.Q

    top_bit = 1 << (n - 1)
    swap_zone = (1 << (n - 1)) - 1
    best_d: int | None = None
    best_mask = -1
    visited = 0
    seen = set()
    heap: list[tuple[int, int]] = []  # (-delta, mask): least-negative first

    def record(mask: int, d: int) -> bool:
        nonlocal best_d, best_mask
        if best_d is None or (d, mask) < (best_d, best_mask):
            best_d, best_mask = d, mask
        return best_d == parity

    done = False
    for k in range((n - 1) // 2 + 1):
        mask = _min_element_mask(n, k)
        seen.add(mask)
        d = _mask_delta(inst, mask)
        if d >= 0:
            visited += 1
            if record(mask, d):
                done = True
                break
        else:
            heapq.heappush(heap, (-d, mask))
    while heap and not done:
        neg_d, mask = heapq.heappop(heap)
        visited += 1
        d = -neg_d
        covers = []
        if not mask & top_bit:
            covers.append((mask | top_bit, d + 2 * c[n - 1]))
        pat = ~mask & (mask >> 1) & swap_zone
        while pat:
            b = pat & -pat
            i = b.bit_length() - 1
            covers.append((mask ^ (b | b << 1), d + 2 * (c[i] - c[i + 1])))
            pat &= pat - 1
        for w, dw in covers:
            if w in seen or not is_q(w):
                continue
            seen.add(w)
            if dw >= 0:
                if record(w, dw):
                    done = True
                    break
            else:
                heapq.heappush(heap, (-dw, w))
    if best_d is None:
        raise AssertionError("Q(n) has no nonnegative-delta element; impossible")
    return _make_solution(inst, best_mask, best_d, "pruned", visited)


# ---------------------------------------------------------------------------
# closed-form fast paths on the extremal elements


def solve_min_fastpath(inst: Instance) -> Solution | None:
    """The first minimal element of Q(n) with nonnegative delta is optimal.

    Checks each of the floor((n-1)/2) + 1 minimal elements in O(n); returns
    None when none qualifies.
    """
    n = inst.n
    if n < 3:
        raise TooSmall("Q(n) is empty for n < 3")
    for k in range((n - 1) // 2 + 1):
        mask = _min_element_mask(n, k)
        d = _mask_delta(inst, mask)
        if d >= 0:
            return _make_solution(inst, mask, d, "minfast", k + 1)
    return None


def solve_corollary(inst: Instance) -> Solution | None:
    """Maximal-element certificate.

    A maximal element wins when its delta is nonnegative and each defined
    cover of its negation (the adjacent swap for k != 0, the last-entry
    addition for 2k != n-1) has a delta at least as large.
    """
    n = inst.n
    if n < 3:
        raise TooSmall("Q(n) is empty for n < 3")
    for k in range((n - 1) // 2 + 1):
        top = SignVector(n, _max_element_mask(n, k))
        d_top = delta(top, inst)
        if d_top < 0:
            continue
        bottom = negate(top)
        if k != 0 and d_top > delta(apply_swap(bottom, k, k + 1), inst):
            continue
        if 2 * k != n - 1 and d_top > delta(apply_addition(bottom, n), inst):
            continue
        return _make_solution(inst, top.mask, d_top, "corollary", k + 1)
    return None


# ---------------------------------------------------------------------------
# dispatch


def solve(inst: Instance, algo: str = "auto") -> Solution | None:
    """Run the named algorithm; "auto" tries the fast paths, then the pruned
    search, falling back to the DP oracle for tiny or oversized n.

    Only "minfast" and "corollary" may return None (no certificate applies).
    """
    if algo == "brute":
        return solve_brute(inst)
    if algo == "dp":
        return solve_dp(inst)
    if algo == "qenum":
        return solve_q_enum(inst)
    if algo == "pruned":
        return solve_pruned(inst)
    if algo == "minfast":
        return solve_min_fastpath(inst)
    if algo == "corollary":
        return solve_corollary(inst)
    if algo != "auto":
        raise UnknownAlgorithm(f"unknown algorithm {algo!r}")
    if inst.n >= 3:
        sol = solve_min_fastpath(inst)
        if sol is None:
            sol = solve_corollary(inst)
        if sol is not None:
            return sol
        if inst.n <= PRUNED_MAX_N:
            return solve_pruned(inst)
    return solve_dp(inst)
