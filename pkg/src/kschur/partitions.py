"""Partitions, (k+1)-cores and the k-conjugation involution.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple stands for the empty partition.  A partition is k-bounded when
no part exceeds k.  Everywhere below, ``k=None`` means "unbounded", in
which case the k-dependent notions degenerate to their classical
counterparts: k-conjugation becomes ordinary transposition and horizontal
k-strips become horizontal strips.

All functions are pure and all values immutable, so everything here is
safe for concurrent use; the memo tables are functools caches.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError


def check_partition(parts) -> tuple[int, ...]:
    """Validate and canonicalize a partition given as any iterable."""
    lam = tuple(int(p) for p in parts)
    if any(p < 1 for p in lam):
        raise DomainError(f"partition parts must be positive: {lam!r}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise DomainError(f"partition parts must weakly decrease: {lam!r}")
    return lam


def is_k_bounded(lam, k) -> bool:
    return k is None or not lam or lam[0] <= k


def require_k_bounded(lam, k) -> None:
    if not is_k_bounded(lam, k):
        raise DomainError(f"{lam!r} is not {k}-bounded")


def transpose(lam) -> tuple[int, ...]:
    """Conjugate partition (columns become rows)."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1))


def contains(lam, mu) -> bool:
    """Componentwise containment of Young diagrams."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def hook_lengths(lam) -> dict[tuple[int, int], int]:
    """Hook length of every cell, keyed by 1-based (row, column)."""
    t = transpose(lam)
    return {
        (r, c): (lam[r - 1] - c) + (t[c - 1] - r) + 1
        for r in range(1, len(lam) + 1)
        for c in range(1, lam[r - 1] + 1)
    }


def is_core(lam, t) -> bool:
    """True when no cell of ``lam`` has hook length exactly ``t``."""
    if t < 2:
        raise DomainError("core parameter must be at least 2")
    return t not in hook_lengths(lam).values()


@lru_cache(maxsize=None)
def bounded_to_core(lam, k) -> tuple[int, ...]:
    """The (k+1)-core attached to a k-bounded partition.

    Rows are placed bottom-up as a skew diagram, each row pushed right by
    the least offset keeping every hook length in the partial diagram at
    most k; left-justifying the rows then gives the core.  Within a row the
    leftmost cell realizes the largest hook, and that hook only shrinks as
    the row moves right, so each offset is found by a short forward scan.
    """
    if k is None:
        return lam
    lam = check_partition(lam)
    require_k_bounded(lam, k)
    offsets = []  # bottom row first
    ends = []  # right ends (offset + length) of rows already placed
    o = 0
    for length in reversed(lam):
        while length + sum(1 for e in ends if e > o) > k:
            o += 1
        offsets.append(o)
        ends.append(o + length)
    return tuple(o + length for o, length in zip(reversed(offsets), lam))


def core_to_bounded(kappa, k) -> tuple[int, ...]:
    """Inverse of :func:`bounded_to_core`: per-row count of hook <= k cells."""
    kappa = check_partition(kappa)
    if k is None:
        return kappa
    if not is_core(kappa, k + 1):
        raise DomainError(f"{kappa!r} is not a {k + 1}-core")
    hooks = hook_lengths(kappa)
    counts = [
        sum(1 for c in range(1, kappa[r - 1] + 1) if hooks[(r, c)] <= k)
        for r in range(1, len(kappa) + 1)
    ]
    while counts and counts[-1] == 0:
        counts.pop()
    return check_partition(counts)


@lru_cache(maxsize=None)
def k_conjugate(lam, k) -> tuple[int, ...]:
    """The involution on k-bounded partitions: transpose the (k+1)-core."""
    if k is None:
        return transpose(lam)
    return core_to_bounded(transpose(bounded_to_core(lam, k)), k)


def is_horizontal_strip(lam, mu) -> bool:
    """True when mu is contained in lam with at most one new cell per column."""
    if not contains(lam, mu):
        return False
    return all(
        lam[i + 1] <= (mu[i] if i < len(mu) else 0) for i in range(len(lam) - 1)
    )


def is_vertical_strip(lam, mu) -> bool:
    """True when mu is contained in lam with at most one new cell per row."""
    if not contains(lam, mu):
        return False
    return all(p - (mu[i] if i < len(mu) else 0) <= 1 for i, p in enumerate(lam))


def is_horizontal_k_strip(lam, mu, k) -> bool:
    """Horizontal strip whose k-conjugate difference is a vertical strip.

    Failed containment (of the shapes or of their k-conjugates) returns
    False rather than raising, keeping the predicate total on pairs of
    k-bounded partitions.
    """
    require_k_bounded(lam, k)
    require_k_bounded(mu, k)
    if not is_horizontal_strip(lam, mu):
        return False
    return is_vertical_strip(k_conjugate(lam, k), k_conjugate(mu, k))


def _strip_extensions(lam, i, cap):
    """All partitions obtained from lam by adding a horizontal strip of
    i cells, every part at most cap (cap=None for no bound)."""
    m = len(lam)
    results = []

    def rec(row, remaining, acc):
        if row == m:
            if remaining == 0:
                results.append(acc)
                return
            bound = lam[m - 1] if m else remaining
            if cap is not None:
                bound = min(bound, cap)
            if remaining <= bound:
                results.append(acc + (remaining,))
            return
        low = lam[row]
        high = lam[row - 1] if row else low + remaining
        high = min(high, low + remaining)
        if cap is not None:
            high = min(high, cap)
        for value in range(low, high + 1):
            rec(row + 1, remaining - (value - low), acc + (value,))

    rec(0, i, ())
    return results


@lru_cache(maxsize=None)
def k_pieri_targets(lam, i, k) -> tuple:
    """k-bounded partitions reached from lam by a horizontal k-strip of size i."""
    if i < 1 or (k is not None and i > k):
        raise ValueError(f"strip size {i} out of range for k={k}")
    require_k_bounded(lam, k)
    return tuple(
        sorted(
            mu
            for mu in _strip_extensions(lam, i, k)
            if is_horizontal_k_strip(mu, lam, k)
        )
    )


def dominance_leq(lam, mu) -> bool:
    """Dominance comparison of equal-size partitions: lam below (or equal to) mu."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance order compares partitions of equal size")
    total_l = total_m = 0
    for j in range(max(len(lam), len(mu))):
        total_l += lam[j] if j < len(lam) else 0
        total_m += mu[j] if j < len(mu) else 0
        if total_l > total_m:
            return False
    return True


def dominance_lt(lam, mu) -> bool:
    return lam != mu and dominance_leq(lam, mu)


@lru_cache(maxsize=None)
def partitions_of(n, k=None) -> tuple:
    """All k-bounded partitions of n, most dominant first (descending lex)."""
    if n == 0:
        return ((),)
    out = []
    top = n if k is None else min(n, k)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def _core_profile(kappa, k) -> tuple[int, ...]:
    hooks = hook_lengths(kappa)
    counts = [
        sum(1 for c in range(1, kappa[r - 1] + 1) if hooks[(r, c)] <= k)
        for r in range(1, len(kappa) + 1)
    ]
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


@lru_cache(maxsize=None)
def _core_profile_index(k, bound):
    """Map hook <= k row-count profiles to the (k+1)-cores of size <= bound."""
    index: dict[tuple, list] = {}
    for size in range(bound + 1):
        for kappa in partitions_of(size):
            if is_core(kappa, k + 1):
                index.setdefault(_core_profile(kappa, k), []).append(kappa)
    return {profile: tuple(cores) for profile, cores in index.items()}


def core_search_oracle(lam, k, max_size=None) -> tuple:
    """Exhaustive search for (k+1)-cores whose hook <= k row counts equal lam.

    Independent cross-check for :func:`bounded_to_core`.  The default window
    n + n(n-1)/2 covers the worst case, a single column at k = 1, whose core
    is the full staircase.
    """
    lam = check_partition(lam)
    n = sum(lam)
    bound = max_size if max_size is not None else n + n * (n - 1) // 2
    return _core_profile_index(k, bound).get(lam, ())
