"""Compositions, the left cover order and horizontal composition strips.

A composition is a plain tuple of positive integers, order significant;
row 1 (the first part) is drawn topmost.  The cover order grows a
composition on the left: either prepend a part equal to 1, or bump the
leftmost part of a given size m up to m + 1.  A smaller composition sits
inside a larger one bottom-aligned, i.e. aligned with its last rows.

The horizontal-strip notion on this poset is stricter than "distinct
columns".  Because a bump may only touch the *leftmost* part of its size,
a one-cell growth step is blocked whenever an equal-length row lies
higher up.  A skew shape is a horizontal strip exactly when its cells,
taken in increasing column order, can be added one at a time as covers;
since the columns are distinct that insertion order is unique, so the
predicate is decided by a single simulation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .partitions import is_horizontal_k_strip

Cell = tuple[int, int]  # 1-based (row, column)


def check_composition(parts, k=None) -> tuple[int, ...]:
    """Validate a composition given as any iterable; parts <= k when bounded."""
    alpha = tuple(int(p) for p in parts)
    if any(p < 1 for p in alpha):
        raise DomainError(f"composition parts must be positive: {alpha!r}")
    if k is not None and any(p > k for p in alpha):
        raise DomainError(f"{alpha!r} is not {k}-bounded")
    return alpha


def is_k_bounded(alpha, k) -> bool:
    return k is None or all(p <= k for p in alpha)


def require_k_bounded(alpha, k) -> None:
    if not is_k_bounded(alpha, k):
        raise DomainError(f"{alpha!r} is not {k}-bounded")


def sort_to_partition(alpha) -> tuple[int, ...]:
    """The weakly decreasing rearrangement of the parts."""
    return tuple(sorted(alpha, reverse=True))


@lru_cache(maxsize=None)
def covers_up(beta, bound=None) -> tuple:
    """Compositions covering beta: prepend a 1, or bump the leftmost part
    of some size m to m + 1.  Results with a part above bound are dropped."""
    out = []
    if bound is None or bound >= 1:
        out.append((1,) + beta)
    seen = set()
    for pos, part in enumerate(beta):
        if part in seen:
            continue
        seen.add(part)
        if bound is None or part + 1 <= bound:
            out.append(beta[:pos] + (part + 1,) + beta[pos + 1 :])
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def leq_c(beta, alpha) -> bool:
    """Reachability of alpha from beta by a chain of covers.

    Parts never shrink or disappear along a chain, so intermediate
    compositions are pruned to the length of alpha and to its largest part.
    """
    steps = sum(alpha) - sum(beta)
    if steps < 0:
        return False
    if steps == 0:
        return beta == alpha
    bound = max(alpha, default=0)
    if len(beta) > len(alpha) or any(p > bound for p in beta):
        return False
    frontier = {beta}
    for _ in range(steps):
        frontier = {
            gamma
            for b in frontier
            for gamma in covers_up(b, bound)
            if len(gamma) <= len(alpha)
        }
    return alpha in frontier


def bottom_aligned_contains(alpha, beta) -> bool:
    """True when beta fits inside alpha aligned with alpha's last rows."""
    shift = len(alpha) - len(beta)
    if shift < 0:
        return False
    return all(b <= alpha[shift + j] for j, b in enumerate(beta))


@dataclass(frozen=True)
class SkewCells:
    """The cells of alpha outside beta, with beta bottom-aligned in alpha."""

    cells: frozenset
    outer: tuple
    inner: tuple


def _skew_cell_list(alpha, beta) -> list[Cell]:
    shift = len(alpha) - len(beta)
    cells = [
        (r, c) for r in range(1, shift + 1) for c in range(1, alpha[r - 1] + 1)
    ]
    for j, b in enumerate(beta):
        r = shift + 1 + j
        cells.extend((r, c) for c in range(b + 1, alpha[r - 1] + 1))
    return cells


def skew_cells(alpha, beta) -> SkewCells:
    """Bottom-aligned skew cells; raises when beta does not fit in alpha."""
    if not bottom_aligned_contains(alpha, beta):
        raise ValueError(f"{beta!r} does not sit bottom-aligned inside {alpha!r}")
    return SkewCells(frozenset(_skew_cell_list(alpha, beta)), tuple(alpha), tuple(beta))


def is_horizontal_comp_strip(alpha, beta) -> bool:
    """True when alpha/beta is a horizontal strip of the cover order.

    Checks bottom-aligned containment and distinct columns, then replays
    the unique column-increasing insertion and demands every step be a
    cover: a column-1 cell must open a new top row, and a cell in column c
    may extend a row only if no higher row currently has length c - 1
    (that row would be the leftmost part of its size, so the bump would
    land there instead).  Containment failure returns False, not an error.
    """
    shift = len(alpha) - len(beta)
    if shift < 0 or not bottom_aligned_contains(alpha, beta):
        return False
    cells = _skew_cell_list(alpha, beta)
    columns = [c for _, c in cells]
    if len(set(columns)) != len(columns):
        return False
    lengths = [0] * shift + list(beta)
    for r, c in sorted(cells, key=lambda cell: cell[1]):
        if c == 1:
            if r != 1 or shift != 1:
                return False
            lengths[0] = 1
        else:
            if lengths[r - 1] != c - 1:
                return False
            if any(lengths[q] == c - 1 for q in range(r - 1)):
                return False
            lengths[r - 1] = c
    return True


def is_horizontal_k_comp_strip(alpha, beta, k) -> bool:
    """Horizontal composition strip whose sorted shapes differ by a
    horizontal k-strip."""
    require_k_bounded(alpha, k)
    require_k_bounded(beta, k)
    if not is_horizontal_comp_strip(alpha, beta):
        return False
    return is_horizontal_k_strip(sort_to_partition(alpha), sort_to_partition(beta), k)


@lru_cache(maxsize=None)
def comp_pieri_targets(beta, i, k=None) -> tuple:
    """k-bounded compositions reached from beta by a horizontal
    k-composition strip of size i."""
    if i < 1 or (k is not None and i > k):
        raise ValueError(f"strip size {i} out of range for k={k}")
    require_k_bounded(beta, k)
    frontier = {beta}
    for _ in range(i):
        frontier = {gamma for b in frontier for gamma in covers_up(b, k)}
    return tuple(
        sorted(a for a in frontier if is_horizontal_k_comp_strip(a, beta, k))
    )


def compositions_of(n, k=None):
    """Yield all k-bounded compositions of n (recursive order)."""
    if n == 0:
        yield ()
        return
    top = n if k is None else min(n, k)
    for first in range(1, top + 1):
        for rest in compositions_of(n - first, k):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_compositions(n, k=None) -> tuple:
    """All k-bounded compositions of n in the canonical display order:
    sorted partition descending lex (most dominant first), then the
    composition itself descending lex."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(
        sorted(
            compositions_of(n, k),
            key=lambda a: (sort_to_partition(a), a),
            reverse=True,
        )
    )
