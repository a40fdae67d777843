"""
Aggregates over all tilings of the polygon of the order-reversing
permutation w0(n) = n(n-1)...1: total perimeter-tile counts by type and
depth, the extreme perimeter values, and witness classes for the structural
consequences of those extremes.
"""
from __future__ import annotations

import dataclasses

from .elnitsky import enumerate_tiling_stats, perimeter_stats
from .permcore import Permutation, longest_element
from .words import CommutationClass, enumerate_classes

DEFAULT_N_CAP = 8
HARD_N_CAP = 9


@dataclasses.dataclass(frozen=True)
class W0Totals:
    n: int
    sum_perim: int
    sum_T: int
    sum_B: int
    sum_L: int
    sum_R: int
    per_depth_L: dict[int, int]
    per_depth_R: dict[int, int]
    class_count: int


def _check_cap(n: int, low: int, cap: int, hard: bool) -> None:
    limit = HARD_N_CAP if hard else cap
    if not low <= n <= limit:
        raise ValueError(
            f"n={n} outside {low}..{limit}"
            + ("" if hard else f" (pass hard=True to allow up to {HARD_N_CAP})")
        )


def w0_totals(n: int, cap: int = DEFAULT_N_CAP, hard: bool = False) -> W0Totals:
    """Exact perimeter-tile totals over all tilings for w0(n).

    >>> t = w0_totals(4)
    >>> (t.sum_perim, t.sum_T, t.sum_L, t.class_count)
    (24, 3, 9, 8)
    """
    _check_cap(n, 2, cap, hard)
    w0 = longest_element(n)
    sum_perim = sum_t = sum_b = sum_l = sum_r = count = 0
    per_depth_l = {d: 0 for d in range(1, n)}
    per_depth_r = {d: 0 for d in range(1, n)}
    for _, stats in enumerate_tiling_stats(w0):
        count += 1
        sum_perim += stats.perim
        sum_t += stats.T
        sum_b += stats.B
        sum_l += stats.L
        sum_r += stats.R
        for d in stats.left_depths:
            per_depth_l[d] += 1
        for d in stats.right_depths:
            per_depth_r[d] += 1
    return W0Totals(
        n=n,
        sum_perim=sum_perim,
        sum_T=sum_t,
        sum_B=sum_b,
        sum_L=sum_l,
        sum_R=sum_r,
        per_depth_L=per_depth_l,
        per_depth_R=per_depth_r,
        class_count=count,
    )


def w0_extremes(n: int, cap: int = DEFAULT_N_CAP, hard: bool = False) -> tuple[int, int, int]:
    """(min perim, max perim, max side-perim) over all tilings of w0(n).

    The min is 3 for every n >= 3, the max is n for odd n and n-1 for even
    n, and the side-perimeter maximum never exceeds n-1.

    >>> w0_extremes(5)
    (3, 5, 4)
    """
    _check_cap(n, 2, cap, hard)
    w0 = longest_element(n)
    min_perim = max_perim = max_side = None
    for _, stats in enumerate_tiling_stats(w0):
        min_perim = stats.perim if min_perim is None else min(min_perim, stats.perim)
        max_perim = stats.perim if max_perim is None else max(max_perim, stats.perim)
        max_side = stats.side_perim if max_side is None else max(max_side, stats.side_perim)
    return min_perim, max_perim, max_side


def cor38_witnesses(
    n: int, cap: int = DEFAULT_N_CAP, hard: bool = False
) -> tuple[CommutationClass, CommutationClass]:
    """Witness classes for the two extreme-perimeter structure statements.

    witness_a: a class in which every member word has the same first letter
    and the same last letter, and letter 1 or letter n-1 occurs exactly once
    (the minimum-perimeter structure).

    witness_b: a class whose possible-first-letter and possible-last-letter
    sets realise the odd/even split (the maximum-perimeter structure).  For
    even n the two sets are {odd letters} and {even letters} in some order;
    for odd n both sets are the odd letters (with letter n-1 occurring once)
    or both the even letters (with letter 1 occurring once).

    n = 2 is degenerate (a single one-tile class); it is returned as both
    witnesses.

    >>> cor38_witnesses(4)[1].canonical
    (1, 3, 2, 1, 3, 2)
    """
    _check_cap(n, 2, cap, hard)
    w0 = longest_element(n)
    if n == 2:
        only = next(iter(enumerate_classes(w0)))
        return only, only
    odds = frozenset(range(1, n, 2))
    evens = frozenset(range(2, n, 2))
    witness_a = witness_b = None
    for cls in enumerate_classes(w0):
        if witness_a is None and len(cls.first_letters) == 1 and len(cls.last_letters) == 1:
            if cls.letter_multiplicity(1) == 1 or cls.letter_multiplicity(n - 1) == 1:
                witness_a = cls
        if witness_b is None:
            if n % 2 == 0:
                if {cls.first_letters, cls.last_letters} == {odds, evens}:
                    witness_b = cls
            else:
                if (
                    cls.first_letters == cls.last_letters == odds
                    and cls.letter_multiplicity(n - 1) == 1
                ) or (
                    cls.first_letters == cls.last_letters == evens
                    and cls.letter_multiplicity(1) == 1
                ):
                    witness_b = cls
        if witness_a is not None and witness_b is not None:
            return witness_a, witness_b
    missing = "a" if witness_a is None else "b"
    raise ValueError(f"no witness {missing} among the classes of w0({n})")
