"""
Per-permutation isoperimetric classification.

The area of the polygon of w is its tile count, which every tiling shares;
the interesting question is which perimeter values the tilings of a fixed w
can realise.  This module computes those profiles, verifies the two
minimal-perimeter classifications exhaustively, and counts 321-patterns
(the obstruction to a unique tiling).
"""
from __future__ import annotations

import dataclasses
from typing import Iterable, Iterator

from .elnitsky import enumerate_tiling_stats
from .permcore import Permutation, all_permutations, check_contiguity, generate_family

DEFAULT_DEGREE_CAP = 7
HARD_DEGREE_CAP = 8


@dataclasses.dataclass(frozen=True)
class PerimeterProfile:
    min_perim: int
    max_perim: int
    min_side: int
    max_side: int
    constant_perim: int | None
    class_count: int


@dataclasses.dataclass(frozen=True)
class ClassificationReport:
    criterion: str
    n: int
    predicate_set: frozenset[Permutation]
    family_set: frozenset[Permutation]

    @property
    def ok(self) -> bool:
        return self.predicate_set == self.family_set

    def mismatches(self) -> tuple[list[Permutation], list[Permutation]]:
        """(predicate-only, family-only) sorted for reporting."""
        only_pred = sorted(self.predicate_set - self.family_set, key=lambda w: w.image)
        only_fam = sorted(self.family_set - self.predicate_set, key=lambda w: w.image)
        return only_pred, only_fam


def perimeter_profile(w: Permutation) -> PerimeterProfile:
    """Exact extremes of perim and side-perim over all tilings of w.

    >>> from .permcore import parse_permutation
    >>> perimeter_profile(parse_permutation("2345671")).constant_perim
    2
    """
    stats = [s for _, s in enumerate_tiling_stats(w)]
    perims = [s.perim for s in stats]
    sides = [s.side_perim for s in stats]
    lo, hi = min(perims), max(perims)
    return PerimeterProfile(
        min_perim=lo,
        max_perim=hi,
        min_side=min(sides),
        max_side=max(sides),
        constant_perim=lo if lo == hi else None,
        class_count=len(stats),
    )


def _all_classes_have(w: Permutation, statistic: str, value: int) -> bool:
    # Early exit on the first violating class keeps exhaustive scans cheap.
    for _, stats in enumerate_tiling_stats(w):
        if getattr(stats, statistic) != value:
            return False
    return True


def strong_perimeter_two_family(n: int) -> frozenset[Permutation]:
    """The two degree-n permutations whose every tiling has perim 2."""
    return frozenset(generate_family("thm45", n=n))


def side_perimeter_two_family(n: int) -> frozenset[Permutation]:
    """The permutations whose every tiling has exactly two side tiles."""
    members = set()
    for k in range(1, n):
        members.add(generate_family("thm46-first", n=n, k=k))
        members.add(generate_family("thm46-second", n=n, k=k))
    return frozenset(members)


def verify_classification(
    criterion: str, n: int, cap: int = DEFAULT_DEGREE_CAP, hard: bool = False
) -> ClassificationReport:
    """Exhaustively compare a classification predicate with its family.

    criterion "4.5": permutations all of whose tilings have exactly two
    strong perimeter tiles.  criterion "4.6": permutations all of whose
    tilings have exactly two side-perimeter tiles.  The scan covers every
    contiguous permutation of degree n; a report with ok=False lists the
    discrepancy instead of hiding it.
    """
    limit = HARD_DEGREE_CAP if hard else cap
    if not 3 <= n <= limit:
        raise ValueError(
            f"n={n} outside 3..{limit}"
            + ("" if hard else f" (pass hard=True to allow up to {HARD_DEGREE_CAP})")
        )
    if criterion == "4.5":
        statistic, family = "perim", strong_perimeter_two_family(n)
    elif criterion == "4.6":
        statistic, family = "side_perim", side_perimeter_two_family(n)
    else:
        raise ValueError(f"criterion must be '4.5' or '4.6', not {criterion!r}")
    predicate = frozenset(
        w
        for w in all_permutations(n)
        if check_contiguity(w) and _all_classes_have(w, statistic, 2)
    )
    return ClassificationReport(criterion, n, predicate, frozenset(family))


def count_321_patterns(w: Permutation) -> int:
    """Number of position triples i < j < k with w(i) > w(j) > w(k).

    >>> from .permcore import parse_permutation
    >>> count_321_patterns(parse_permutation("321"))
    1
    >>> count_321_patterns(parse_permutation("2345671"))
    0
    """
    img = w.image
    total = 0
    for j, v in enumerate(img):
        larger_before = sum(1 for u in img[:j] if u > v)
        smaller_after = sum(1 for u in img[j + 1 :] if u < v)
        total += larger_before * smaller_after
    return total


def contiguous_permutations(n: int) -> Iterator[Permutation]:
    for w in all_permutations(n):
        if check_contiguity(w):
            yield w
