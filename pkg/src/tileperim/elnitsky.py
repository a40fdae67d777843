"""
Rhombic-tiling semantics on top of commutation classes.

The 2n-gon of a permutation w has a leftside boundary labelled 1..n from the
top vertex down and a rightside boundary labelled w(1)..w(n) from the top
vertex down; sides are parallel iff equally labelled.  A tiling is replayed
as a sequence of borders (n-edge top-to-bottom paths): the class word is
read right to left, the rightmost letter placing the first tile against the
rightside boundary, and each letter d swaps border positions d and d+1,
emitting a tile of depth d whose edge labels are the two swapped values.

Tiles are identified by their unordered edge-label pair, which is unique
within a tiling, so perimeter sets deduplicate by plain set union.  A tile
is a strong perimeter tile when it owns two boundary edges:

  - left-perimeter at depth d: leftside edges d, d+1, labels {d, d+1};
  - right-perimeter at depth d: rightside edges d, d+1, labels {w(d), w(d+1)};
  - top-perimeter: both edges at the top vertex, labels {1, w(1)};
  - bottom-perimeter: both edges at the bottom vertex, labels {n, w(n)}.

A class has a left (right) tile at depth d exactly when d is a possible
first (last) letter, and a top (bottom) tile exactly when letter 1 (n-1)
occurs once, so all four counts read off the class signature.

Boundary-edge ownership for the weak/strong total is this artifact's
reading (the notion is not pinned down elsewhere): each rightside edge at
position d belongs to the first-placed tile of depth d-1 or d, each
leftside edge at position d to the last-placed such tile.  Tiles of
consecutive depths never commute, so ownership does not depend on the
member word chosen for the replay.
"""
from __future__ import annotations

import dataclasses

from .permcore import Pair, Permutation, check_contiguity, length_and_inversions, pair
from .words import CommutationClass, Word, enumerate_classes

from typing import Iterator, Literal, Sequence


@dataclasses.dataclass(frozen=True)
class Tile:
    edge_labels: Pair
    depth: int
    step: int  # 1-based placement index in the replay


@dataclasses.dataclass(frozen=True)
class Tiling:
    w: Permutation
    cls: CommutationClass
    tiles: tuple[Tile, ...]


@dataclasses.dataclass(frozen=True)
class PerimeterStats:
    L: int
    R: int
    T: int
    B: int
    left_depths: frozenset[int]
    right_depths: frozenset[int]
    perimeter_tiles: frozenset[Pair]
    perim: int
    side_perim: int
    boundary_tile_total: int


def _require_contiguous(w: Permutation) -> None:
    if not check_contiguity(w):
        raise ValueError(
            f"{w} fails the contiguity requirement: its polygon splits into blocks"
        )


def replay_tiling(w: Permutation, cls: CommutationClass) -> Tiling:
    """Realise the class as a tiling by replaying its canonical word.

    The word is read right to left starting from the border w(1)..w(n);
    the final border must be 1..n, anything else meaning the word does not
    belong to R(w).

    >>> from .permcore import parse_permutation
    >>> from .words import CommutationClass
    >>> t = replay_tiling(parse_permutation("42153"),
    ...                   CommutationClass.from_word((3, 2, 1, 2, 4)))
    >>> (t.tiles[0].edge_labels, t.tiles[0].depth)
    ((3, 5), 4)
    """
    _require_contiguous(w)
    word = cls.canonical
    n = w.n
    border = list(w.image)
    tiles = []
    for step, d in enumerate(reversed(word), start=1):
        if not 1 <= d <= n - 1:
            raise ValueError(f"letter {d} out of range 1..{n - 1}")
        a, b = border[d - 1], border[d]
        border[d - 1], border[d] = b, a
        tiles.append(Tile(pair(a, b), d, step))
    if border != list(range(1, n + 1)):
        raise ValueError(
            f"word {word} does not reduce {w}: replay ends at border {border}"
        )
    ell, inversions = length_and_inversions(w)
    if len(tiles) != ell or {t.edge_labels for t in tiles} != set(inversions):
        raise ValueError(f"word {word} is not a reduced word of {w}")
    return Tiling(w, cls, tuple(tiles))


def perimeter_stats(w: Permutation, cls: CommutationClass) -> PerimeterStats:
    """Strong-perimeter data of the class's tiling.

    >>> from .permcore import parse_permutation
    >>> from .words import CommutationClass
    >>> s = perimeter_stats(parse_permutation("42153"),
    ...                     CommutationClass.from_word((3, 2, 1, 2, 4)))
    >>> (s.L, s.R, s.T, s.B, s.perim)
    (1, 2, 1, 1, 4)
    >>> sorted(s.perimeter_tiles)
    [(1, 2), (1, 4), (3, 4), (3, 5)]
    """
    _require_contiguous(w)
    n = w.n
    left_depths = cls.first_letters
    right_depths = cls.last_letters
    top = 1 if cls.letter_multiplicity(1) == 1 else 0
    bottom = 1 if cls.letter_multiplicity(n - 1) == 1 else 0

    left_pairs = {pair(d, d + 1) for d in left_depths}
    right_pairs = {pair(w(d), w(d + 1)) for d in right_depths}
    tiles = left_pairs | right_pairs
    if top:
        tiles.add(pair(1, w(1)))
    if bottom:
        tiles.add(pair(n, w(n)))

    return PerimeterStats(
        L=len(left_depths),
        R=len(right_depths),
        T=top,
        B=bottom,
        left_depths=left_depths,
        right_depths=right_depths,
        perimeter_tiles=frozenset(tiles),
        perim=len(tiles),
        side_perim=len(left_pairs | right_pairs),
        boundary_tile_total=boundary_tile_count(w, cls),
    )


def boundary_tile_count(w: Permutation, cls: CommutationClass) -> int:
    """Number of distinct tiles owning at least one of the 2n boundary edges.

    This is the strong-plus-weak perimeter tile count, at most
    2n - perim.

    >>> from .permcore import parse_permutation
    >>> from .words import CommutationClass
    >>> boundary_tile_count(parse_permutation("321"),
    ...                     CommutationClass.from_word((1, 2, 1)))
    3
    """
    _require_contiguous(w)
    tiling = replay_tiling(w, cls)
    n = w.n
    first_by_depth: dict[int, int] = {}
    last_by_depth: dict[int, int] = {}
    for tile in tiling.tiles:
        first_by_depth.setdefault(tile.depth, tile.step)
        last_by_depth[tile.depth] = tile.step
    owners = set()
    for d in range(1, n + 1):
        touching = [e for e in (d - 1, d) if 1 <= e <= n - 1]
        right_owner = min(
            (first_by_depth[e] for e in touching if e in first_by_depth), default=None
        )
        left_owner = max(
            (last_by_depth[e] for e in touching if e in last_by_depth), default=None
        )
        if right_owner is not None:
            owners.add(right_owner)
        if left_owner is not None:
            owners.add(left_owner)
    return len(owners)


def enumerate_tiling_stats(
    w: Permutation,
) -> Iterator[tuple[CommutationClass, PerimeterStats]]:
    """One (class, stats) record per tiling of the polygon of w.

    Records stream in lexicographic order of the canonical words.
    """
    _require_contiguous(w)
    for cls in enumerate_classes(w):
        yield cls, perimeter_stats(w, cls)


def build_extremal_tiling(
    w: Permutation, end: Literal["top", "bottom"]
) -> tuple[CommutationClass, PerimeterStats]:
    """Construct a class whose tiling has a top- (bottom-) perimeter tile.

    For end="top" (requires w(1) != 1) the tiling runs the tiles
    {i, w(1)}, i < w(1), down the leftside boundary and fills the rest with
    any tiling of the one-smaller permutation obtained by deleting w(1);
    the resulting word is [w(1)-1, ..., 2, 1] followed by a shifted word of
    that smaller permutation, so letter 1 occurs exactly once.  The bottom
    construction mirrors it at the bottom vertex.

    >>> from .permcore import parse_permutation
    >>> cls, stats = build_extremal_tiling(parse_permutation("42153"), "top")
    >>> cls.canonical, stats.T
    ((3, 2, 1, 2, 4), 1)
    """
    _require_contiguous(w)
    n = w.n
    if end == "top":
        a = w(1)
        if a == 1:
            raise ValueError(f"{w} fixes 1, so no tiling has a top-perimeter tile")
        strip = tuple(range(a - 1, 0, -1))
        reduced = Permutation(
            tuple(v if v < a else v - 1 for v in w.image[1:])
        )
        word = strip + tuple(d + 1 for d in _some_reduced_word(reduced))
    elif end == "bottom":
        b = w(n)
        if b == n:
            raise ValueError(f"{w} fixes {n}, so no tiling has a bottom-perimeter tile")
        strip = tuple(range(b, n))
        reduced = Permutation(
            tuple(v if v < b else v - 1 for v in w.image[:-1])
        )
        word = strip + _some_reduced_word(reduced)
    else:
        raise ValueError(f"end must be 'top' or 'bottom', not {end!r}")
    cls = CommutationClass.from_word(word)
    stats = perimeter_stats(w, cls)
    # replay_tiling inside perimeter_stats has already verified reducedness
    if (end == "top" and stats.T != 1) or (end == "bottom" and stats.B != 1):
        raise AssertionError(f"construction failed to expose the {end} tile for {w}")
    return cls, stats


def _some_reduced_word(w: Permutation) -> Word:
    # Peel right-descents; any choice yields a reduced word.
    img = list(w.image)
    rev: list[int] = []
    changed = True
    while changed:
        changed = False
        for d in range(1, len(img)):
            if img[d - 1] > img[d]:
                img[d - 1], img[d] = img[d], img[d - 1]
                rev.append(d)
                changed = True
    return tuple(reversed(rev))
