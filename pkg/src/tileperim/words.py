"""
Reduced words and commutation classes.

A word is a tuple of letters in [n-1]; the word (u1, ..., ul) denotes the
product s_{u1} ... s_{ul} read left to right, so appending a letter d swaps
the values in positions d and d+1 of the one-line notation.

Two reduced words are equivalent when they differ by swaps of adjacent
letters with |difference| >= 2.  Each equivalence class is identified by its
lexicographically minimal member, which is also the minimal linear extension
of the class heap: the partial order on letter occurrences generated by
"earlier occurrence of a non-commuting letter comes first".
"""
from __future__ import annotations

import dataclasses
from collections import Counter
from typing import Iterable, Iterator, Sequence

from .permcore import Permutation, length

Word = tuple[int, ...]

BRUTEFORCE_CAP = 10**7


class EnumerationCapExceeded(RuntimeError):
    """Raised when a guarded exhaustive enumeration grows past its cap."""


@dataclasses.dataclass(frozen=True)
class CommutationClass:
    """One commutation class, held by its lex-minimal representative.

    first_letters / last_letters are the letters of heap-minimal /
    heap-maximal occurrences: exactly the letters that can start / end a
    member word.  multiplicity (a sorted tuple of (letter, count) pairs) is
    shared by every member, since commutation moves preserve the multiset.
    """

    canonical: Word
    first_letters: frozenset[int]
    last_letters: frozenset[int]
    multiplicity: tuple[tuple[int, int], ...]

    @classmethod
    def from_word(cls, word: Sequence[int]) -> "CommutationClass":
        word = tuple(word)
        first, last, mult = class_signature(word)
        return cls(canonical_form(word), first, last, tuple(sorted(mult.items())))

    def letter_multiplicity(self, letter: int) -> int:
        for d, count in self.multiplicity:
            if d == letter:
                return count
        return 0

    @property
    def multiplicity_map(self) -> dict[int, int]:
        return dict(self.multiplicity)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.canonical)


def evaluate_word(word: Sequence[int], n: int) -> Permutation:
    """The permutation s_{u1} ... s_{ul} in S_n."""
    img = list(range(1, n + 1))
    for d in word:
        if not 1 <= d <= n - 1:
            raise ValueError(f"letter {d} out of range 1..{n - 1}")
        img[d - 1], img[d] = img[d], img[d - 1]
    return Permutation(tuple(img))


def is_reduced_word(word: Sequence[int], w: Permutation | None = None) -> bool:
    """Whether the word is reduced (and, if w is given, evaluates to w).

    >>> from .permcore import parse_permutation
    >>> is_reduced_word((3, 2, 1, 2, 4), parse_permutation("42153"))
    True
    >>> is_reduced_word((1, 1))
    False
    >>> is_reduced_word((1, 3, 1))
    False
    """
    word = tuple(word)
    n = w.n if w is not None else (max(word) + 1 if word else 1)
    value = evaluate_word(word, n)
    if length(value) != len(word):
        return False
    return w is None or value == w


def enumerate_reduced_words(w: Permutation) -> Iterator[Word]:
    """All reduced words of w, each exactly once, in lexicographic order.

    The search peels letters from the left: d can start a reduced word of v
    exactly when d is a left-descent of v, and the remainder is a reduced
    word of s_d v.

    >>> from .permcore import parse_permutation
    >>> list(enumerate_reduced_words(parse_permutation("321")))
    [(1, 2, 1), (2, 1, 2)]
    """
    yield from _word_dfs(w, prune_to_canonical=False)


def enumerate_classes(
    w: Permutation, first_letters: Iterable[int] | None = None
) -> Iterator[CommutationClass]:
    """One CommutationClass per class of R(w), in canonical lex order.

    Streams without materialising R(w): a depth-first search over word
    prefixes prunes any prefix that is not the lex-minimal prefix of its
    class.  A new letter d is rejected when some earlier letter u > d could
    be jumped by commutations, i.e. when the maximal commuting run ending
    just before d contains a letter larger than d.

    The optional first_letters restriction keeps only classes whose
    canonical word starts with one of the given letters; the restriction
    partitions the class stream, which is how parallel splits are formed.

    >>> from .permcore import parse_permutation
    >>> [c.canonical for c in enumerate_classes(parse_permutation("42153"))]
    [(1, 3, 2, 1, 4), (3, 2, 1, 2, 4)]
    """
    allowed = None if first_letters is None else frozenset(first_letters)
    for word in _word_dfs(w, prune_to_canonical=True, first_letters=allowed):
        first, last, mult = class_signature(word)
        yield CommutationClass(word, first, last, tuple(sorted(mult.items())))


def _word_dfs(
    w: Permutation,
    prune_to_canonical: bool,
    first_letters: frozenset[int] | None = None,
) -> Iterator[Word]:
    n = w.n
    img = list(w.image)
    pos = [0] * (n + 1)  # pos[v] = current 0-based position of value v
    for i, v in enumerate(img):
        pos[v] = i
    total = length(w)
    prefix: list[int] = []

    def left_descents() -> list[int]:
        # d is a left-descent iff value d+1 currently precedes value d.
        return [d for d in range(1, n) if pos[d + 1] < pos[d]]

    def apply(d: int) -> None:
        i, j = pos[d], pos[d + 1]
        img[i], img[j] = img[j], img[i]
        pos[d], pos[d + 1] = j, i

    def rec() -> Iterator[Word]:
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for d in left_descents():
            if not prefix and first_letters is not None and d not in first_letters:
                continue
            if prune_to_canonical and _jumps_larger_letter(prefix, d):
                continue
            apply(d)
            prefix.append(d)
            yield from rec()
            prefix.pop()
            apply(d)

    return rec()


def _jumps_larger_letter(prefix: Sequence[int], d: int) -> bool:
    # Scan left through letters commuting with d; any larger one means the
    # extended prefix is not lex-minimal in its class.
    for u in reversed(prefix):
        if abs(u - d) <= 1:
            return False
        if u > d:
            return True
    return False


def commutation_neighbors(word: Sequence[int]) -> frozenset[Word]:
    """All words one commutation move away.

    >>> sorted(commutation_neighbors((1, 3, 2, 1, 4)))
    [(1, 3, 2, 4, 1), (3, 1, 2, 1, 4)]
    >>> commutation_neighbors((1, 2, 1))
    frozenset()
    """
    word = tuple(word)
    out = set()
    for i in range(len(word) - 1):
        if abs(word[i] - word[i + 1]) >= 2:
            out.add(word[:i] + (word[i + 1], word[i]) + word[i + 2 :])
    return frozenset(out)


def class_signature(
    word: Sequence[int],
) -> tuple[frozenset[int], frozenset[int], Counter]:
    """(first_letters, last_letters, multiplicity) of the word's class.

    An occurrence is heap-minimal when every earlier letter commutes with
    it, heap-maximal when every later letter does; those letters are the
    possible first and last letters across the class, so the result is
    identical for every member.

    >>> first, last, mult = class_signature((1, 3, 2, 1, 4))
    >>> sorted(first), sorted(last), sorted(mult.items())
    ([1, 3], [1, 4], [(1, 2), (2, 1), (3, 1), (4, 1)])
    """
    word = tuple(word)
    first = frozenset(
        u
        for i, u in enumerate(word)
        if all(abs(v - u) >= 2 for v in word[:i])
    )
    last = frozenset(
        u
        for i, u in enumerate(word)
        if all(abs(v - u) >= 2 for v in word[i + 1 :])
    )
    return first, last, Counter(word)


def canonical_form(word: Sequence[int]) -> Word:
    """The lex-minimal member of the word's commutation class.

    Greedily emits the smallest heap-minimal letter; equal letters never
    commute, so the choice is unambiguous.

    >>> canonical_form((3, 4, 2, 1, 2))
    (3, 2, 1, 2, 4)
    """
    remaining = list(word)
    out: list[int] = []
    while remaining:
        best = None
        for i, u in enumerate(remaining):
            if all(abs(v - u) >= 2 for v in remaining[:i]) and (
                best is None or u < remaining[best]
            ):
                best = i
        out.append(remaining.pop(best))
    return tuple(out)


def class_size(cls: CommutationClass) -> int:
    """Number of words in the class (breadth-first closure under moves)."""
    seen = {cls.canonical}
    frontier = [cls.canonical]
    while frontier:
        nxt = []
        for word in frontier:
            for other in commutation_neighbors(word):
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt
    return len(seen)


def partition_classes_bruteforce(
    w: Permutation, cap: int = BRUTEFORCE_CAP
) -> dict[CommutationClass, int]:
    """Materialise R(w) and partition it under commutation moves.

    Returns {class: exact size}.  This is the oracle for enumerate_classes:
    first/last letters are recomputed as unions of member first/last
    letters rather than from heap structure.

    >>> from .permcore import parse_permutation
    >>> sorted(partition_classes_bruteforce(parse_permutation("42153")).values())
    [4, 7]
    """
    words = []
    for word in enumerate_reduced_words(w):
        words.append(word)
        if len(words) > cap:
            raise EnumerationCapExceeded(
                f"more than {cap} reduced words for {w}; raise the cap to proceed"
            )
    index = {word: i for i, word in enumerate(words)}
    seen = [False] * len(words)
    out: dict[CommutationClass, int] = {}
    for start, word in enumerate(words):
        if seen[start]:
            continue
        members = [word]
        seen[start] = True
        frontier = [word]
        while frontier:
            nxt = []
            for member in frontier:
                for other in commutation_neighbors(member):
                    j = index[other]
                    if not seen[j]:
                        seen[j] = True
                        members.append(other)
                        nxt.append(other)
            frontier = nxt
        canonical = min(members)
        first = frozenset(m[0] for m in members if m)
        last = frozenset(m[-1] for m in members if m)
        mult = tuple(sorted(Counter(canonical).items()))
        out[CommutationClass(canonical, first, last, mult)] = len(members)
    return out


def count_reduced_words(w: Permutation) -> int:
    return sum(1 for _ in enumerate_reduced_words(w))


def count_classes(w: Permutation) -> int:
    return sum(1 for _ in _word_dfs(w, prune_to_canonical=True))
