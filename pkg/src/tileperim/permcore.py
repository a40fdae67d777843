"""
Permutations of [n] = {1, ..., n} in one-line notation.

A permutation w is stored as the tuple (w(1), ..., w(n)) of 1-based values.
All interfaces speak 1-based positions and values; the simple transposition
s_d swaps the neighbouring positions d and d+1 (acting on the right) or the
neighbouring values d and d+1 (acting on the left).
"""
from __future__ import annotations

import dataclasses
from typing import Iterator, Literal

Pair = tuple[int, int]


def pair(a: int, b: int) -> Pair:
    """An unordered value pair, stored as (low, high)."""
    return (a, b) if a <= b else (b, a)


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation in one-line notation w(1)w(2)...w(n).

    >>> Permutation((4, 2, 1, 5, 3)).n
    5
    >>> Permutation((4, 2, 1, 5, 3))(1)
    4
    """

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        n = len(image)
        if n < 1:
            raise ValueError("a permutation needs degree n >= 1")
        seen = [False] * (n + 1)
        for v in image:
            if not 1 <= v <= n:
                raise ValueError(f"value {v} out of range 1..{n}")
            if seen[v]:
                raise ValueError(f"value {v} appears more than once")
            seen[v] = True

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        """The image w(i) of a 1-based position."""
        return self.image[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.image)

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.image)
        return ",".join(str(v) for v in self.image)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.image):
            inv[v - 1] = i + 1
        return Permutation(tuple(inv))

    def times_s(self, d: int) -> "Permutation":
        """w s_d: swap the values in positions d and d+1."""
        if not 1 <= d <= self.n - 1:
            raise ValueError(f"letter {d} out of range 1..{self.n - 1}")
        img = list(self.image)
        img[d - 1], img[d] = img[d], img[d - 1]
        return Permutation(tuple(img))

    def s_times(self, d: int) -> "Permutation":
        """s_d w: swap the positions of the values d and d+1."""
        if not 1 <= d <= self.n - 1:
            raise ValueError(f"letter {d} out of range 1..{self.n - 1}")
        img = [v if v not in (d, d + 1) else (d + 1 if v == d else d) for v in self.image]
        return Permutation(tuple(img))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation.

    Two syntaxes are accepted: compact digit strings for degree <= 9
    ("42153") and comma-separated integers for any degree ("4,2,1,5,3").

    >>> parse_permutation("42153").image
    (4, 2, 1, 5, 3)
    >>> parse_permutation("4,2,1,5,3") == parse_permutation("42153")
    True
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if "," in text:
        values = []
        for part in (p.strip() for p in text.split(",")):
            try:
                values.append(int(part))
            except ValueError:
                raise ValueError(f"malformed entry {part!r}") from None
        values = tuple(values)
    else:
        if not text.isdigit():
            raise ValueError(f"malformed permutation {text!r}")
        # Compact digits are unambiguous only up to degree 9.
        values = tuple(int(c) for c in text)
    return Permutation(values)


def length_and_inversions(w: Permutation) -> tuple[int, frozenset[Pair]]:
    """The Coxeter length of w together with its inversion set.

    Inversions are reported as unordered *value* pairs {w(i), w(j)} over
    positions i < j with w(i) > w(j); the length equals their number.

    >>> length_and_inversions(parse_permutation("42153"))[0]
    5
    >>> sorted(length_and_inversions(parse_permutation("321"))[1])
    [(1, 2), (1, 3), (2, 3)]
    """
    img = w.image
    inv = frozenset(
        pair(img[i], img[j])
        for i in range(len(img))
        for j in range(i + 1, len(img))
        if img[i] > img[j]
    )
    return len(inv), inv


def length(w: Permutation) -> int:
    img = w.image
    return sum(
        1 for i in range(len(img)) for j in range(i + 1, len(img)) if img[i] > img[j]
    )


Side = Literal["left", "right"]


def descents(w: Permutation, side: Side) -> frozenset[int]:
    """Descent positions of w.

    Right-descents are the d with w(d) > w(d+1), equivalently the letters
    that can end a reduced word for w.  Left-descents are the right-descents
    of the inverse, equivalently the letters that can start a reduced word.

    >>> sorted(descents(parse_permutation("42153"), "right"))
    [1, 2, 4]
    >>> sorted(descents(parse_permutation("42153"), "left"))
    [1, 3]
    """
    if side == "right":
        img = w.image
    elif side == "left":
        img = w.inverse().image
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return frozenset(d for d in range(1, len(img)) if img[d - 1] > img[d])


def check_contiguity(w: Permutation) -> bool:
    """Whether the 2n-gon of w has nonempty, contiguous interior.

    Fails exactly when n = 1 or some proper prefix of the one-line notation
    is the set {1, ..., r}; such w split into smaller independent blocks.

    >>> check_contiguity(parse_permutation("42153"))
    True
    >>> check_contiguity(parse_permutation("213"))
    False
    >>> check_contiguity(parse_permutation("21"))
    True
    """
    if w.n <= 1:
        return False
    prefix_max = 0
    for r, v in enumerate(w.image[:-1], start=1):
        prefix_max = max(prefix_max, v)
        if prefix_max == r:
            return False
    return True


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation n(n-1)...21."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Permutation(tuple(range(n, 0, -1)))


def generate_family(kind: str, **params: int):
    """Construct the named permutation families.

    Kinds:
      - "w0", n: the order-reversing permutation n(n-1)...1.
      - "example41", A: the pair (23...A(A+1)1, (A+1)12...A), the two
        degree-(A+1) permutations of area A whose polygons have a unique
        tiling with exactly two strong perimeter tiles.
      - "thm45", n: the pair (n123...(n-1), 234...n1) with strong
        perimeter 2.
      - "thm46-first", n, k: (k+1)(k+2)...n 12...k.
      - "thm46-second", n, k: (k+1)(k+2)...n k 12...(k-1).

    >>> str(generate_family("w0", n=4))
    '4321'
    >>> str(generate_family("thm46-first", n=11, k=4))
    '5,6,7,8,9,10,11,1,2,3,4'
    >>> tuple(str(w) for w in generate_family("example41", A=6))
    ('2345671', '7123456')
    """
    if kind == "w0":
        n = _require(params, "n", 2)
        return longest_element(n)
    if kind == "example41":
        a = _require(params, "A", 1)
        first = Permutation(tuple(range(2, a + 2)) + (1,))
        second = Permutation((a + 1,) + tuple(range(1, a + 1)))
        return (first, second)
    if kind == "thm45":
        n = _require(params, "n", 2)
        return (
            Permutation((n,) + tuple(range(1, n))),
            Permutation(tuple(range(2, n + 1)) + (1,)),
        )
    if kind == "thm46-first":
        n, k = _require(params, "n", 2), params.get("k", 0)
        if not 1 <= k <= n - 1:
            raise ValueError(f"k={k} out of range 1..{n - 1}")
        return Permutation(tuple(range(k + 1, n + 1)) + tuple(range(1, k + 1)))
    if kind == "thm46-second":
        n, k = _require(params, "n", 2), params.get("k", 0)
        if not 1 <= k <= n - 1:
            raise ValueError(f"k={k} out of range 1..{n - 1}")
        return Permutation(tuple(range(k + 1, n + 1)) + (k,) + tuple(range(1, k)))
    raise ValueError(f"unknown family kind {kind!r}")


def _require(params: dict[str, int], name: str, minimum: int) -> int:
    value = params.get(name)
    if value is None or value < minimum:
        raise ValueError(f"parameter {name} must be >= {minimum}, got {value}")
    return value


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n, in lexicographic order of one-line notation."""
    import itertools

    for img in itertools.permutations(range(1, n + 1)):
        yield Permutation(img)
