"""
Braid words on finitely many strands.

A braid word on ``n`` strands is a sequence of letters ``(i, e)`` with
``0 <= i <= n - 2`` and ``e`` in ``{+1, -1}``. The letter ``(i, +1)`` is the
Artin generator s_i: the strands at positions ``i`` and ``i + 1`` exchange,
the one coming from position ``i`` passing over. Positions are counted from
the left of the real axis.

Permutations map a *start* index to the *end* position of that strand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

Letter = tuple[int, int]


class BraidSyntaxError(ValueError):
    """Raised when a braid word literal does not follow the word grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0..n-1}``; ``images[k]`` is the image of ``k``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        return Permutation(tuple(other.images[k] for k in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for k, v in enumerate(self.images):
            inv[v] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(k == v for k, v in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting from its smallest element."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            k = self.images[start]
            while k != start:
                cycle.append(k)
                seen.add(k)
                k = self.images[k]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators on ``strands`` strands."""

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 0 <= i < self.strands - 1:
                raise ValueError(f"generator index {i} out of range on {self.strands} strands")
            if e not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {e}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    @classmethod
    def from_ints(cls, n: int, codes: Iterable[int]) -> BraidWord:
        """Build from signed 1-based codes: ``k > 0`` is s_{k-1}, ``-k`` its inverse."""
        return cls(n, tuple((abs(c) - 1, 1 if c > 0 else -1) for c in codes))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        return power(self, k)

    def __str__(self) -> str:
        return format_word(self)

    def is_empty(self) -> bool:
        return not self.letters


def format_letter(letter: Letter) -> str:
    i, e = letter
    return f"s{i}" if e > 0 else f"s{i}^-1"


def format_word(f: BraidWord) -> str:
    body = " ".join(format_letter(x) for x in f.letters)
    return f"B{f.strands}: {body}" if body else f"B{f.strands}:"


_HEADER = re.compile(r"\s*B(\d+)\s*:")
_LETTER = re.compile(r"s(\d+)(\^-1)?")


def parse_word(text: str) -> BraidWord:
    """Parse ``"B<n>: s<i> s<j>^-1 ..."`` into a :class:`BraidWord`.

    >>> parse_word("B3: s0 s1^-1").letters
    ((0, 1), (1, -1))
    """
    m = _HEADER.match(text)
    if not m:
        raise BraidSyntaxError("expected header 'B<n>:'", 0)
    n = int(m.group(1))
    if n < 1:
        raise BraidSyntaxError("strand count must be positive", m.start(1))
    pos = m.end()
    letters = []
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        if letters and not text[pos - 1].isspace():
            raise BraidSyntaxError("letters must be separated by whitespace", pos)
        lm = _LETTER.match(text, pos)
        if not lm:
            raise BraidSyntaxError(f"unexpected {text[pos]!r}", pos)
        i = int(lm.group(1))
        if i > n - 2:
            raise BraidSyntaxError(f"index {i} illegal on {n} strands", pos)
        letters.append((i, -1 if lm.group(2) else 1))
        pos = lm.end()
    return BraidWord(n, tuple(letters))


def _check_same_strands(f: BraidWord, g: BraidWord):
    if f.strands != g.strands:
        raise ValueError(f"strand count mismatch: {f.strands} vs {g.strands}")


def compose(f: BraidWord, g: BraidWord) -> BraidWord:
    """The product ``f`` then ``g``.

    With letters indexed by position rather than by strand label, the
    relabeling of ``g`` by the end permutation of ``f`` is automatic and the
    product is plain concatenation.
    """
    _check_same_strands(f, g)
    return BraidWord(f.strands, f.letters + g.letters)


def inverse(f: BraidWord) -> BraidWord:
    return BraidWord(f.strands, tuple((i, -e) for i, e in reversed(f.letters)))


def power(f: BraidWord, k: int) -> BraidWord:
    if k < 0:
        return power(inverse(f), -k)
    return BraidWord(f.strands, f.letters * k)


def pad(f: BraidWord, n: int) -> BraidWord:
    """Add straight strands on the right until there are ``n`` strands."""
    if n < f.strands:
        raise ValueError(f"cannot pad {f.strands} strands down to {n}")
    return BraidWord(n, f.letters)


def underlying_permutation(f: BraidWord) -> Permutation:
    """Start index -> end position, tracing each letter's transposition."""
    at = list(range(f.strands))  # at[position] = start index of the strand there
    for i, _ in f.letters:
        at[i], at[i + 1] = at[i + 1], at[i]
    images = [0] * f.strands
    for position, start in enumerate(at):
        images[start] = position
    return Permutation(tuple(images))


def exponent_sum(f: BraidWord) -> int:
    return sum(e for _, e in f.letters)


def is_pure(f: BraidWord) -> bool:
    return underlying_permutation(f).is_identity()


def permutation_word(p: Permutation) -> BraidWord:
    """A positive word realizing ``p`` (start -> end), built by bubble sort."""
    n = p.size
    # target[position] = end position of the strand currently at that position
    target = list(p.images)
    letters = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if target[i] > target[i + 1]:
                target[i], target[i + 1] = target[i + 1], target[i]
                letters.append((i, 1))
                changed = True
    return BraidWord(max(n, 1), tuple(letters))


def half_twist(n: int) -> BraidWord:
    """The Garside element on ``n`` strands as a positive word."""
    return permutation_word(Permutation(tuple(reversed(range(n)))))


@dataclass(frozen=True)
class GeneralizedBraid:
    """A braid word whose strands end on an arbitrary finite set ``endpoints``.

    ``endpoints`` is stored ascending. The strand starting at ``i`` ends at
    ``endpoints[p(i)]`` where ``p`` is the underlying permutation of ``word``:
    the word is read after straightening the endpoints onto ``0..m-1`` in
    their natural order.
    """

    word: BraidWord
    endpoints: tuple[int, ...] = field(default=())

    def __post_init__(self):
        ends = tuple(self.endpoints) if self.endpoints else tuple(range(self.word.strands))
        if len(ends) != self.word.strands:
            raise ValueError(f"{len(ends)} endpoints for {self.word.strands} strands")
        if any(b <= a for a, b in zip(ends, ends[1:])) or (ends and ends[0] < 0):
            raise ValueError(f"endpoints must be strictly increasing naturals: {ends}")
        object.__setattr__(self, "endpoints", ends)

    @classmethod
    def plain(cls, word: BraidWord) -> GeneralizedBraid:
        return cls(word, tuple(range(word.strands)))

    @property
    def strands(self) -> int:
        return self.word.strands

    def matching(self) -> tuple[int, ...]:
        """``matching()[i]`` is the endpoint reached by the strand starting at ``i``."""
        p = underlying_permutation(self.word)
        return tuple(self.endpoints[p(i)] for i in range(self.strands))

    def is_plain(self) -> bool:
        return self.endpoints == tuple(range(self.strands))

    def is_pure(self) -> bool:
        return self.is_plain() and is_pure(self.word)

    def __str__(self) -> str:
        return f"{format_word(self.word)} | E={','.join(map(str, self.endpoints))}"


def delete_strand(f: GeneralizedBraid | BraidWord, start_index: int) -> GeneralizedBraid:
    """Forget the strand that starts at ``start_index``.

    Letters crossing the forgotten strand are dropped and letters above it
    shift down by one position; its endpoint leaves the endpoint set.
    """
    if isinstance(f, BraidWord):
        f = GeneralizedBraid.plain(f)
    m = f.strands
    if not 0 <= start_index < m:
        raise IndexError(f"strand {start_index} out of range on {m} strands")
    if m == 1:
        raise ValueError("cannot delete the only strand")
    lost = f.matching()[start_index]
    p = start_index
    letters = []
    for i, e in f.word.letters:
        if i == p:
            p = i + 1
        elif i + 1 == p:
            p = i
        elif i > p:
            letters.append((i - 1, e))
        else:
            letters.append((i, e))
    ends = tuple(x for x in f.endpoints if x != lost)
    return GeneralizedBraid(BraidWord(m - 1, tuple(letters)), ends)


def relabel(f: GeneralizedBraid, shift) -> GeneralizedBraid:
    """Push the endpoint set through a strictly increasing map ``shift``.

    ``shift`` may be a callable or a mapping defined on the endpoints.
    """
    fn = shift.__getitem__ if hasattr(shift, "__getitem__") else shift
    ends = tuple(fn(x) for x in f.endpoints)
    if any(b <= a for a, b in zip(ends, ends[1:])):
        raise ValueError("relabeling must be strictly increasing on the endpoints")
    return GeneralizedBraid(f.word, ends)

