"""
Free words over generators d_i (i a natural number) and the Artin action of
braids on them.

A letter is ``(i, e)`` with ``e = ±1``. Words are kept freely reduced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .words import BraidWord

FreeLetter = tuple[int, int]


def _reduce(letters: Iterable[FreeLetter]) -> tuple[FreeLetter, ...]:
    stack: list[FreeLetter] = []
    for g, e in letters:
        if stack and stack[-1][0] == g and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    letters: tuple[FreeLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce((int(g), int(e)) for g, e in self.letters))

    @classmethod
    def gen(cls, i: int, e: int = 1) -> FreeWord:
        return cls(((i, e),))

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def support(self) -> set[int]:
        return {g for g, _ in self.letters}

    def __str__(self) -> str:
        return format_free(self)


def free_reduce(letters: Iterable[FreeLetter]) -> FreeWord:
    return FreeWord(tuple(letters))


def project(w: FreeWord, keep) -> FreeWord:
    """Kill every generator outside ``keep`` (the projection onto a free factor)."""
    keep = set(keep)
    return FreeWord(tuple(x for x in w.letters if x[0] in keep))


def substitute(w: FreeWord, images) -> FreeWord:
    """The endomorphism sending ``d_g`` to ``images[g]`` (missing keys are fixed)."""
    out: list[FreeLetter] = []
    for g, e in w.letters:
        img = images.get(g) if hasattr(images, "get") else images[g]
        if img is None:
            out.append((g, e))
        else:
            out.extend(img.letters if e > 0 else img.inverse().letters)
    return FreeWord(tuple(out))


def format_free(w: FreeWord) -> str:
    return " ".join(f"d{g}" if e > 0 else f"d{g}^-1" for g, e in w.letters)


_FREE_LETTER = re.compile(r"d(\d+)(\^-1)?$")


def parse_free(text: str) -> FreeWord:
    """Parse ``"d0 d1^-1 d0"``; the empty string (or ``"1"``) is the identity."""
    letters = []
    tokens = text.split()
    if tokens == ["1"]:
        return FreeWord()
    for k, tok in enumerate(tokens):
        m = _FREE_LETTER.match(tok)
        if not m:
            raise ValueError(f"bad free-group letter {tok!r} (token {k})")
        letters.append((int(m.group(1)), -1 if m.group(2) else 1))
    return FreeWord(tuple(letters))


def letter_images(i: int, e: int) -> dict[int, FreeWord]:
    """Substitution for the braid letter ``(i, e)``.

    s_i:    d_i -> d_i d_{i+1} d_i^-1,   d_{i+1} -> d_i
    s_i^-1: d_i -> d_{i+1},             d_{i+1} -> d_{i+1}^-1 d_i d_{i+1}
    """
    a, b = FreeWord.gen(i), FreeWord.gen(i + 1)
    if e > 0:
        return {i: a * b * a.inverse(), i + 1: a}
    return {i: b, i + 1: b.inverse() * a * b}


def artin_action(f: BraidWord, w: FreeWord) -> FreeWord:
    """Act on ``w`` by the letters of ``f``, first letter first.

    With this order the action of ``compose(f, g)`` is the action of ``f``
    followed by that of ``g``.
    """
    bad = [g for g in w.support() if g >= f.strands]
    if bad:
        raise IndexError(f"generator d{max(bad)} out of range for {f.strands} strands")
    for i, e in f.letters:
        w = substitute(w, letter_images(i, e))
    return w


def generator_images(f: BraidWord) -> tuple[FreeWord, ...]:
    """Images of ``d_0 .. d_{n-1}`` under the action of ``f``."""
    return tuple(artin_action(f, FreeWord.gen(k)) for k in range(f.strands))


def conjugate_form(w: FreeWord) -> tuple[FreeWord, int] | None:
    """Write ``w`` as ``U^-1 d_j U`` with ``U`` shortest, returning ``(U, j)``.

    ``None`` if ``w`` is not a conjugate of a single positive generator.
    """
    n = len(w.letters)
    if n % 2 == 0:
        return None
    h = n // 2
    g, e = w.letters[h]
    if e != 1:
        return None
    left = FreeWord(w.letters[:h])
    right = FreeWord(w.letters[h + 1:])
    if len(left) != h or left.inverse() != right:
        return None
    return right, g
