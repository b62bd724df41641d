"""
Left-greedy Garside normal form.

Every braid is written uniquely as Δ^k x_1 ... x_r, with Δ the half twist and
each x_j a simple braid (a positive braid in which every pair of strands
crosses at most once) other than 1 and Δ, such that each adjacent pair
(x_j, x_{j+1}) is left-weighted. Simple braids are stored as permutations
(start index -> end position), matching :func:`words.underlying_permutation`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import BraidWord, Permutation, permutation_word

Perm = tuple[int, ...]


@dataclass(frozen=True)
class NormalForm:
    strands: int
    infimum: int
    factors: tuple[Permutation, ...]

    def is_trivial(self) -> bool:
        return self.infimum == 0 and not self.factors

    def canonical_length(self) -> int:
        return len(self.factors)

    def to_word(self) -> BraidWord:
        """A word representing the same braid."""
        n = self.strands
        delta = permutation_word(Permutation(tuple(reversed(range(n))))).letters
        letters: tuple = ()
        if self.infimum >= 0:
            letters = delta * self.infimum
        else:
            inv = tuple((i, -e) for i, e in reversed(delta))
            letters = inv * (-self.infimum)
        for x in self.factors:
            letters += permutation_word(x).letters
        return BraidWord(n, letters)

    def __str__(self) -> str:
        body = " ".join("[" + ",".join(map(str, x.images)) + "]" for x in self.factors)
        return f"D^{self.infimum}" + (f" {body}" if body else "")


def _right_mul(a: Perm, i: int) -> Perm:
    # a * s_i: swap the strands sitting at end positions i, i+1
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in a)


def _left_div(b: Perm, i: int) -> Perm:
    # s_i^-1 * b: strands starting at i, i+1 trade their end positions
    b = list(b)
    b[i], b[i + 1] = b[i + 1], b[i]
    return tuple(b)


def _finishing(a: Perm) -> set[int]:
    where = [0] * len(a)
    for start, end in enumerate(a):
        where[end] = start
    return {i for i in range(len(a) - 1) if where[i] > where[i + 1]}


def _starting(b: Perm) -> set[int]:
    return {i for i in range(len(b) - 1) if b[i] > b[i + 1]}


def _make_left_weighted(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    while True:
        extra = _starting(b) - _finishing(a)
        if not extra:
            return a, b
        i = min(extra)
        a, b = _right_mul(a, i), _left_div(b, i)


def _tau(x: Perm) -> Perm:
    # Δ x Δ^-1: conjugation by the half twist reverses positions
    n = len(x)
    return tuple(n - 1 - x[n - 1 - k] for k in range(n))


class _Builder:
    """Δ^inf * factors, kept in normal form under right multiplication."""

    def __init__(self, n: int):
        self.n = n
        self.inf = 0
        self.factors: list[Perm] = []
        self.identity = tuple(range(n))
        self.delta = tuple(reversed(range(n)))

    def mul_simple(self, s: Perm):
        fs = self.factors
        fs.append(s)
        k = len(fs) - 2
        while k >= 0:
            a, b = _make_left_weighted(fs[k], fs[k + 1])
            if (a, b) == (fs[k], fs[k + 1]):
                break
            fs[k], fs[k + 1] = a, b
            k -= 1
        while fs and fs[0] == self.delta:
            fs.pop(0)
            self.inf += 1
        while fs and fs[-1] == self.identity:
            fs.pop()

    def mul_delta_inverse(self):
        self.inf -= 1
        self.factors = [_tau(x) for x in self.factors]

    def mul_letter(self, i: int, e: int):
        s = _right_mul(self.identity, i)
        if e > 0:
            self.mul_simple(s)
        else:
            # s_i^-1 = Δ^-1 (Δ s_i^-1)
            self.mul_delta_inverse()
            self.mul_simple(_right_mul(self.delta, i))


def garside_normal_form(f: BraidWord) -> NormalForm:
    b = _Builder(f.strands)
    for i, e in f.letters:
        b.mul_letter(i, e)
    return NormalForm(f.strands, b.inf, tuple(Permutation(x) for x in b.factors))
