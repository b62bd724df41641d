"""
Truncated automorphisms of the unrestricted free product and the (†) property.

A level map ``h`` sends the free group on ``d_0 .. d_{m-1}`` to the free group
on ``d_e`` for ``e`` in a finite set ``E``. It has the (†) shape when every
``h(d_i)`` is ``U_i^-1 d_sigma(i) U_i`` for a bijection ``sigma: m -> E`` and
the ordered product of generators is preserved. Braids induce such maps
through the Artin action; bounded search recovers a braid from a map.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .freegroup import (
    FreeWord,
    conjugate_form,
    format_free,
    generator_images,
    letter_images,
    parse_free,
    project,
    substitute,
)
from .tower import OmegaBraidTower
from .words import BraidWord, GeneralizedBraid


class ExtractionError(AssertionError):
    """A braid-induced map failed to have conjugate-of-generator images."""


@dataclass(frozen=True)
class DaggerAutomorphism:
    """Images ``images[i]`` of ``d_i`` (``i < m``), as words over generators in ``endpoints``."""

    endpoints: tuple[int, ...]
    images: tuple[FreeWord, ...]

    @classmethod
    def from_conjugators(cls, endpoints, sigma, conjugators) -> DaggerAutomorphism:
        images = tuple(u.inverse() * FreeWord.gen(s) * u for s, u in zip(sigma, conjugators))
        return cls(tuple(endpoints), images)

    @classmethod
    def identity(cls, m: int) -> DaggerAutomorphism:
        return cls(tuple(range(m)), tuple(FreeWord.gen(i) for i in range(m)))

    @property
    def size(self) -> int:
        return len(self.images)

    def conjugate_data(self) -> list[tuple[FreeWord, int] | None]:
        return [conjugate_form(w) for w in self.images]

    def sigma(self) -> tuple[int, ...] | None:
        data = self.conjugate_data()
        if any(d is None for d in data):
            return None
        return tuple(j for _, j in data)

    def conjugators(self) -> tuple[FreeWord, ...] | None:
        data = self.conjugate_data()
        if any(d is None for d in data):
            return None
        return tuple(u for u, _ in data)

    def __call__(self, w: FreeWord) -> FreeWord:
        return substitute(w, dict(enumerate(self.images)))


def induced_level_map(f: GeneralizedBraid | BraidWord) -> DaggerAutomorphism:
    """The map on free groups induced by a (generalized) braid.

    Generators are acted on by the Artin action of the word and the targets are
    renamed from positions ``0..m-1`` to the endpoint labels.
    """
    if isinstance(f, BraidWord):
        f = GeneralizedBraid.plain(f)
    rename = dict(enumerate(f.endpoints))
    images = tuple(
        FreeWord(tuple((rename[g], e) for g, e in w.letters))
        for w in generator_images(f.word)
    )
    h = DaggerAutomorphism(f.endpoints, images)
    sigma = h.sigma()
    if sigma is None or sigma != f.matching():
        raise ExtractionError(f"braid {f} induced a map without (†) shape")
    return h


@dataclass
class DaggerReport:
    failures: list[str] = field(default_factory=list)
    isomorphism: str = "unverified"
    witness: BraidWord | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"fail: {x}" for x in self.failures]
        if self.isomorphism == "verified":
            out.append(f"isomorphism verified by witness {self.witness}")
        else:
            out.append("unverified isomorphism")
        return out


def check_dagger(h: DaggerAutomorphism, witness: BraidWord | None = None,
                 max_length: int | None = None) -> DaggerReport:
    """Check the (†) conditions for ``h``.

    Invertibility is certified only by a braid inducing ``h``: either the
    supplied ``witness`` or one found by :func:`reconstruct_braid` within
    ``max_length`` letters. Without one the report says "unverified
    isomorphism" but does not fail.
    """
    report = DaggerReport()
    m, ends = h.size, h.endpoints
    if len(ends) != m:
        report.failures.append(f"{len(ends)} endpoints for {m} generators")
    if any(b <= a for a, b in zip(ends, ends[1:])):
        report.failures.append("endpoints not strictly increasing")
    allowed = set(ends)
    sigma = []
    for i, w in enumerate(h.images):
        outside = w.support() - allowed
        if outside:
            report.failures.append(f"image of d{i} uses generators {sorted(outside)} outside E")
        data = conjugate_form(w)
        if data is None:
            report.failures.append(f"image of d{i} is not a conjugate of a generator: {format_free(w) or '1'}")
        else:
            sigma.append(data[1])
    if len(sigma) == m and sorted(sigma) != sorted(ends):
        report.failures.append(f"sigma {sigma} is not a bijection onto E")
    product = FreeWord()
    for w in h.images:
        product = product * w
    target = FreeWord(tuple((e, 1) for e in ends))
    if product != target:
        report.failures.append(f"product condition: got {format_free(product) or '1'}, want {format_free(target) or '1'}")
    if report.failures:
        return report

    if witness is not None:
        if witness.strands == m and induced_level_map(GeneralizedBraid(witness, ends)) == h:
            report.isomorphism, report.witness = "verified", witness
        else:
            report.failures.append(f"witness {witness} does not induce this map")
    elif max_length is not None:
        found = reconstruct_braid(h, max_length)
        if found is not None:
            report.isomorphism, report.witness = "verified", found
    return report


def check_diagram(h_m: DaggerAutomorphism, h_n: DaggerAutomorphism) -> bool:
    """Whether projecting after ``h_m`` equals ``h_n`` after projecting.

    Both composites go from the free group on ``m`` generators to the free
    group on ``E_n``; they are compared on every generator.
    """
    m, n = h_m.size, h_n.size
    if n > m:
        raise ValueError(f"need n <= m, got n={n}, m={m}")
    if not set(h_n.endpoints) <= set(h_m.endpoints):
        raise ValueError("E_n must be contained in E_m")
    keep = set(h_n.endpoints)
    for i in range(m):
        lhs = project(h_m.images[i], keep)
        rhs = h_n.images[i] if i < n else FreeWord()
        if lhs != rhs:
            return False
    return True


# --- reconstruction by bounded search ------------------------------------

def _letter_order(m: int) -> list[tuple[int, int]]:
    return [(i, e) for i in range(m - 1) for e in (1, -1)]


class _SearchTable:
    """Breadth-first table from induced maps to their shortlex-least braid words."""

    def __init__(self, m: int):
        self.m = m
        start = tuple(FreeWord.gen(i) for i in range(m))
        self.found: dict[tuple[FreeWord, ...], tuple] = {start: ()}
        self.frontier = [start]
        self.depth = 0
        self.lock = threading.Lock()
        self.subs = {x: letter_images(*x) for x in _letter_order(m)}

    def extend_to(self, length: int):
        while self.depth < length and self.frontier:
            nxt = []
            for state in self.frontier:
                word = self.found[state]
                for x in _letter_order(self.m):
                    if word and word[-1] == (x[0], -x[1]):
                        continue
                    image = tuple(substitute(w, self.subs[x]) for w in state)
                    if image not in self.found:
                        self.found[image] = word + (x,)
                        nxt.append(image)
            self.frontier = nxt
            self.depth += 1

    def lookup(self, images: tuple[FreeWord, ...], length: int) -> tuple | None:
        with self.lock:
            self.extend_to(length)
            word = self.found.get(images)
        if word is None or len(word) > length:
            return None
        return word


_TABLES: dict[int, _SearchTable] = {}
_TABLES_LOCK = threading.Lock()


def _table(m: int) -> _SearchTable:
    with _TABLES_LOCK:
        if m not in _TABLES:
            _TABLES[m] = _SearchTable(m)
        return _TABLES[m]


def reconstruct_braid(h: DaggerAutomorphism, max_length: int) -> BraidWord | None:
    """A braid word of length at most ``max_length`` inducing ``h``, or ``None``.

    Endpoint labels are first straightened to ``0..m-1``. The witness returned
    is the shortlex-least one (letters ordered s0, s0^-1, s1, s1^-1, ...).
    """
    m = h.size
    if m == 0:
        return None
    rank = {e: k for k, e in enumerate(h.endpoints)}
    try:
        images = tuple(FreeWord(tuple((rank[g], e) for g, e in w.letters)) for w in h.images)
    except KeyError:
        return None
    if m == 1:
        return BraidWord.identity(1) if images == (FreeWord.gen(0),) else None
    word = _table(m).lookup(images, max_length)
    return None if word is None else BraidWord(m, word)


# --- automorphism towers -------------------------------------------------

@dataclass
class AutomorphismTower:
    levels: list[DaggerAutomorphism]

    def check(self) -> list[str]:
        """Nesting and diagram compatibility for every pair ``n <= m``."""
        failures = []
        for a, h_m in enumerate(self.levels):
            for h_n in self.levels[:a]:
                if not set(h_n.endpoints) <= set(h_m.endpoints):
                    failures.append(f"E_{h_n.size} not inside E_{h_m.size}")
                elif not check_diagram(h_m, h_n):
                    failures.append(f"diagram fails for levels {h_n.size} <= {h_m.size}")
        return failures


def induced_tower(t: OmegaBraidTower, horizon: int) -> AutomorphismTower:
    return AutomorphismTower([induced_level_map(g) for g in t.levels(horizon)])


# --- file format ---------------------------------------------------------

def format_dagger(h: DaggerAutomorphism) -> str:
    lines = [f"DAGGER m={h.size} E={','.join(map(str, h.endpoints))}"]
    lines += [f"{i} -> {format_free(w) or '1'}" for i, w in enumerate(h.images)]
    return "\n".join(lines) + "\n"


def parse_dagger(text: str) -> DaggerAutomorphism:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("DAGGER"):
        raise ValueError("missing 'DAGGER' header")
    header = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    m = int(header["m"])
    ends = tuple(int(x) for x in header["E"].split(",")) if header.get("E") else ()
    images: dict[int, FreeWord] = {}
    for ln in lines[1:]:
        left, sep, right = ln.partition("->")
        if not sep:
            raise ValueError(f"bad image line {ln!r}")
        images[int(left)] = parse_free(right.strip())
    if sorted(images) != list(range(m)):
        raise ValueError(f"expected images for 0..{m - 1}, got {sorted(images)}")
    return DaggerAutomorphism(ends, tuple(images[i] for i in range(m)))
