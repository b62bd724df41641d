"""
Braids on countably many strands, as towers of finite restrictions.

An ω-braid is determined up to equivalence by its restrictions to the first
``m`` strands. A tower supplies those restrictions lazily, level by level, as
:class:`GeneralizedBraid` values; every check runs up to an explicit horizon
and reports that horizon, since finitely many levels only give bounded
evidence.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable

from .equivalence import generalized_equivalent, is_trivial
from .words import (
    BraidWord,
    GeneralizedBraid,
    compose,
    delete_strand,
    exponent_sum,
    inverse,
    is_pure,
    pad,
    parse_word,
    power,
    format_word,
)

Rule = Callable[[int], GeneralizedBraid]


class TowerError(ValueError):
    pass


class OmegaBraidTower:
    """Lazily materialized levels ``m = 1, 2, ...`` of an ω-braid.

    ``kind`` is ``"explicit"``, ``"finsupp"`` or ``"rule:<name>"``; ``base``
    holds the generating word of a finitely supported tower. Explicit towers
    are only defined up to their largest listed level.
    """

    def __init__(self, rule: Rule, kind: str, base: BraidWord | None = None,
                 max_level: int | None = None, levels: dict[int, GeneralizedBraid] | None = None):
        self._rule = rule
        self.kind = kind
        self.base = base
        self.max_level = max_level
        self._cache: dict[int, GeneralizedBraid] = dict(levels or {})
        self._lock = threading.Lock()

    def level(self, m: int) -> GeneralizedBraid:
        if m < 1:
            raise ValueError("levels start at 1")
        if self.max_level is not None and m > self.max_level:
            raise TowerError(f"tower only defines levels up to {self.max_level}")
        with self._lock:
            cached = self._cache.get(m)
        if cached is not None:
            return cached
        value = self._rule(m)
        if value.strands != m:
            raise TowerError(f"level {m} has {value.strands} strands")
        with self._lock:
            return self._cache.setdefault(m, value)

    def levels(self, horizon: int) -> list[GeneralizedBraid]:
        return [self.level(m) for m in range(1, horizon + 1)]

    def is_finitely_supported(self) -> bool:
        return self.kind == "finsupp"

    def __repr__(self) -> str:
        extra = f" {format_word(self.base)}" if self.base is not None else ""
        return f"<OmegaBraidTower {self.kind}{extra}>"


def restrict_word(f: BraidWord, m: int) -> GeneralizedBraid:
    """Restriction of ``f`` to its first ``m`` strands (top strands deleted)."""
    g = GeneralizedBraid.plain(f)
    while g.strands > m:
        g = delete_strand(g, g.strands - 1)
    return g


def finitely_supported(f: BraidWord) -> OmegaBraidTower:
    """The ω-braid that is ``f`` on the first strands and straight elsewhere."""
    def rule(m: int) -> GeneralizedBraid:
        if m >= f.strands:
            return GeneralizedBraid.plain(pad(f, m))
        return restrict_word(f, m)
    return OmegaBraidTower(rule, "finsupp", base=f)


def _winding_level(m: int) -> GeneralizedBraid:
    # strand k winds once around strand 0: s_{k-1}..s_1 s_0^2 s_1^-1..s_{k-1}^-1
    letters = []
    for k in range(1, m):
        down = [(i, 1) for i in range(k - 1, 0, -1)]
        up = [(i, -1) for i in range(1, k)]
        letters += down + [(0, 1), (0, 1)] + up
    return GeneralizedBraid.plain(BraidWord(m, tuple(letters)))


def winding_tower() -> OmegaBraidTower:
    """Pure ω-braid in which every strand ``k >= 1`` winds once around strand 0."""
    return OmegaBraidTower(_winding_level, "rule:winding")


def identity_tower() -> OmegaBraidTower:
    return OmegaBraidTower(lambda m: GeneralizedBraid.plain(BraidWord.identity(m)), "rule:identity")


RULES: dict[str, Callable[[], OmegaBraidTower]] = {
    "winding": winding_tower,
    "identity": identity_tower,
}


def explicit_tower(levels: dict[int, GeneralizedBraid]) -> OmegaBraidTower:
    top = max(levels, default=0)
    missing = [m for m in range(1, top + 1) if m not in levels]
    if missing:
        raise TowerError(f"explicit tower is missing levels {missing}")

    def rule(m: int) -> GeneralizedBraid:
        return levels[m]
    return OmegaBraidTower(rule, "explicit", max_level=top, levels=levels)


def shifted_tower(shift: int = 1) -> OmegaBraidTower:
    """Straight strands landing on ``shift, shift+1, ...``: coherent but never onto ω."""
    return OmegaBraidTower(
        lambda m: GeneralizedBraid(BraidWord.identity(m), tuple(range(shift, shift + m))),
        f"rule:shift{shift}",
    )


@dataclass
class CoherenceFailure:
    level: int
    condition: str
    detail: str = ""

    def __str__(self) -> str:
        return f"level {self.level}: {self.condition}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class CoherenceReport:
    horizon: int
    failures: list[CoherenceFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def validate_coherence(t: OmegaBraidTower, horizon: int) -> CoherenceReport:
    """Check cardinality, endpoint nesting and deletion coherence up to ``horizon``.

    Deletion coherence at level ``m`` compares ``level(m)`` with the
    restriction of ``level(m + 1)`` to its first ``m`` strands.
    """
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    report = CoherenceReport(horizon)
    levels = t.levels(horizon)
    for m, g in enumerate(levels, start=1):
        if len(g.endpoints) != m:
            report.failures.append(CoherenceFailure(m, "cardinality", f"|E|={len(g.endpoints)}"))
    for m in range(1, horizon):
        lower, upper = levels[m - 1], levels[m]
        if not set(lower.endpoints) <= set(upper.endpoints):
            report.failures.append(CoherenceFailure(
                m, "endpoint nesting", f"E_{m} not contained in E_{m + 1}"))
        restricted = delete_strand(upper, m)
        if not generalized_equivalent(restricted, lower):
            report.failures.append(CoherenceFailure(
                m, "deletion mismatch", f"restriction of level {m + 1} is {restricted}, level {m} is {lower}"))
    return report


def validate_surjectivity(t: OmegaBraidTower, horizon: int) -> set[int]:
    """All endpoints reached by levels up to ``horizon``.

    Onto-ness of the endpoint map is only semi-decidable; the caller compares
    the result with the initial segment it expects.
    """
    out: set[int] = set()
    for g in t.levels(horizon):
        out.update(g.endpoints)
    return out


def _require_coherent(t: OmegaBraidTower, horizon: int, name: str):
    report = validate_coherence(t, horizon)
    if not report.ok:
        raise TowerError(f"{name} is incoherent up to level {horizon}: {report.failures[0]}")


def first_difference(s: OmegaBraidTower, t: OmegaBraidTower, horizon: int) -> int | None:
    """Smallest level ``m <= horizon`` where the towers differ, or ``None``."""
    _require_coherent(s, horizon, "first tower")
    _require_coherent(t, horizon, "second tower")
    for m in range(1, horizon + 1):
        if not generalized_equivalent(s.level(m), t.level(m)):
            return m
    return None


def towers_equivalent(s: OmegaBraidTower, t: OmegaBraidTower, horizon: int) -> bool:
    """Equivalence of every level up to ``horizon``.

    A ``False`` answer is final; ``True`` means equivalent up to level ``horizon``.
    """
    return first_difference(s, t, horizon) is None


def _pure_level(t: OmegaBraidTower, m: int) -> GeneralizedBraid:
    g = t.level(m)
    if not g.is_pure():
        raise TowerError(f"level {m} is not pure; levelwise products need pure towers")
    return g


def tower_compose(s: OmegaBraidTower, t: OmegaBraidTower) -> OmegaBraidTower:
    """The product ``s`` then ``t``.

    Supported when both towers are finitely supported, or when ``s`` is pure:
    then ``t`` needs no relabeling and the product is taken levelwise. Purity
    of ``s`` is re-checked at every materialized level.
    """
    if s.is_finitely_supported() and t.is_finitely_supported():
        n = max(s.base.strands, t.base.strands)
        return finitely_supported(compose(pad(s.base, n), pad(t.base, n)))

    if s.is_finitely_supported() and not is_pure(s.base):
        raise TowerError("composition needs a pure first factor unless both towers are finitely supported")
    _pure_level(s, 1)

    def rule(m: int) -> GeneralizedBraid:
        a = _pure_level(s, m)
        b = t.level(m)
        return GeneralizedBraid(compose(a.word, b.word), b.endpoints)
    return OmegaBraidTower(rule, "rule:compose")


def tower_inverse(t: OmegaBraidTower) -> OmegaBraidTower:
    """Inverse of a finitely supported or pure tower."""
    if t.is_finitely_supported():
        return finitely_supported(inverse(t.base))
    _pure_level(t, 1)

    def rule(m: int) -> GeneralizedBraid:
        return GeneralizedBraid.plain(inverse(_pure_level(t, m).word))
    return OmegaBraidTower(rule, "rule:inverse")


def tower_power(t: OmegaBraidTower, k: int) -> OmegaBraidTower:
    if t.is_finitely_supported():
        return finitely_supported(power(t.base, k))

    def rule(m: int) -> GeneralizedBraid:
        return GeneralizedBraid.plain(power(_pure_level(t, m).word, k))
    return OmegaBraidTower(rule, "rule:power")


def is_pure_up_to(t: OmegaBraidTower, horizon: int) -> bool:
    return all(g.is_pure() for g in t.levels(horizon))


def torsion_check(t: OmegaBraidTower, m: int, horizon: int) -> bool:
    """True iff the ``m``-th power of ``t`` is trivial at every level up to ``horizon``."""
    if m < 2:
        raise ValueError("exponent must be at least 2")
    if not is_pure_up_to(t, horizon):
        raise TowerError("torsion_check expects a tower that is pure up to the horizon")
    return all(is_trivial(power(g.word, m)) for g in t.levels(horizon))


def torsion_witness_level(t: OmegaBraidTower, m: int, horizon: int) -> int | None:
    """First level at which the ``m``-th power is visibly nontrivial."""
    for k, g in enumerate(t.levels(horizon), start=1):
        if not is_trivial(power(g.word, m)):
            return k
    return None


def abelianization_push(f: BraidWord) -> BraidWord:
    """A pure braid supported on the last two strands with the exponent sum of ``f``.

    The result is ``s_{n-2}^(2k)`` on ``n`` strands, where ``2k`` is the
    exponent sum of ``f``; it keeps the first ``n - 2`` strands straight and
    has the same image in the abelianization.
    """
    if not is_pure(f):
        raise ValueError("abelianization_push needs a pure braid")
    total = exponent_sum(f)
    if total % 2:
        raise AssertionError(f"pure braid with odd exponent sum {total}: {f}")
    if total == 0:
        return BraidWord.identity(f.strands)
    return power(BraidWord(f.strands, ((f.strands - 2, 1),)), total)


# --- tower files ---------------------------------------------------------

def parse_tower(text: str) -> tuple[OmegaBraidTower, int]:
    """Read a tower file, returning the tower and its declared horizon.

    ::

        TOWER kind=explicit horizon=2
        1 | 0 | B1:
        2 | 0,1 | B2: s0 s0
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("TOWER"):
        raise TowerError("missing 'TOWER' header")
    header = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    try:
        kind = header["kind"]
        horizon = int(header["horizon"])
    except (KeyError, ValueError) as exc:
        raise TowerError(f"bad header: {lines[0]!r}") from exc
    body = lines[1:]
    if kind == "finsupp":
        if len(body) != 1:
            raise TowerError("finsupp tower needs exactly one word line")
        return finitely_supported(parse_word(body[0])), horizon
    if kind.startswith("rule:"):
        name = kind[5:]
        if name not in RULES:
            raise TowerError(f"unknown rule {name!r}; known: {', '.join(sorted(RULES))}")
        return RULES[name](), horizon
    if kind == "explicit":
        levels = {}
        for ln in body:
            parts = [p.strip() for p in ln.split("|")]
            if len(parts) != 3:
                raise TowerError(f"bad level line: {ln!r}")
            m = int(parts[0])
            ends = tuple(int(x) for x in parts[1].split(",")) if parts[1] else ()
            word = parse_word(parts[2])
            if word.strands != m:
                raise TowerError(f"level {m} word has {word.strands} strands")
            levels[m] = GeneralizedBraid(word, ends)
        return explicit_tower(levels), horizon
    raise TowerError(f"unknown tower kind {kind!r}")


def format_tower(t: OmegaBraidTower, horizon: int) -> str:
    if t.kind == "finsupp":
        return f"TOWER kind=finsupp horizon={horizon}\n{format_word(t.base)}\n"
    if t.kind.startswith("rule:") and t.kind[5:] in RULES:
        return f"TOWER kind={t.kind} horizon={horizon}\n"
    lines = [f"TOWER kind=explicit horizon={horizon}"]
    for m, g in enumerate(t.levels(horizon), start=1):
        lines.append(f"{m} | {','.join(map(str, g.endpoints))} | {format_word(g.word)}")
    return "\n".join(lines) + "\n"
