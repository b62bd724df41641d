"""
Piecewise-linear braids in C x [0, 1] with exact rational coordinates.

A strand is a list of breakpoints ``(t, z)`` with ``t`` strictly increasing
from 0 to 1 and ``z`` a Gaussian rational; between breakpoints it moves
linearly. All predicates are exact sign tests on :class:`fractions.Fraction`.

Crossings are read off by projecting onto the real axis. At a crossing the
strand with the smaller imaginary part is in front, so the generator s_i
(strand from position ``i`` in front) corresponds to a counterclockwise
half turn of the two strands.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .words import BraidWord, GeneralizedBraid, Permutation


@dataclass(frozen=True, order=True)
class CPoint:
    """A Gaussian rational ``re + im*i``; ordering is lexicographic."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, o: CPoint) -> CPoint:
        return CPoint(self.re + o.re, self.im + o.im)

    def __sub__(self, o: CPoint) -> CPoint:
        return CPoint(self.re - o.re, self.im - o.im)

    def scale(self, s) -> CPoint:
        return CPoint(self.re * s, self.im * s)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        return f"{self.re}+{self.im}i"


def cpoint(value) -> CPoint:
    """Coerce ints, Fractions, ``(re, im)`` pairs, complex or ``"p/q+r/si"`` text."""
    if isinstance(value, CPoint):
        return value
    if isinstance(value, tuple):
        return CPoint(Fraction(value[0]), Fraction(value[1]))
    if isinstance(value, complex):
        return CPoint(Fraction(value.real), Fraction(value.imag))
    if isinstance(value, str):
        return parse_cpoint(value)
    return CPoint(Fraction(value))


_CPOINT = re.compile(r"^\s*([-+]?\d+(?:/\d+)?)(?:\s*\+\s*([-+]?\d+(?:/\d+)?)i)?\s*$")


def parse_cpoint(text: str) -> CPoint:
    m = _CPOINT.match(text)
    if not m:
        raise ValueError(f"bad rational complex number {text!r}")
    return CPoint(Fraction(m.group(1)), Fraction(m.group(2) or 0))


Breakpoint = tuple[Fraction, CPoint]


def _lerp(a: CPoint, b: CPoint, s: Fraction) -> CPoint:
    return a + (b - a).scale(s)


@dataclass(frozen=True)
class PLBraid:
    """Strands ordered by start point; ``strands[k]`` is a tuple of breakpoints."""

    strands: tuple[tuple[Breakpoint, ...], ...]

    def __post_init__(self):
        norm = []
        for pts in self.strands:
            pts = tuple((Fraction(t), cpoint(z)) for t, z in pts)
            if len(pts) < 2 or pts[0][0] != 0 or pts[-1][0] != 1:
                raise ValueError("a strand must run from t=0 to t=1")
            if any(b[0] <= a[0] for a, b in zip(pts, pts[1:])):
                raise ValueError("breakpoint times must strictly increase")
            norm.append(pts)
        norm.sort(key=lambda pts: pts[0][1])
        starts = [pts[0][1] for pts in norm]
        if len(set(starts)) != len(starts):
            raise ValueError("start points must be distinct")
        ends = [pts[-1][1] for pts in norm]
        if len(set(ends)) != len(ends):
            raise ValueError("end points must be distinct")
        object.__setattr__(self, "strands", tuple(norm))

    @property
    def size(self) -> int:
        return len(self.strands)

    def starts(self) -> list[CPoint]:
        return [pts[0][1] for pts in self.strands]

    def ends(self) -> list[CPoint]:
        return [pts[-1][1] for pts in self.strands]

    def position(self, k: int, t) -> CPoint:
        return position_at(self.strands[k], Fraction(t))

    def is_closed(self) -> bool:
        """Whether the end points are a permutation of the start points."""
        return sorted(self.starts()) == sorted(self.ends())


def position_at(pts: Sequence[Breakpoint], t: Fraction) -> CPoint:
    for (t0, z0), (t1, z1) in zip(pts, pts[1:]):
        if t0 <= t <= t1:
            if t == t0:
                return z0
            if t == t1:
                return z1
            return _lerp(z0, z1, (t - t0) / (t1 - t0))
    raise ValueError(f"time {t} outside [0, 1]")


def sample(pts: Sequence[Breakpoint], times: Sequence[Fraction]) -> list[CPoint]:
    """Positions at the ascending ``times`` (one merged pass)."""
    out = []
    k = 0
    for t in times:
        while pts[k + 1][0] < t:
            k += 1
        (t0, z0), (t1, z1) = pts[k], pts[k + 1]
        if t == t0:
            out.append(z0)
        elif t == t1:
            out.append(z1)
        else:
            out.append(_lerp(z0, z1, (t - t0) / (t1 - t0)))
    return out


# --- exact predicates ----------------------------------------------------

def orientation(a: CPoint, b: CPoint, c: CPoint) -> int:
    """Sign of the turn a -> b -> c: 1 counterclockwise, -1 clockwise, 0 collinear."""
    det = (b.re - a.re) * (c.im - a.im) - (b.im - a.im) * (c.re - a.re)
    return (det > 0) - (det < 0)


def segment_hits_origin(d0: CPoint, d1: CPoint) -> bool:
    """Whether the closed segment from ``d0`` to ``d1`` passes through 0."""
    origin = CPoint(Fraction(0))
    if orientation(d0, d1, origin) != 0:
        return False
    dot = d0.re * d1.re + d0.im * d1.im
    return d0.is_zero() or d1.is_zero() or dot < 0


def _merged_times(*strands: Sequence[Breakpoint]) -> list[Fraction]:
    return sorted({t for pts in strands for t, _ in pts})


def strands_meet(a: Sequence[Breakpoint], b: Sequence[Breakpoint]) -> Fraction | None:
    """First time at which two strands occupy the same point, or ``None``.

    On each interval between merged breakpoints both strands are linear in
    ``t``, so their difference traces a segment; they meet iff it hits 0.
    """
    times = _merged_times(a, b)
    diffs = [za - zb for za, zb in zip(sample(a, times), sample(b, times))]
    for k in range(len(times) - 1):
        d0, d1 = diffs[k], diffs[k + 1]
        if segment_hits_origin(d0, d1):
            if d0.is_zero():
                return times[k]
            if d1.is_zero():
                return times[k + 1]
            # d0 and d1 are opposite along one line through 0
            num = d0.re if d0.re != 0 else d0.im
            den = (d0.re - d1.re) if d0.re != 0 else (d0.im - d1.im)
            return times[k] + (times[k + 1] - times[k]) * num / den
    return None


def disjointness_violations(b: PLBraid) -> list[tuple[int, int, Fraction]]:
    """Every pair of strands that meet, with the first meeting time."""
    out = []
    for i, j in itertools.combinations(range(b.size), 2):
        t = strands_meet(b.strands[i], b.strands[j])
        if t is not None:
            out.append((i, j, t))
    return out


def certify_disjoint(b: PLBraid) -> bool:
    return not disjointness_violations(b)


# --- constructions -------------------------------------------------------

def _grid_candidates(center: CPoint):
    cx, cy = round(center.re), round(center.im)
    yield CPoint(Fraction(cx), Fraction(cy))
    r = 1
    while True:
        ring = [(dx, dy) for dx in range(-r, r + 1) for dy in range(-r, r + 1) if max(abs(dx), abs(dy)) == r]
        for dx, dy in ring:
            yield CPoint(Fraction(cx + dx), Fraction(cy + dy))
        r += 1


def dogleg_connect(start: Iterable, end: Iterable) -> PLBraid:
    """Join each ``start[k]`` to ``end[k]`` through a midpoint at time 1/2.

    Midpoints are chosen greedily so that no two doglegs meet: first the
    straight-line midpoint, then the start point, then integer grid points
    spiralling out from the straight-line midpoint. Each dogleg only has to
    avoid finitely many closed rays, so the search always terminates.
    """
    starts = [cpoint(x) for x in start]
    ends = [cpoint(x) for x in end]
    if len(starts) != len(ends):
        raise ValueError("start and end must have the same length")
    if len(set(starts)) != len(starts) or len(set(ends)) != len(ends):
        raise ValueError("start and end points must be pairwise distinct")
    half = Fraction(1, 2)
    chosen: list[tuple[CPoint, CPoint, CPoint]] = []
    for x, u in zip(starts, ends):
        straight = (x + u).scale(half)

        def candidates():
            yield straight
            yield x
            yield from _grid_candidates(straight)

        for alpha in candidates():
            if all(
                not segment_hits_origin(x - y, alpha - beta)
                and not segment_hits_origin(alpha - beta, u - v)
                for y, beta, v in chosen
            ):
                chosen.append((x, alpha, u))
                break
    return PLBraid(tuple(
        ((Fraction(0), x), (half, alpha), (Fraction(1), u)) for x, alpha, u in chosen
    ))


def word_to_pl(f: BraidWord) -> PLBraid:
    """Realize ``f`` on the points ``0..n-1`` of the real axis.

    Letter ``k`` occupies the time slice ``[k/L, (k+1)/L]``; the two strands
    involved swap through the midpoint, the left one passing below (for s_i)
    or above (for s_i^-1) in the imaginary direction.
    """
    n, total = f.strands, len(f.letters)
    at = list(range(n))  # at[position] = strand index
    paths: list[list[Breakpoint]] = [[(Fraction(0), CPoint(Fraction(k)))] for k in range(n)]
    for k, (i, e) in enumerate(f.letters):
        t_mid = Fraction(2 * k + 1, 2 * total)
        t_end = Fraction(k + 1, total)
        left, right = at[i], at[i + 1]
        mid = Fraction(2 * i + 1, 2)
        paths[left].append((t_mid, CPoint(mid, Fraction(-e, 2))))
        paths[right].append((t_mid, CPoint(mid, Fraction(e, 2))))
        at[i], at[i + 1] = right, left
        for pos, s in enumerate(at):
            paths[s].append((t_end, CPoint(Fraction(pos))))
    if total == 0:
        for k in range(n):
            paths[k].append((Fraction(1), CPoint(Fraction(k))))
    return PLBraid(tuple(tuple(p) for p in paths))


def _reparam(pts: Sequence[Breakpoint], t0: Fraction, t1: Fraction) -> list[Breakpoint]:
    return [(t0 + (t1 - t0) * t, z) for t, z in pts]


def _join(*pieces: Sequence[Breakpoint]) -> tuple[Breakpoint, ...]:
    """Concatenate strand pieces spread evenly over [0, 1]."""
    k = len(pieces)
    out: list[Breakpoint] = []
    for j, pts in enumerate(pieces):
        seg = _reparam(pts, Fraction(j, k), Fraction(j + 1, k))
        if out:
            if out[-1][1] != seg[0][1]:
                raise ValueError("pieces do not connect")
            seg = seg[1:]
        out.extend(seg)
    return tuple(out)


def _reverse(pts: Sequence[Breakpoint]) -> list[Breakpoint]:
    return [(1 - t, z) for t, z in reversed(pts)]


def _by_start(b: PLBraid) -> dict[CPoint, tuple[Breakpoint, ...]]:
    return {pts[0][1]: pts for pts in b.strands}


def pl_compose(f: PLBraid, g: PLBraid) -> PLBraid:
    """``f`` followed by ``g`` relabeled by the end permutation of ``f``."""
    if not f.is_closed() or sorted(f.starts()) != sorted(g.starts()):
        raise ValueError("pl_compose needs two braids on the same point set")
    gs = _by_start(g)
    return PLBraid(tuple(_join(pts, gs[pts[-1][1]]) for pts in f.strands))


def pl_inverse(f: PLBraid) -> PLBraid:
    if not f.is_closed():
        raise ValueError("pl_inverse needs a braid returning to its start set")
    return PLBraid(tuple(tuple(_reverse(pts)) for pts in f.strands))


def relabel_isomorphism(f: PLBraid, phi: Mapping) -> PLBraid:
    """Transport a braid on ``X`` to one on ``Y = phi(X)``.

    With ``h`` a dogleg path taking each ``y`` to ``phi^-1(y)``, strand ``y``
    of the result runs ``h`` forward, then the strand of ``f`` starting at
    ``phi^-1(y)``, then ``h`` backward into ``phi`` of that strand's end.
    """
    phi = {cpoint(k): cpoint(v) for k, v in phi.items()}
    xs = f.starts()
    if sorted(phi) != sorted(xs):
        raise ValueError("phi must be defined exactly on the start points of f")
    if len(set(phi.values())) != len(phi):
        raise ValueError("phi must be injective")
    if not f.is_closed():
        raise ValueError("f must return to its start set")
    ys = sorted(phi.values())
    back = {v: k for k, v in phi.items()}
    h = _by_start(dogleg_connect(ys, [back[y] for y in ys]))
    fs = _by_start(f)
    strands = []
    for y in ys:
        mid = fs[back[y]]
        y_end = phi[mid[-1][1]]
        strands.append(_join(h[y], mid, _reverse(h[y_end])))
    return PLBraid(tuple(strands))


def endpoint_permutation(b: PLBraid) -> Permutation:
    """Rank of each strand's end point among all end points (strands in start order)."""
    ends = b.ends()
    order = {z: k for k, z in enumerate(sorted(ends))}
    return Permutation(tuple(order[z] for z in ends))


# --- reading words off geometry ------------------------------------------

@dataclass(frozen=True)
class CrossingEvent:
    time: Fraction
    position: int
    sign: int


class NonGenericError(ValueError):
    def __init__(self, message: str, time: Fraction | None = None):
        super().__init__(message if time is None else f"{message} at t={time}")
        self.time = time


def _tilts():
    yield Fraction(0)
    for k in range(1, 40):
        for s in (1, -1):
            yield Fraction(s, 3**k)


def _sweep(b: PLBraid, eps: Fraction) -> list[tuple[Fraction, int, int, int]]:
    """Pairwise crossings ``(time, strand_a, strand_b)`` of the projection ``re + eps*im``.

    Raises :class:`NonGenericError` if two strands share a projection over an
    interval or touch it without crossing.
    """
    def proj(z: CPoint) -> Fraction:
        return z.re + eps * z.im

    times = _merged_times(*b.strands)
    pos = [[proj(z) for z in sample(pts, times)] for pts in b.strands]
    events = []
    for a, c in itertools.combinations(range(b.size), 2):
        d = [pa - pc for pa, pc in zip(pos[a], pos[c])]
        if d[0] == 0 or d[-1] == 0:
            raise NonGenericError("equal projections at an end", times[0 if d[0] == 0 else -1])
        k = 0
        while k < len(times) - 1:
            if d[k + 1] == 0:
                j = k + 1
                if d[j + 1] == 0:
                    raise NonGenericError("strands share a projection over an interval", times[j])
                if (d[k] > 0) == (d[j + 1] > 0):
                    raise NonGenericError("projections touch without crossing", times[j])
                events.append((times[j], a, c))
                k = j + 1
                continue
            if (d[k] > 0) != (d[k + 1] > 0):
                t = times[k] + (times[k + 1] - times[k]) * d[k] / (d[k] - d[k + 1])
                events.append((t, a, c))
            k += 1
    events.sort()
    return events


def crossing_events(b: PLBraid) -> list[CrossingEvent]:
    """Crossings of ``b`` in time order, for the first generic projection tilt."""
    return _read(b)[0]


def _resolve(b: PLBraid, raw, eps: Fraction) -> tuple[list[CrossingEvent], list[int]]:
    """Turn pairwise crossings into generator events, in time order.

    Strands meeting the same projection line at the same instant must fill a
    block of consecutive positions and cross pairwise. They sit at distinct
    points of that line, so near the instant the braid is the layered
    reversal of the block. It is emitted as adjacent swaps, each signed by
    which strand is nearer the front.
    """
    order = list(range(b.size))  # strands sorted by start point already
    out = []
    for t, group in itertools.groupby(raw, key=lambda ev: ev[0]):
        pairs = {frozenset((a, c)) for _, a, c in group}
        for block in _clusters(pairs):
            where = sorted(order.index(s) for s in block)
            lo, hi = where[0], where[-1]
            if hi - lo + 1 != len(block) or len(pairs & _all_pairs(block)) != len(block) * (len(block) - 1) // 2:
                raise NonGenericError("crossing of non-adjacent strands", t)
            front = {}
            for s in block:
                z = b.position(s, t)
                front[s] = z.im - eps * z.re
            for r in range(hi - lo):
                for i in range(lo, hi - r):
                    left, right = order[i], order[i + 1]
                    out.append(CrossingEvent(t, i, 1 if front[left] < front[right] else -1))
                    order[i], order[i + 1] = right, left
    return out, order


def _all_pairs(block) -> set[frozenset]:
    return {frozenset(p) for p in itertools.combinations(block, 2)}


def _clusters(pairs: set[frozenset]) -> list[set[int]]:
    """Connected components of the graph whose edges are ``pairs``."""
    comps: list[set[int]] = []
    for edge in pairs:
        touching = [c for c in comps if c & edge]
        merged = set(edge).union(*touching)
        comps = [c for c in comps if not c & edge] + [merged]
    return sorted(comps, key=min)


def _read(b: PLBraid) -> tuple[list[CrossingEvent], list[int]]:
    bad = disjointness_violations(b)
    if bad:
        i, j, t = bad[0]
        raise ValueError(f"strands {i} and {j} meet at t={t}")
    starts, ends = b.starts(), b.ends()
    last_error = None
    for eps in _tilts():
        def proj(z: CPoint) -> Fraction:
            return z.re + eps * z.im

        # the tilt must not reorder start or end points relative to (re, im)
        if sorted(starts, key=proj) != sorted(starts) or sorted(ends, key=proj) != sorted(ends):
            continue
        if len({proj(z) for z in starts}) < len(starts) or len({proj(z) for z in ends}) < len(ends):
            continue
        try:
            raw = _sweep(b, eps)
        except NonGenericError as exc:
            last_error = exc
            continue
        try:
            return _resolve(b, raw, eps)
        except NonGenericError as exc:
            last_error = exc
    raise last_error or NonGenericError("no generic projection found")


def pl_to_word(b: PLBraid) -> GeneralizedBraid:
    """Read a braid word off ``b`` by sweeping the real-axis projection in time.

    Strands are ordered by start point (real part, then imaginary part). The
    endpoint set is the end points themselves when they are naturals on the
    real axis, and their ranks ``0..m-1`` otherwise.
    """
    events, _ = _read(b)
    word = BraidWord(max(b.size, 1), tuple((ev.position, ev.sign) for ev in events))
    ends = sorted(b.ends())
    if all(z.im == 0 and z.re.denominator == 1 and z.re >= 0 for z in ends):
        labels = tuple(int(z.re) for z in ends)
    else:
        labels = tuple(range(b.size))
    return GeneralizedBraid(word, labels)


# --- file format ---------------------------------------------------------

def format_pl(b: PLBraid) -> str:
    lines = [f"PL strands={b.size}"]
    for pts in b.strands:
        body = ";".join(f"({t},{z})" for t, z in pts)
        lines.append(f"x={pts[0][1]} : {body}")
    return "\n".join(lines) + "\n"


_BREAK = re.compile(r"\(\s*([^,()]+)\s*,\s*([^()]+)\s*\)")


def parse_pl(text: str) -> PLBraid:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("PL"):
        raise ValueError("missing 'PL' header")
    header = dict(tok.split("=", 1) for tok in lines[0].split()[1:])
    m = int(header["strands"])
    strands = []
    for ln in lines[1:]:
        label, sep, body = ln.partition(":")
        if not sep or not label.strip().startswith("x="):
            raise ValueError(f"bad strand line {ln!r}")
        x = parse_cpoint(label.strip()[2:])
        pts = tuple((Fraction(t), parse_cpoint(z)) for t, z in _BREAK.findall(body))
        if not pts or pts[0][1] != x:
            raise ValueError(f"strand labelled {x} does not start there")
        strands.append(pts)
    if len(strands) != m:
        raise ValueError(f"header says {m} strands, found {len(strands)}")
    return PLBraid(tuple(strands))
