"""ASCII and SVG braid diagrams drawn from the crossing sweep of a PL braid."""

from __future__ import annotations

from .geometry import PLBraid, crossing_events

SVG_WIDTH = 100
ROW_HEIGHT = 40


def render(b: PLBraid, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(b)
    if fmt == "svg":
        return render_svg(b)
    raise ValueError(f"unsupported format {fmt!r} (use ascii or svg)")


def render_ascii(b: PLBraid) -> str:
    """Strands run left to right, one row per position.

    A crossing of positions ``i, i+1`` draws ``\\`` between the rows when the
    strand coming from the upper row ``i`` is in front, ``/`` otherwise.
    """
    m = b.size
    rows = [[] for _ in range(2 * m - 1)]
    for ev in crossing_events(b):
        for r in range(len(rows)):
            top = 2 * ev.position
            if r == top:
                rows[r].append("-\\ /")
            elif r == top + 1:
                rows[r].append("  \\ " if ev.sign > 0 else "  / ")
            elif r == top + 2:
                rows[r].append("-/ \\")
            elif r % 2 == 0:
                rows[r].append("----")
            else:
                rows[r].append("    ")
    width = len(str(max(m - 1, 0)))
    out = []
    for r, cells in enumerate(rows):
        label = str(r // 2).rjust(width) if r % 2 == 0 else " " * width
        tail = "-" if r % 2 == 0 else ""
        out.append((label + " " + "".join(cells) + tail).rstrip())
    return "\n".join(out) + "\n"


def _fmt(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def render_svg(b: PLBraid) -> str:
    """A ``100 x 40*m`` drawing; the strand behind at a crossing is drawn with a gap.

    Crossings are placed left to right in sweep order.
    """
    m = b.size
    events = crossing_events(b)
    height = ROW_HEIGHT * m
    # evenly spaced in sweep order, so simultaneous crossings stay apart
    xs = [SVG_WIDTH * (k + 1) / (len(events) + 1) for k in range(len(events))]
    gaps = [b_ - a for a, b_ in zip([0.0] + xs, xs + [float(SVG_WIDTH)])]
    half = min([4.0] + [g / 2 for g in gaps])

    def y(pos: int) -> float:
        return ROW_HEIGHT * pos + ROW_HEIGHT / 2

    # one polyline per strand, split where it passes behind
    at = list(range(m))
    paths: dict[int, list[list[tuple[float, float]]]] = {k: [[(0.0, y(k))]] for k in range(m)}
    for ev, x in zip(events, xs):
        i = ev.position
        left, right = at[i], at[i + 1]
        back = right if ev.sign > 0 else left
        for s, (p0, p1) in ((left, (i, i + 1)), (right, (i + 1, i))):
            seg = paths[s][-1]
            seg.append((x - half, y(p0)))
            if s == back:
                mid_x, mid_y = x, (y(p0) + y(p1)) / 2
                seg.append((mid_x - half / 2, mid_y + (y(p0) - mid_y) / 2))
                paths[s].append([(mid_x + half / 2, mid_y + (y(p1) - mid_y) / 2)])
            paths[s][-1].append((x + half, y(p1)))
        at[i], at[i + 1] = right, left
    for pos, s in enumerate(at):
        paths[s][-1].append((float(SVG_WIDTH), y(pos)))

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{height}" '
        f'viewBox="0 0 {SVG_WIDTH} {height}">'
    ]
    for s in range(m):
        for seg in paths[s]:
            pts = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in seg)
            lines.append(f'  <polyline points="{pts}" fill="none" stroke="black" stroke-width="2" data-strand="{s}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
