"""Convex and twisted drawings of ordered graphs as SVG, with the edge
geometry exposed for verification.

Convex style: vertices in order on a circle, straight chords; two
independent edges intersect exactly when they are a crossing pair.

Twisted style: the drawing in which two independent edges intersect
exactly when they are a nested pair.  Realization: 2m equally spaced
circle positions with a gap sector at the top; vertex v sits at position
v, and edge (i, j) is drawn as the chord from position i to position
2m - j.  For integer endpoints i < j and k < l, the chords {i, 2m-j} and
{k, 2m-l} interleave on the circle exactly when the edges are nested, so
chord intersections realize the predicate.  For j < m the chord lands at
a port rather than at vertex j, and an exterior whisker (radial leg, an
arc over the gap at an edge-specific radius, radial leg) carries it back
to vertex j; whisker radii grow with the right endpoint, which makes
every whisker interaction between independent edges vacuous (the radial
legs of an edge with smaller right endpoint stay below every arc that
could sweep past them).  For j = m the chord already ends at vertex m
and no whisker is needed.
"""

import math
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ordram.core import Certificate, Edge, OrderedColoring, _as_edge

RADIUS = 100.0
WHISKER_PAD = 14.0
WHISKER_STEP = 9.0
ARC_SAMPLES = 96

PALETTE = (
    "#c0392b", "#2556a8", "#1e8449", "#b8860b", "#7d3c98",
    "#148f77", "#a04000", "#5d6d7e",
)

STYLES = ("convex", "twisted")


def _check_style(style: str) -> None:
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}; choose from {STYLES}")


def _angle_convex(m: int, v: int) -> float:
    return math.pi / 2 + 2 * math.pi * (v - 1) / max(m, 1)

_GAP_SLOTS = 1  # empty positions left free for the whisker arcs to pass


def _angle_twisted(m: int, position: float) -> float:
    slots = 2 * m + _GAP_SLOTS
    return math.pi / 2 + 2 * math.pi * position / slots


def vertex_positions(m: int, style: str) -> dict:
    """Vertex -> (x, y) for the chosen style."""
    _check_style(style)
    out = {}
    for v in range(1, m + 1):
        a = _angle_convex(m, v) if style == "convex" else _angle_twisted(m, v)
        out[v] = (RADIUS * math.cos(a), RADIUS * math.sin(a))
    return out


def _whisker_radius(m: int, e: Edge) -> float:
    return RADIUS + WHISKER_PAD + WHISKER_STEP * (e.hi - 2 + e.lo / (m + 1.0))


def edge_polyline(m: int, edge, style: str) -> List[Tuple[float, float]]:
    """The drawn curve of one edge as polyline points."""
    _check_style(style)
    e = _as_edge(edge)
    if e.hi > m:
        raise ValueError(f"edge {e} does not fit in [{m}]")
    if style == "convex":
        pos = vertex_positions(m, "convex")
        return [pos[e.lo], pos[e.hi]]

    def point(position: float, radius: float) -> Tuple[float, float]:
        a = _angle_twisted(m, position)
        return (radius * math.cos(a), radius * math.sin(a))

    start = point(e.lo, RADIUS)
    port_position = 2 * m - e.hi
    port = point(port_position, RADIUS)
    if e.hi == m:
        return [start, port]
    r = _whisker_radius(m, e)
    pts = [start, port, point(port_position, r)]
    slots = 2 * m + _GAP_SLOTS
    sweep_end = e.hi + slots  # wrap past the gap sector to position hi
    for k in range(1, ARC_SAMPLES + 1):
        position = port_position + (sweep_end - port_position) * k / ARC_SAMPLES
        pts.append(point(position, r))
    pts.append(point(e.hi, RADIUS))
    return pts


def _normalize(obj, m: Optional[int]):
    """-> (m, [(edge, color)], t) from a coloring, certificate, or edge set."""
    if isinstance(obj, OrderedColoring):
        return obj.m, [(e, obj.color_of(e)) for e in obj.edges()], obj.t
    if isinstance(obj, Certificate):
        edges = list(obj.edges)
        size = max((e.hi for e in edges), default=1)
        use_m = m if m is not None else size
        return use_m, [(e, obj.color) for e in edges], obj.color + 1
    edges = [_as_edge(e) for e in obj]
    size = max((e.hi for e in edges), default=1)
    use_m = m if m is not None else size
    return use_m, [(e, 0) for e in edges], 1


def render_svg(obj: Union[OrderedColoring, Certificate, Iterable], style: str,
               m: Optional[int] = None, label: str = "") -> str:
    """An SVG document drawing the coloring, certificate, or edge set."""
    _check_style(style)
    use_m, colored, _ = _normalize(obj, m)
    if use_m < 1:
        raise ValueError("need at least one vertex")
    positions = vertex_positions(use_m, style)
    pad = 30.0
    extent = RADIUS
    paths = []
    for e, color in colored:
        pts = edge_polyline(use_m, e, style)
        extent = max(extent, max(abs(x) for x, _ in pts),
                     max(abs(y) for _, y in pts))
        d = "M " + " L ".join(f"{x:.2f} {-y:.2f}" for x, y in pts)
        stroke = PALETTE[color % len(PALETTE)]
        paths.append(
            f'  <path d="{d}" fill="none" stroke="{stroke}" stroke-width="1.6" '
            f'opacity="0.85"><title>({e.lo},{e.hi}) color {color}</title></path>')
    dots = []
    for v, (x, y) in positions.items():
        dots.append(f'  <circle cx="{x:.2f}" cy="{-y:.2f}" r="3.2" fill="#111"/>')
        lx, ly = x * 1.12, y * 1.12
        dots.append(
            f'  <text x="{lx:.2f}" y="{-ly:.2f}" font-size="9" '
            f'text-anchor="middle" dominant-baseline="middle" '
            f'fill="#111">{v}</text>')
    view = extent + pad
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{-view:.1f} {-view:.1f} {2 * view:.1f} {2 * view:.1f}" '
        f'width="480" height="480">')
    title = f'  <title>{label or style + " drawing"}</title>'
    return "\n".join([head, title, *paths, *dots, "</svg>"]) + "\n"


# ------------------------------------------------------------
# Intersection checking (used by the faithfulness invariant)
# ------------------------------------------------------------

def _orient(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _segments_cross(p1, p2, q1, q2, eps: float = 1e-9) -> bool:
    """Proper (transversal) intersection of two segments."""
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    return ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and \
           ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps))


def polylines_cross(pts_a: Sequence[Tuple[float, float]],
                    pts_b: Sequence[Tuple[float, float]]) -> bool:
    """Do two polylines intersect transversally anywhere?"""
    for i in range(len(pts_a) - 1):
        for j in range(len(pts_b) - 1):
            if _segments_cross(pts_a[i], pts_a[i + 1], pts_b[j], pts_b[j + 1]):
                return True
    return False


def edges_intersect_in_drawing(m: int, e, f, style: str) -> bool:
    """Whether the drawn curves of two edges intersect transversally."""
    return polylines_cross(edge_polyline(m, e, style),
                           edge_polyline(m, f, style))
