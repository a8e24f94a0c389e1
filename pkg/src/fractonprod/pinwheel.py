"""Pinwheel substitution tiling of a 2:1 rectangle, with exact rational geometry.

A tile is a right triangle with legs 1 and 2 (up to scale). It is stored by
its corners ``(right, long, short)``: the right-angle corner, the far end of
the long leg and the far end of the short leg. One substitution step replaces
it by five copies scaled by ``1/sqrt(5)``; every child corner is a fixed
rational affine combination of the parent corners, so coordinates stay in Q.

The vertex graph joins consecutive vertices along every triangle side. The
tiling is not edge-to-edge, so a corner sitting inside another tile's side
splits that side into separate edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from fractonprod.graphs import Graph

Point = tuple[Fraction, Fraction]

# Child corners as (s, t) in  P = right + s (long - right) + t (short - right).
# Derived in the frame right=(0,0), long=(4,2), short=(-1,2): the altitude from
# the right angle cuts off a unit child; the double-size remainder splits into
# two corner children and a 2x1 rectangle cut along the diagonal FOOT-MID.
# Three children are mirror images of the parent and two are not.
_F = Fraction
_RIGHT, _LONG, _SHORT = (_F(0), _F(0)), (_F(1), _F(0)), (_F(0), _F(1))
_FOOT = (_F(1, 5), _F(4, 5))  # foot of the altitude on the hypotenuse
_Q1 = (_F(1, 10), _F(2, 5))  # midpoint of RIGHT-FOOT
_MID = (_F(1, 2), _F(0))  # midpoint of the long leg
_Q2 = (_F(3, 5), _F(2, 5))  # midpoint of FOOT-LONG
CHILD_RULE: tuple[tuple[tuple[Fraction, Fraction], ...], ...] = (
    (_FOOT, _RIGHT, _SHORT),
    (_Q1, _MID, _RIGHT),
    (_Q2, _FOOT, _MID),
    (_Q2, _LONG, _MID),
    (_Q1, _MID, _FOOT),
)


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


@dataclass(frozen=True)
class Triangle:
    """Pinwheel tile given by its right-angle, long-leg and short-leg corners."""

    right: Point
    long: Point
    short: Point

    @property
    def corners(self) -> tuple[Point, Point, Point]:
        return (self.right, self.long, self.short)

    @property
    def mirrored(self) -> bool:
        """Orientation flag: True when (right, long, short) runs clockwise."""
        return self.signed_area() < 0

    def signed_area(self) -> Fraction:
        (x0, y0), (x1, y1), (x2, y2) = self.corners
        return _cross(x1 - x0, y1 - y0, x2 - x0, y2 - y0) / 2

    def area(self) -> Fraction:
        return abs(self.signed_area())

    def squared_sides(self) -> tuple[Fraction, Fraction, Fraction]:
        """Squared lengths of (short leg, long leg, hypotenuse)."""
        return (_sq(self.right, self.short), _sq(self.right, self.long), _sq(self.long, self.short))

    def validate(self) -> None:
        a, b, c = self.squared_sides()
        if a == 0 or b != 4 * a or c != 5 * a:
            raise ValueError(f"not a 1:2:sqrt5 right triangle: squared sides {a}, {b}, {c}")

    def affine(self, s: Fraction, t: Fraction) -> Point:
        (x0, y0), (x1, y1), (x2, y2) = self.corners
        return (x0 + s * (x1 - x0) + t * (x2 - x0), y0 + s * (y1 - y0) + t * (y2 - y0))


def _sq(p: Point, q: Point) -> Fraction:
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def subdivide(t: Triangle) -> list[Triangle]:
    """The five children of one substitution step."""
    t.validate()
    return [Triangle(*(t.affine(s, u) for s, u in rule)) for rule in CHILD_RULE]


def base_triangles(width: int = 2, height: int = 1) -> list[Triangle]:
    """The rectangle ``[0, width] x [0, height]`` cut along its diagonal."""
    if width != 2 * height:
        raise ValueError("the base rectangle must have aspect ratio 2:1")
    w, h = _F(width), _F(height)
    o = _F(0)
    return [
        Triangle(right=(w, o), long=(o, o), short=(w, h)),
        Triangle(right=(o, h), long=(w, h), short=(o, o)),
    ]


def tiles(N: int, base: list[Triangle] | None = None) -> list[Triangle]:
    """All tiles after ``N`` substitution steps applied to ``base``."""
    current = base_triangles() if base is None else list(base)
    for _ in range(N):
        current = [child for t in current for child in subdivide(t)]
    return current


@dataclass(frozen=True, eq=False)
class TilingGraph:
    """Vertex graph of a tiled rectangle.

    ``coords`` holds exact rational vertex positions; ``boundary`` flags the
    vertices on the rectangle's perimeter; ``graph`` is the edge structure.
    """

    N: int
    coords: list[Point]
    graph: Graph
    boundary: np.ndarray
    width: Fraction
    height: Fraction
    num_faces: int
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def edges(self) -> np.ndarray:
        return self.graph.edges

    def degrees(self) -> np.ndarray:
        return self.graph.degrees()


def generate(N: int, base: list[Triangle] | None = None) -> TilingGraph:
    """Pinwheel tiling graph of generation ``N`` on the 2x1 rectangle."""
    if N < 0:
        raise ValueError("generation must be nonnegative")
    base = base_triangles() if base is None else base
    faces = tiles(N, base)

    # child coefficients have denominators dividing 10, so this clears them all
    denom = 10**N
    for t in base:
        for x, y in t.corners:
            denom = math.lcm(denom, x.denominator * 10**N, y.denominator * 10**N)

    index: dict[tuple[int, int], int] = {}
    coords: list[Point] = []

    def vid(p: Point) -> int:
        key = (int(p[0] * denom), int(p[1] * denom))
        if key not in index:
            index[key] = len(coords)
            coords.append(p)
        return index[key]

    corner_ids = [[vid(p) for p in t.corners] for t in faces]
    ints = np.array(list(index.keys()), dtype=np.int64)

    # group triangle sides by supporting line
    lines: dict[tuple[int, int, int], list[tuple[int, int]]] = {}
    for ids in corner_ids:
        for a, b in ((0, 1), (1, 2), (2, 0)):
            u, v = ids[a], ids[b]
            (x1, y1), (x2, y2) = ints[u], ints[v]
            dx, dy = int(x2 - x1), int(y2 - y1)
            g = math.gcd(dx, dy)
            dx, dy = dx // g, dy // g
            if dx < 0 or (dx == 0 and dy < 0):
                dx, dy = -dx, -dy
            key = (dx, dy, dy * int(x1) - dx * int(y1))
            lines.setdefault(key, []).append((u, v))

    edges = set()
    for (dx, dy, _), segs in lines.items():
        pts = sorted({p for seg in segs for p in seg}, key=lambda i: dx * ints[i][0] + dy * ints[i][1])
        pos = {p: dx * int(ints[p][0]) + dy * int(ints[p][1]) for p in pts}
        order = {p: i for i, p in enumerate(pts)}
        for u, v in segs:
            i, j = sorted((order[u], order[v]))
            for a in range(i, j):
                if pos[pts[a]] == pos[pts[a + 1]]:
                    raise AssertionError("coincident points on a line")
                edges.add((min(pts[a], pts[a + 1]), max(pts[a], pts[a + 1])))

    width = max(p[0] for t in base for p in t.corners)
    height = max(p[1] for t in base for p in t.corners)
    boundary = np.array([x in (0, width) or y in (0, height) for x, y in coords])
    graph = Graph.from_edges(len(coords), sorted(edges))
    return TilingGraph(N, coords, graph, boundary, width, height, len(faces))


def boundary_vertices(tg: TilingGraph) -> list[int]:
    """Boundary vertices in counter-clockwise order starting at the lower-left corner."""
    W, Hh = tg.width, tg.height
    bottom, right, top, left = [], [], [], []
    for v, (x, y) in enumerate(tg.coords):
        if y == 0:
            bottom.append((x, v))
        elif x == W:
            right.append((y, v))
        elif y == Hh:
            top.append((-x, v))
        elif x == 0:
            left.append((-y, v))
    return [v for side in (bottom, right, top, left) for _, v in sorted(side)]


def check_invariants(tg: TilingGraph, faces: list[Triangle] | None = None) -> None:
    """Raise AssertionError if the tiling graph violates its structural invariants."""
    if faces is not None:
        total = sum((t.area() for t in faces), Fraction(0))
        assert total == tg.width * tg.height, "tiles do not cover the rectangle"
    assert len(set(tg.coords)) == tg.n, "duplicate vertices"
    assert tg.graph.is_connected(), "tiling graph is disconnected"
    V, E, F = tg.n, tg.graph.num_edges, tg.num_faces + 1
    assert V - E + F == 2, f"Euler characteristic {V - E + F} != 2"
    deg = tg.degrees()
    interior = deg[~tg.boundary]
    if tg.N >= 2 and interior.size:
        assert interior.min() >= 3 and interior.max() <= 9, (
            f"interior degrees out of range: {interior.min()}..{interior.max()}"
        )


################################################################################
# export


def format_coordinates(tg: TilingGraph) -> str:
    """Lines ``vertex x_num x_den y_num y_den boundary_flag``."""
    lines = []
    for v, (x, y) in enumerate(tg.coords):
        lines.append(f"{v} {x.numerator} {x.denominator} {y.numerator} {y.denominator} {int(tg.boundary[v])}")
    return "\n".join(lines) + "\n"


def parse_coordinates(text: str) -> tuple[list[Point], np.ndarray]:
    coords, flags = [], []
    for line in text.splitlines():
        if not line.strip():
            continue
        _, xn, xd, yn, yd, b = (int(t) for t in line.split())
        coords.append((Fraction(xn, xd), Fraction(yn, yd)))
        flags.append(bool(b))
    return coords, np.array(flags)


def to_svg(tg: TilingGraph, highlight=None, size: int = 800) -> str:
    """Render the graph; vertices in ``highlight`` are drawn in red."""
    scale = size / float(tg.width)
    H = float(tg.height) * scale
    pad = 10
    xy = [(float(x) * scale + pad, H - float(y) * scale + pad) for x, y in tg.coords]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size + 2 * pad:.0f}" '
        f'height="{H + 2 * pad:.0f}" viewBox="0 0 {size + 2 * pad:.0f} {H + 2 * pad:.0f}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for u, v in tg.edges:
        (x1, y1), (x2, y2) = xy[u], xy[v]
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" stroke="#555" stroke-width="0.6"/>')
    marked = set() if highlight is None else {int(i) for i in highlight}
    r = max(1.0, min(3.0, 300.0 / max(1, tg.n) ** 0.5))
    for v, (x, y) in enumerate(xy):
        color = "red" if v in marked else ("#1f77b4" if tg.boundary[v] else "black")
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r:.2f}" fill="{color}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
