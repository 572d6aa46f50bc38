"""Static SVG pictures of 2-D conjugacy classes and coconjugation sets.

All geometry is computed exactly in lattice coordinates; floats only appear
when points are mapped to the plane through the Gram embedding and written
out with fixed precision, so output bytes are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import conjgeo
from .coconj import CoconjDescription
from .group import Group, Isometry
from .linalg import AffineSublattice, Sublattice

PALETTE = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f")
COCONJ_COLOUR = "#0050ff"
DEFAULT_WINDOW = (-6.0, -6.0, 6.0, 6.0)
WIDTH_PX = 600


def embedding(gram) -> tuple[tuple[float, ...], ...]:
    """Upper-triangular ``E`` with ``E^T E = gram`` (transposed Cholesky factor)."""
    n = len(gram)
    G = [[float(x) for x in row] for row in gram]
    L = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            s = G[i][j] - sum(L[i][k] * L[j][k] for k in range(j))
            if i == j:
                L[i][j] = math.sqrt(s)
            else:
                L[i][j] = s / L[j][j]
    return tuple(tuple(L[j][i] for j in range(n)) for i in range(n))


@dataclass
class RenderScene:
    embedding: tuple
    window: tuple[float, float, float, float]
    layers: list = field(default_factory=list)  # (tag, kind, payload, style)

    def to_plane(self, v) -> tuple[float, float]:
        E = self.embedding
        return (E[0][0] * v[0] + E[0][1] * v[1], E[1][0] * v[0] + E[1][1] * v[1])

    def in_window(self, xy) -> bool:
        x0, y0, x1, y1 = self.window
        return x0 <= xy[0] <= x1 and y0 <= xy[1] <= y1

    @property
    def empty(self) -> bool:
        x0, y0, x1, y1 = self.window
        return not (x1 > x0 and y1 > y0)

    def lattice_range(self) -> int:
        """Half-width of a coordinate box whose image covers the window."""
        if self.empty:
            return -1
        E = self.embedding
        # inverse of the 2x2 upper-triangular embedding
        a, b, d = E[0][0], E[0][1], E[1][1]
        x0, y0, x1, y1 = self.window
        bound = 0.0
        for x in (x0, x1):
            for y in (y0, y1):
                c2 = y / d
                c1 = (x - b * c2) / a
                bound = max(bound, abs(c1), abs(c2))
        return int(math.ceil(bound)) + 1

    def to_svg(self) -> str:
        x0, y0, x1, y1 = self.window
        if self.empty:
            # nothing can be drawn; keep a fixed canvas
            scale, width, height = 1.0, WIDTH_PX, WIDTH_PX
        else:
            scale = WIDTH_PX / (x1 - x0)
            width, height = WIDTH_PX, int(round((y1 - y0) * scale))

        def px(xy):
            return (xy[0] - x0) * scale, (y1 - xy[1]) * scale

        out = [
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">',
            f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        ]
        for tag, kind, payload, style in self.layers:
            out.append(f'<g id="{tag}">')
            if kind == "points":
                r = style.get("r", 3)
                for xy in payload:
                    cx, cy = px(xy)
                    out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{r}" fill="{style["fill"]}"/>')
            elif kind == "lines":
                for (a, b) in payload:
                    ax, ay = px(a)
                    bx, by = px(b)
                    out.append(f'<line x1="{ax:.3f}" y1="{ay:.3f}" x2="{bx:.3f}" y2="{by:.3f}" '
                               f'stroke="{style["stroke"]}" stroke-width="{style.get("width", 1)}"/>')
            out.append("</g>")
        out.append("</svg>")
        return "\n".join(out) + "\n"


def _clip_line(scene: RenderScene, point, direction):
    """Segment of the line ``point + s * direction`` inside the window (plane coords)."""
    x0, y0, x1, y1 = scene.window
    px, py = point
    dx, dy = direction
    lo, hi = -math.inf, math.inf
    for p, d, a, b in ((px, dx, x0, x1), (py, dy, y0, y1)):
        if abs(d) < 1e-12:
            if not a <= p <= b:
                return None
            continue
        s1, s2 = (a - p) / d, (b - p) / d
        lo, hi = max(lo, min(s1, s2)), min(hi, max(s1, s2))
    if lo >= hi:
        return None
    return ((px + lo * dx, py + lo * dy), (px + hi * dx, py + hi * dy))


def _lattice_points(scene: RenderScene, coset) -> list:
    R = scene.lattice_range()
    if R < 0:
        return []
    pts = [scene.to_plane(v) for v in coset.points_in_box(R)]
    return [p for p in pts if scene.in_window(p)]


def _scene(G: Group, window) -> RenderScene:
    if G.dim != 2:
        raise ValueError(f"rendering needs a 2-dimensional group, got dimension {G.dim}")
    return RenderScene(embedding(G.spec.gram), tuple(float(x) for x in window))


def _base_layers(scene: RenderScene, G: Group, h: Isometry):
    full = AffineSublattice((0, 0), Sublattice.full(2))
    scene.layers.append(("lattice", "points", _lattice_points(scene, full), {"r": 1.5, "fill": "#bbbbbb"}))
    mod = AffineSublattice((0, 0), conjgeo.point_mod_lattice(G, h.point))
    scene.layers.append(("modset", "points", _lattice_points(scene, mod), {"r": 4, "fill": "#888888"}))
    for tag, basis, colour in (("mov", conjgeo.mov_set(G, G.linearize(h)).basis, "#cc0000"),
                               ("fix", conjgeo.fix_set(G, h.point), "#0000cc")):
        if len(basis) == 1 and not scene.empty:
            seg = _clip_line(scene, (0.0, 0.0), scene.to_plane([float(x) for x in basis[0]]))
            scene.layers.append((tag, "lines", [seg] if seg else [], {"stroke": colour, "width": 1.5}))


def render_class(G: Group, h: Isometry, window: Sequence[float] = DEFAULT_WINDOW) -> str:
    """Lattice, mod-set, move/fix lines and the class members, one colour per component."""
    scene = _scene(G, window)
    _base_layers(scene, G, h)
    cls = conjgeo.conjugacy_class(G, h)
    for i, comp in enumerate(cls.components):
        colour = PALETTE[i % len(PALETTE)]
        mov = conjgeo.mov_set(G, Isometry(comp.coset.offset, comp.point))
        if len(mov.basis) == 1 and not scene.empty:
            seg = _clip_line(scene, scene.to_plane([float(x) for x in mov.offset]),
                             scene.to_plane([float(x) for x in mov.basis[0]]))
            scene.layers.append((f"component{i}-mov", "lines", [seg] if seg else [],
                                 {"stroke": colour, "width": 0.75}))
        scene.layers.append((f"component{i}", "points", _lattice_points(scene, comp.coset),
                             {"r": max(6 - i, 2), "fill": colour}))
    return scene.to_svg()


def render_coconj(G: Group, desc: CoconjDescription, window: Sequence[float] = DEFAULT_WINDOW) -> str:
    """The translation parts of a coconjugation set, over the fix-set of ``h_0'``."""
    scene = _scene(G, window)
    _base_layers(scene, G, desc.target)
    marks = [("source", desc.source.trans, "#d62728"), ("target", desc.target.trans, "#2ca02c")]
    for tag, v, colour in marks:
        xy = scene.to_plane(v)
        scene.layers.append((tag, "points", [xy] if scene.in_window(xy) else [], {"r": 7, "fill": colour}))
    for i, br in enumerate(desc.branches):
        scene.layers.append((f"branch{i}-u{br.u}", "points", _lattice_points(scene, br.coset),
                             {"r": max(5 - i, 2), "fill": COCONJ_COLOUR if i == 0 else PALETTE[i % len(PALETTE)]}))
    return scene.to_svg()


def parse_window(text: Optional[str]) -> tuple[float, float, float, float]:
    if not text:
        return DEFAULT_WINDOW
    parts = [float(x) for x in text.split(",")]
    if len(parts) != 4:
        raise ValueError("window must be x0,y0,x1,y1")
    return tuple(parts)
