"""SVG rendering of classification rasters and flow portraits.

Fixed 800x800 viewport; u increases rightward, v upward.  The chart-to-
viewport affine map is recorded in the SVG <metadata> element.  Output is
assembled from explicitly formatted strings so it is byte-reproducible.
"""

from __future__ import annotations

import json

VIEW = 800.0

KIND_COLORS = {
    "positive": "#cfe0f5",
    "negative": "#f5cfcf",
    "quasi_umbilic": "#f2dd88",
    "umbilic": "#1a1a1a",
    "masked": "#e8e8e8",
}

FLOW_COLORS = ("#1a4fa0", "#a0341a")


class ChartMap:
    """Affine chart-to-viewport map: px = sx*u + tx, py = sy*v + ty (v up)."""

    def __init__(self, u_min, u_max, v_min, v_max):
        self.u_min, self.u_max = float(u_min), float(u_max)
        self.v_min, self.v_max = float(v_min), float(v_max)
        self.sx = VIEW / (self.u_max - self.u_min)
        self.tx = -self.sx * self.u_min
        self.sy = -VIEW / (self.v_max - self.v_min)
        # py at v_min is VIEW (bottom edge), at v_max it is 0 (top edge)
        self.ty = VIEW - self.sy * self.v_min

    def px(self, u, v):
        return (self.sx * float(u) + self.tx, self.sy * float(v) + self.ty)

    def to_dict(self):
        return {
            "sx": self.sx,
            "tx": self.tx,
            "sy": self.sy,
            "ty": self.ty,
            "viewport": [VIEW, VIEW],
            "u_range": [self.u_min, self.u_max],
            "v_range": [self.v_min, self.v_max],
        }


def _f(x) -> str:
    return f"{float(x):.3f}"


def render_svg(
    grid,
    kinds,
    polyline_families=(),
    marks=(),
    banner: str = "",
    extra_metadata: dict = None,
) -> str:
    """Build the SVG document.

    kinds: [nu, nv] array of kind strings coloring the background cells.
    polyline_families: sequence of lists of polylines (each an array of
    (u,v) points); families get distinct colors.
    marks: (u, v) singular points.
    """
    cmap = ChartMap(grid.u_min, grid.u_max, grid.v_min, grid.v_max)
    meta = {"chart_to_viewport": cmap.to_dict()}
    if extra_metadata:
        meta.update(extra_metadata)

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" '
        'viewBox="0 0 800 800">\n',
        "<metadata>"
        + json.dumps(meta, sort_keys=True)
        + "</metadata>\n",
        '<rect x="0" y="0" width="800" height="800" fill="#ffffff"/>\n',
    ]

    u_nodes = grid.u_nodes()
    v_nodes = grid.v_nodes()
    for i in range(grid.nu - 1):
        for j in range(grid.nv - 1):
            color = KIND_COLORS.get(str(kinds[i, j]), "#ffffff")
            x0, y0 = cmap.px(u_nodes[i], v_nodes[j + 1])
            x1, y1 = cmap.px(u_nodes[i + 1], v_nodes[j])
            parts.append(
                f'<rect x="{_f(x0)}" y="{_f(y0)}" width="{_f(x1 - x0)}" '
                f'height="{_f(y1 - y0)}" fill="{color}"/>\n'
            )

    for fam, lines in enumerate(polyline_families):
        color = FLOW_COLORS[fam % len(FLOW_COLORS)]
        for line in lines:
            if len(line) < 2:
                continue
            pts = " ".join(
                f"{_f(px)},{_f(py)}" for px, py in (cmap.px(p[0], p[1]) for p in line)
            )
            parts.append(
                f'<polyline points="{pts}" fill="none" stroke="{color}" '
                'stroke-width="1.2"/>\n'
            )

    for u, v in marks:
        x, y = cmap.px(u, v)
        parts.append(
            f'<circle cx="{_f(x)}" cy="{_f(y)}" r="5" fill="#000000" '
            'stroke="#ffffff" stroke-width="1.5"/>\n'
        )

    if banner:
        parts.append(
            '<rect x="0" y="0" width="800" height="28" fill="#ffffff" '
            'opacity="0.85"/>\n'
        )
        parts.append(
            '<text x="10" y="19" font-family="monospace" font-size="14" '
            f'fill="#7a1010">{banner}</text>\n'
        )

    parts.append("</svg>\n")
    return "".join(parts)
