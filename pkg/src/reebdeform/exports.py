"""File emitters: deterministic JSON/CSV, OBJ meshes, SVG figures.

All payloads are reproducible byte for byte: fixed sample orders, repr
formatting for floats, sorted JSON keys, no timestamps.  OBJ vertices are a
quick-look 3D projection (Re z1, Im z1, Re z2) of the six ambient
coordinates; the CSV carries the full data.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .ambient import analytic_lambda, embed_chart, wedge_coefficient
from .profiles import ProfileFamily, areal_velocity, curve_point


def write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def write_curve_csv(path: Path, fam: ProfileFamily, t: float, ss) -> None:
    """Rows (t, s, x, y, dx, dy, W) of the profile curve."""
    lines = ["t,s,x,y,dx,dy,W"]
    for s in ss:
        c = curve_point(fam, t, float(s))
        w = areal_velocity(fam, t, float(s))
        lines.append(f"{t!r},{c.s!r},{c.x!r},{c.y!r},{c.dx!r},{c.dy!r},{w!r}")
    path.write_text("\n".join(lines) + "\n")


def write_grid_csv(
    path: Path, fam: ProfileFamily, t: float, th1s, th2s, ss
) -> None:
    """Chart grid dump: t, th1, th2, s, r1, r2, r3, a, b, c, wedge."""
    lines = ["t,th1,th2,s,r1,r2,r3,a,b,c,wedge"]
    for s in ss:
        form = analytic_lambda(fam, t, float(s))
        w = wedge_coefficient(form)
        for a1 in th1s:
            for a2 in th2s:
                p = embed_chart(fam, t, float(a1), float(a2), float(s))
                lines.append(
                    f"{t!r},{p.th1!r},{p.th2!r},{float(s)!r},"
                    f"{p.r1!r},{p.r2!r},{p.r3!r},"
                    f"{form.a!r},{form.b!r},{form.c!r},{w!r}"
                )
    path.write_text("\n".join(lines) + "\n")


def _project(p) -> tuple[float, float, float]:
    c = p.cartesian()
    return c[0], c[1], c[2]


def write_obj_points(path: Path, points) -> int:
    """Vertex-only OBJ (point cloud) for a 3-dimensional sample mesh."""
    lines = []
    n = 0
    for p in points:
        x, y, z = _project(p)
        lines.append(f"v {x!r} {y!r} {z!r}")
        n += 1
    path.write_text("\n".join(lines) + "\n")
    return n


def write_obj_surface(path: Path, mesh, close_revolution: bool = True) -> int:
    """OBJ with quad faces for a surface mesh mesh[i][j] -> AmbientPoint."""
    n_rows = len(mesh)
    n_cols = len(mesh[0])
    lines = []
    for row in mesh:
        for p in row:
            x, y, z = _project(p)
            lines.append(f"v {x!r} {y!r} {z!r}")
    for i in range(n_rows - 1):
        cols = n_cols if close_revolution else n_cols - 1
        for j in range(cols):
            jn = (j + 1) % n_cols
            a = i * n_cols + j + 1
            b = i * n_cols + jn + 1
            c = (i + 1) * n_cols + jn + 1
            d = (i + 1) * n_cols + j + 1
            lines.append(f"f {a} {b} {c} {d}")
    path.write_text("\n".join(lines) + "\n")
    return n_rows * n_cols


def write_leaf_csv(path: Path, leaf) -> None:
    """Leaf graph samples: s, theta (unwrapped), theta mod 2*pi."""
    lines = ["s,theta,theta_mod_2pi"]
    for s, th in leaf.samples:
        lines.append(f"{s!r},{th!r},{th % (2.0 * np.pi)!r}")
    path.write_text("\n".join(lines) + "\n")


def plot_simplex_curves(path: Path, fam: ProfileFamily, t_list) -> None:
    """SVG of the moment simplex with the profile curve for each t."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5, 5))
    # simplex boundary in (x, y) coordinates: vertices (1,0), (0,1), (-1,-1)
    vx = [1.0, 0.0, -1.0, 1.0]
    vy = [0.0, 1.0, -1.0, 0.0]
    ax.plot(vx, vy, color="0.6", lw=1)
    ax.plot([0.0], [0.0], marker="o", color="0.3", ms=3)
    ss = np.linspace(-fam.delta, fam.delta, 401)
    for t in t_list:
        xs, ys = [], []
        for s in ss:
            c = curve_point(fam, float(t), float(s))
            xs.append(c.x)
            ys.append(c.y)
        ax.plot(xs, ys, lw=1.2, label=f"t={t:g}")
    ax.set_aspect("equal")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.legend(fontsize=7)
    fig.savefig(path, format="svg")
    plt.close(fig)


def plot_leaf_graph(path: Path, leaf) -> None:
    """SVG of the leaf graph (s, theta)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ss = [s for s, _ in leaf.samples]
    ths = [th for _, th in leaf.samples]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(ss, ths, lw=1.0)
    ax.set_xlabel("s")
    ax.set_ylabel("theta (unwrapped)")
    fig.savefig(path, format="svg")
    plt.close(fig)
