"""SVG rendering of an interception: target path, reachable boundaries, path.

Output convention: world coordinates with the y-axis flipped (so +y is up
on screen) and a viewBox fitted to everything drawn with a 10% margin.
No coordinate scaling is applied, which keeps circle radii equal to their
world-space values.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

from .core import PlanarPoint, TargetTrajectory
from .plants import PlantModel
from .solver import SolveResult

_STYLE = {
    "reachable": {"fill": "none", "stroke": "#888888", "stroke-width": "0.01",
                  "stroke-dasharray": "0.05 0.05"},
    "trajectory": {"fill": "none", "stroke": "#000000", "stroke-width": "0.015"},
    "path": {"fill": "none", "stroke": "#cc0000", "stroke-width": "0.02"},
    "capture": {"fill": "none", "stroke": "#cc0000", "stroke-width": "0.01"},
}


def _fmt(v: float) -> str:
    return repr(float(v))


def _points_attr(points: list[PlanarPoint]) -> str:
    # flip y so mathematical +y renders upward
    return " ".join(f"{_fmt(p.x)},{_fmt(-p.y)}" for p in points)


def _dubins_boundary_loop(plant: PlantModel, t: float, n: int = 128) -> list[PlanarPoint]:
    """One closed polyline around the reachable set: CS and CC branches and mirrors."""
    pts = plant.boundary_points(t, n)
    cs_right = pts[0 : 2 * n : 2]
    cs_left = pts[1 : 2 * n : 2]
    cc_right = pts[2 * n :: 2]
    cc_left = pts[2 * n + 1 :: 2]
    return cs_right + cc_right + cc_left[::-1] + cs_left[::-1] + [cs_right[0]]


def render_svg(
    plant: PlantModel,
    trajectory: TargetTrajectory,
    result: SolveResult,
    times: list[float],
) -> str:
    """Render the scenario to an SVG document string.

    Draws the target trajectory over [0, t_star], the reachable-set boundary
    at each positive time in ``times`` (circles for the simple-motions plant,
    boundary polylines otherwise), the reconstructed interception path, and a
    capture circle at the intercept whose radius is the achieved separation.
    """
    if result.path is None:
        raise ValueError("result carries no interception path to draw")
    t_star = result.t_star

    all_points: list[PlanarPoint] = []

    n_traj = 256
    horizon = t_star if t_star > 0 else 1.0
    traj_points = [trajectory.position(horizon * i / n_traj) for i in range(n_traj + 1)]
    all_points += traj_points

    reachable: list[tuple[str, object]] = []
    for t in times:
        if t <= 0:
            continue
        if plant.name == "simple":
            reachable.append(("circle", t))
            all_points.append(PlanarPoint(t, t))
            all_points.append(PlanarPoint(-t, -t))
        else:
            loop = _dubins_boundary_loop(plant, t)
            reachable.append(("polyline", loop))
            all_points += loop

    path_points = plant.sample_path(result.path, max_arc_step=0.05)
    all_points += path_points

    capture_center = trajectory.position(t_star)
    capture_radius = result.trace.final_distance
    all_points.append(capture_center + PlanarPoint(capture_radius, capture_radius))
    all_points.append(capture_center - PlanarPoint(capture_radius, capture_radius))

    xs = [p.x for p in all_points]
    ys = [-p.y for p in all_points]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-6)
    margin = 0.1 * span
    view = (
        min(xs) - margin,
        min(ys) - margin,
        (max(xs) - min(xs)) + 2 * margin,
        (max(ys) - min(ys)) + 2 * margin,
    )

    svg = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "version": "1.1",
            "viewBox": " ".join(_fmt(v) for v in view),
        },
    )

    g_reach = ET.SubElement(svg, "g", {"id": "reachable", **_STYLE["reachable"]})
    for shape, payload in reachable:
        if shape == "circle":
            ET.SubElement(
                g_reach,
                "circle",
                {"cx": _fmt(0.0), "cy": _fmt(0.0), "r": _fmt(payload)},
            )
        else:
            ET.SubElement(g_reach, "polyline", {"points": _points_attr(payload)})

    g_traj = ET.SubElement(svg, "g", {"id": "trajectory", **_STYLE["trajectory"]})
    ET.SubElement(g_traj, "polyline", {"points": _points_attr(traj_points)})

    g_path = ET.SubElement(svg, "g", {"id": "path", **_STYLE["path"]})
    ET.SubElement(g_path, "polyline", {"points": _points_attr(path_points)})

    g_capture = ET.SubElement(svg, "g", {"id": "capture", **_STYLE["capture"]})
    ET.SubElement(
        g_capture,
        "circle",
        {
            "cx": _fmt(capture_center.x),
            "cy": _fmt(-capture_center.y),
            "r": _fmt(capture_radius),
        },
    )

    body = ET.tostring(svg, encoding="unicode")
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + body + "\n"
