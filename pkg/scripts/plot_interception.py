#!/usr/bin/env python3
"""Render the showcase interception (lissajous target, both plants) to SVG.

Writes simple_interception.svg and dubins_interception.svg into the output
directory (default: current directory).
"""

import math
import sys
from pathlib import Path

from intercept.core import CaptureSpec, make_lissajous_trajectory
from intercept.plants import get_plant
from intercept.solver import solve
from intercept.svgplot import render_svg


def main() -> int:
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")
    out_dir.mkdir(parents=True, exist_ok=True)
    trajectory = make_lissajous_trajectory(-1.0, -2.0, 1.0, math.sqrt(2.0), 1.0)
    capture = CaptureSpec(0.1, 1e-6)
    for plant_name in ("simple", "dubins"):
        plant = get_plant(plant_name)
        result = solve(plant, trajectory, capture)
        times = [t for t, _ in result.trace.iterates if t > 0]
        svg = render_svg(plant, trajectory, result, times)
        target = out_dir / f"{plant_name}_interception.svg"
        target.write_text(svg, encoding="utf-8")
        print(
            f"{target}: t* = {result.t_star:.6f} after "
            f"{result.trace.iteration_count} iterations"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
