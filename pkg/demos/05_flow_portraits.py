#!/usr/bin/env python3
"""Flow portraits: classification rasters with curvature-line streamlines.

Produces the same SVG artifacts as the command-line interface, for a few
contrasting presets:

  z3     - isolated umbilic, two transverse flows of index +1 / -1
  z5     - isolated umbilic, flows of index 0
  z2     - non-admissible umbilic: classification only, with a banner
  spacelike_m2 - unoriented principal line field of index -1

Outputs land in ./demo_out/.
"""

from pathlib import Path

from zmcsurf.cli import main

OUT = Path("demo_out")

for preset in ("z3", "z5", "z2", "spacelike_m2"):
    target = OUT / preset
    code = main(["flow", "--preset", preset, "--out", str(target)])
    print(f"{preset:14s} -> {target / 'flow.svg'}  (exit {code})")

print("\nwinding diagnostics for z3:")
code = main(["index", "--preset", "z3", "--out", str(OUT / "z3_index")])
print((OUT / "z3_index" / "winding.csv").read_text())
