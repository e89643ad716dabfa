"""Reproduce the four model curves as CSV + SVG.

    fig2  Cornu spiral over [0, 7*pi/6]
    fig3  elastica k = 0.3 over [0, 1]
    fig4  spiral moved to the axial end, unstretched
    fig5  same, stretched by (l - t)^2

Run: python demos/02_model_figures.py [outdir]
"""

import sys
from pathlib import Path

from leafbend import PRESETS, build_profile, sample_elastica, sample_spiral
from leafbend.export import curve_csv, polyline_svg

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(exist_ok=True)

curves = {
    "fig2": sample_spiral(PRESETS["fig2"], 512),
    "fig3": sample_elastica(PRESETS["fig3"], 512),
}
for name in ("fig4", "fig5"):
    prof = build_profile(PRESETS[name], 512)
    curves[name] = (prof.s, prof.stretched)

for name, curve in curves.items():
    s, pts = curve if isinstance(curve, tuple) else (curve.s, curve.points)
    (out / f"{name}.csv").write_text(curve_csv(s, pts))
    (out / f"{name}.svg").write_text(polyline_svg(pts))
    print(f"{name}: {len(s)} samples, x in [{pts[:, 0].min():.3f}, {pts[:, 0].max():.3f}]")

# The same files come from the command line:  leafbend plot --preset fig5 -o fig5
