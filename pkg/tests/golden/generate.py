"""Regenerate the golden files in this directory from the series oracle.

    python tests/golden/generate.py

Uses only tests/oracles.py (no leafbend imports).
"""

import json
import math
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE.parent))

from oracles import cornu_point, fig5_listing_point  # noqa: E402

L = 2.170803
E = -0.78622
KNOTS = 2048


def stretched_u(lam, weight):
    m, n = cornu_point(L)
    a, b = cornu_point(E)
    theta = math.atan2(b - n, a - m)
    c, s_rot = math.cos(theta), math.sin(theta)
    s_vals = [E + (L - E) * i / (KNOTS - 1) for i in range(KNOTS)]
    u = []
    for z in s_vals:
        cz, sz = cornu_point(z)
        x = c * (cz - m) + s_rot * (sz - n)
        w = (L - z) ** lam if weight == "end" else (z - E) ** lam
        u.append(x * w)
    return s_vals, u


def sweep_entry(lam, weight):
    s, u = stretched_u(lam, weight)
    signs = [(u[i + 1] > u[i]) - (u[i + 1] < u[i]) for i in range(len(u) - 1)]
    folds = [i for i in range(len(signs) - 1) if signs[i + 1] != signs[i]]
    runs, start = [], 0
    for i in folds:
        runs.append((start, i + 1))
        start = i + 1
    runs.append((start, len(signs)))
    i, j = max(runs, key=lambda r: (r[1] - r[0], -r[0]))
    first = folds[0] + 1 if folds else None
    return {
        "lambda": lam,
        "weight": weight,
        "monotone": not folds,
        "first_fold_interval": [s[first], s[first + 1]] if folds else None,
        "longest_run": [s[i], s[j]],
        "longest_run_knots": j - i + 1,
    }


def main():
    sweep = [sweep_entry(lam, w) for w in ("end", "arc") for lam in (0.0, 0.5, 1.0, 2.0, 3.0)]
    presets = {
        "fig4": sweep_entry(0.0, "end"),
        "fig5": sweep_entry(2.0, "end"),
    }
    (HERE / "monotone_sweep.json").write_text(
        json.dumps({"l": L, "e": E, "knots": KNOTS, "presets": presets, "sweep": sweep}, indent=2)
        + "\n"
    )

    n = 512
    rows = ["s,x,y"]
    for i in range(n):
        z = E + (L - E) * i / (n - 1)
        x, y = fig5_listing_point(z, L, E, 2.0)
        rows.append(f"{z!r},{x!r},{y!r}")
    (HERE / "fig5_oracle.csv").write_text("\n".join(rows) + "\n")


if __name__ == "__main__":
    main()
