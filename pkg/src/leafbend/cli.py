"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 model error, 3 I/O or format error.
"""

import argparse
import json
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

import numpy as np

from . import presets
from .bentframe import build_profile
from .curves import (
    Cornu,
    ElasticaParams,
    ShiftedEuler,
    SpiralParams,
    WeightMode,
    sample_elastica,
    sample_spiral,
)
from .errors import DomainError, FormatError, LeafBendError
from .export import curve_csv, polyline_svg, read_curve_csv
from .flattenmap import FitGrid, build_map, fit_params, longest_monotone_range
from .imagewarp import ResampleMode, bend_image, dewarp_image, read_pnm, write_pnm
from .specfun import DEFAULT_TOL

EXIT_OK, EXIT_USAGE, EXIT_MODEL, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    curve: str = "profile"  # spiral | profile | elastica
    phase: str = "cornu"
    m: float = 0.0
    e: float = presets.E_FREE
    l: float = presets.L_AXIAL
    lam: float = 2.0
    weight: str = "end"
    k: float = 0.3
    knots: int = 2048
    samples: int = 512
    tol: float = DEFAULT_TOL
    mode: str = "linear"
    width: Optional[int] = None
    preset: Optional[str] = None
    monotone_run: bool = False

    def spiral_params(self):
        phase = ShiftedEuler(self.m) if self.phase == "euler" else Cornu()
        return SpiralParams(phase, self.e, self.l, self.lam, WeightMode(self.weight))

    def elastica_params(self):
        return ElasticaParams(self.k, self.e, self.l)


# JSON/flag names that differ from the dataclass field names
_ALIASES = {"lambda": "lam", "monotone-run": "monotone_run"}
_CHOICES = {
    "curve": ("spiral", "profile", "elastica"),
    "phase": ("cornu", "euler"),
    "weight": ("end", "arc"),
    "mode": ("nearest", "linear"),
}


def _preset_fields(name):
    try:
        p = presets.get_preset(name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if isinstance(p, ElasticaParams):
        return {"curve": "elastica", "k": p.k, "e": p.s_start, "l": p.s_end}
    out = {
        "curve": "spiral" if name == "fig2" else "profile",
        "phase": "euler" if isinstance(p.phase, ShiftedEuler) else "cornu",
        "e": p.s_start,
        "l": p.s_end,
        "lam": p.lam,
        "weight": p.weight.value,
    }
    if isinstance(p.phase, ShiftedEuler):
        out["m"] = p.phase.m
    return out


def resolve_config(args):
    """Defaults < JSON config file < flags; a preset then overrides what it defines."""
    valid = {f.name for f in fields(RunConfig)}
    values = {}
    if args.config:
        try:
            raw = json.loads(Path(args.config).read_text())
        except ValueError as exc:
            raise FormatError(f"bad JSON config: {exc}") from None
        if not isinstance(raw, dict):
            raise FormatError("JSON config must be an object")
        for key, val in raw.items():
            name = _ALIASES.get(key, key.replace("-", "_"))
            if name not in valid:
                raise UsageError(f"unknown config key {key!r}")
            values[name] = val
    for name in valid:
        val = getattr(args, name, None)
        if val is not None and val is not False:
            values[name] = val
    if values.get("preset"):
        values.update(_preset_fields(values["preset"]))
    cfg = replace(RunConfig(), **values)
    for name, allowed in _CHOICES.items():
        if getattr(cfg, name) not in allowed:
            raise UsageError(f"{name} must be one of {allowed}, got {getattr(cfg, name)!r}")
    return cfg


def _profile_and_map(cfg):
    profile = build_profile(cfg.spiral_params(), cfg.knots, cfg.tol)
    s_range = longest_monotone_range(profile) if cfg.monotone_run else None
    return profile, build_map(profile, s_range)


# -- commands --------------------------------------------------------------------


def cmd_plot(cfg, output):
    if cfg.curve == "elastica":
        curve = sample_elastica(cfg.elastica_params(), cfg.samples)
        s, pts = curve.s, curve.points
    elif cfg.curve == "spiral":
        curve = sample_spiral(cfg.spiral_params(), cfg.samples, cfg.tol)
        s, pts = curve.s, curve.points
    else:
        prof = build_profile(cfg.spiral_params(), cfg.samples, cfg.tol)
        s, pts = prof.s, prof.stretched
    output = Path(output)
    csv_path = output.with_name(output.name + ".csv")
    svg_path = output.with_name(output.name + ".svg")
    csv_path.write_text(curve_csv(s, pts))
    svg_path.write_text(polyline_svg(pts))
    return [csv_path, svg_path]


def cmd_table(cfg, output):
    _, fmap = _profile_and_map(cfg)
    text = fmap.to_csv()
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)
    return fmap


def _warp(cfg, src, dst, func):
    img = read_pnm(Path(src).read_bytes())
    _, fmap = _profile_and_map(cfg)
    out = func(img, fmap, ResampleMode(cfg.mode), cfg.width or img.width)
    Path(dst).write_bytes(write_pnm(out))
    return out


def cmd_bend(cfg, src, dst):
    return _warp(cfg, src, dst, bend_image)


def cmd_dewarp(cfg, src, dst):
    return _warp(cfg, src, dst, dewarp_image)


def _axis(text):
    """'lo:hi:n' or a comma-separated list."""
    try:
        if ":" in text:
            lo, hi, n = text.split(":")
            return tuple(np.linspace(float(lo), float(hi), int(n)))
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad grid axis {text!r}") from None


def cmd_fit(cfg, path, grid, out=None):
    out = sys.stdout if out is None else out
    text = Path(path).read_text()
    observed = read_curve_csv(text)
    has_s = text.lstrip().split("\n", 1)[0].replace(" ", "").startswith("s,")
    phase = ShiftedEuler if cfg.phase == "euler" else Cornu
    result = fit_params(
        observed,
        grid,
        cfg.tol,
        phase=phase,
        weight=cfg.weight,
        arc="param" if has_s else "chord",
    )
    p = result.params
    lines = [f"l={p.s_end!r}", f"e={p.s_start!r}", f"lambda={p.lam!r}"]
    if isinstance(p.phase, ShiftedEuler):
        lines.append(f"m={p.phase.m!r}")
    lines += [
        f"weight={p.weight.value}",
        f"rms_residual={result.rms_residual!r}",
        f"iterations={result.iterations}",
    ]
    out.write("\n".join(lines) + "\n")
    return result


# -- argument parsing ----------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _model_flags(p):
    g = p.add_argument_group("model")
    g.add_argument("--config", help="JSON file with keys named like the flags")
    g.add_argument("--preset", help="fig2, fig3, fig4 or fig5")
    g.add_argument("--curve", choices=_CHOICES["curve"])
    g.add_argument("--phase", choices=_CHOICES["phase"])
    g.add_argument("--m", type=float)
    g.add_argument("--e", type=float, help="free-end arc length")
    g.add_argument("--l", type=float, help="axial-end arc length")
    g.add_argument("--lambda", dest="lam", type=float, help="stretch exponent")
    g.add_argument("--weight", choices=_CHOICES["weight"])
    g.add_argument("--k", type=float, help="elastica modulus")
    g.add_argument("--knots", type=int, help="lookup table size (default 2048)")
    g.add_argument("--samples", type=int, help="plot samples (default 512)")
    g.add_argument("--tol", type=float)
    g.add_argument("--mode", choices=_CHOICES["mode"])
    g.add_argument("--width", type=int, help="output image width")
    g.add_argument(
        "--monotone-run",
        dest="monotone_run",
        action="store_true",
        help="tabulate only the longest monotone stretch of a folded profile",
    )


def build_parser():
    parser = _Parser(prog="leafbend", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("plot", help="write <output>.csv and <output>.svg")
    _model_flags(p)
    p.add_argument("-o", "--output", help="output path prefix (default: preset name)")

    p = sub.add_parser("table", help="write the flatten map as s,u CSV")
    _model_flags(p)
    p.add_argument("-o", "--output", default="-")

    for name in ("bend", "dewarp"):
        p = sub.add_parser(name, help=f"{name} a PGM/PPM image")
        _model_flags(p)
        p.add_argument("input")
        p.add_argument("output")

    p = sub.add_parser("fit", help="fit (l, e, lambda) to an s,x,y or x,y CSV")
    _model_flags(p)
    p.add_argument("profile")
    p.add_argument("--grid-l", type=_axis)
    p.add_argument("--grid-e", type=_axis)
    p.add_argument("--grid-lambda", type=_axis)
    p.add_argument("--grid-m", type=_axis)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        if args.command == "plot":
            cmd_plot(cfg, args.output or cfg.preset or "curve")
        elif args.command == "table":
            cmd_table(cfg, args.output)
        elif args.command == "bend":
            cmd_bend(cfg, args.input, args.output)
        elif args.command == "dewarp":
            cmd_dewarp(cfg, args.input, args.output)
        elif args.command == "fit":
            base = FitGrid()
            grid = FitGrid(
                l=args.grid_l or base.l,
                e=args.grid_e or base.e,
                lam=args.grid_lambda or base.lam,
                m=args.grid_m,
            )
            cmd_fit(cfg, args.profile, grid)
    except (FormatError, OSError) as exc:
        print(f"leafbend: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, DomainError) as exc:
        print(f"leafbend: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LeafBendError as exc:
        print(f"leafbend: model error: {exc}", file=sys.stderr)
        return EXIT_MODEL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
