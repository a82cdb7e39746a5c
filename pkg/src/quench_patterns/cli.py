"""Command-line entry point.

Subcommands map one-to-one onto the library modules; all numeric output
is CSV (17 significant digits) and every output file starts with a
provenance comment line `# quench-patterns <subcommand> <flags>` from
which the run can be replayed.  Exit codes: 0 success, 2 parameter
error, 3 convergence failure, 4 inconclusive-by-design (the critical
band, where no verdict is claimed).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .classify import sweep
from .errors import ConvergenceError, ParameterError, QuenchError
from .evolve import EvolveConfig, default_dt, evolve
from .front1d import continue_front, solve_truncated_front, verify_dichotomy
from .grids import Field1D, Field2D, Grid1D, Grid2D, aligned_grid
from .orbits import KAPPA_INF, sample_orbit
from .strip2d import SubsolutionSpec, build_nonexistence_supersolution, \
    build_subsolution, continue_strip, make_strip_problem, solve_hinfty, \
    solve_truncated_strip, supersolution_shift
from .waves import bistable_wave

EXIT_OK, EXIT_PARAM, EXIT_CONVERGENCE, EXIT_INCONCLUSIVE = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems through the exit-code
    contract instead of calling sys.exit directly."""

    def error(self, message):
        raise ParameterError(message)


def _provenance(command: str, args: argparse.Namespace) -> str:
    skip = {"command", "config", "out", "func"}
    parts = []
    for key in sorted(vars(args)):
        if key in skip:
            continue
        val = getattr(args, key)
        if val is None or val is False:
            continue
        flag = "--" + key.replace("_", "-")
        parts.append(flag if val is True else f"{flag} {val!r}"
                     if isinstance(val, str) else f"{flag} {val:.17g}"
                     if isinstance(val, float) else f"{flag} {val}")
    return f"# quench-patterns {command} " + " ".join(parts)


def _emit(args, command, write_body):
    """Write an output file (or stdout) with the provenance header."""
    line = _provenance(command, args)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(line + "\n")
            write_body(fh)
    else:
        sys.stdout.write(line + "\n")
        write_body(sys.stdout)


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ParameterError(f"missing required flag --{name.replace('_', '-')}")


def _cmd_periodic(args):
    _require(args, "kappa")
    orbit = sample_orbit(args.kappa, args.n_cells, y_max=args.y_max)
    _emit(args, "periodic", orbit.profile.to_csv)
    return EXIT_OK


def _cmd_wave(args):
    _require(args, "d")
    if args.x_min >= args.x_max:
        raise ParameterError("--x-min must be below --x-max")
    n = max(2, int(round((args.x_max - args.x_min) / args.h)))
    grid = Grid1D(args.x_min, args.x_max, n)
    wave = bistable_wave(args.d, grid)
    _emit(args, "wave", wave.profile.to_csv)
    return EXIT_OK


def _cmd_front1d(args):
    _require(args, "c")
    if args.do_continue:
        rep = continue_front(args.c, h=args.h, tol=args.tol)
    else:
        rep = solve_truncated_front(args.c, args.M, args.L, args.h, args.tol)
    _emit(args, "front1d", rep.field.to_csv)
    return EXIT_OK


def _cmd_dichotomy(args):
    _require(args, "c")
    v = verify_dichotomy(args.c, h=args.h)
    amp = None if math.isnan(v.wake_amplitude) else v.wake_amplitude
    payload = {"c": v.c, "verdict": v.verdict, "wake_amplitude": amp,
               "M_final": v.M_final, "L_final": v.L_final}
    _emit(args, "dichotomy",
          lambda fh: fh.write(json.dumps(payload, indent=2) + "\n"))
    return EXIT_INCONCLUSIVE if v.verdict == "inconclusive" else EXIT_OK


def _cmd_strip(args):
    _require(args, "c", "kappa")
    if args.do_continue:
        fld = continue_strip(args.c, args.kappa, h=args.h, tol=args.tol)
    else:
        p = make_strip_problem(args.c, args.kappa, args.M, args.L, args.h)
        fld, _ = solve_truncated_strip(p, args.tol)
    _emit(args, "strip", fld.to_csv)
    return EXIT_OK


def _cmd_hinfty(args):
    _require(args, "c")
    fld = solve_hinfty(args.c, h=args.h, tol=args.tol)
    _emit(args, "hinfty", fld.to_csv)
    return EXIT_OK


def _cmd_subsolution(args):
    _require(args, "c", "d", "alpha", "kappa")
    spec = SubsolutionSpec(args.c, args.d, args.alpha, args.kappa)
    gx = Grid1D(-args.M, 0.0, max(2, int(round(args.M / args.h))))
    gy = Grid1D(0.0, args.kappa, max(2, int(round(args.kappa / args.h))))
    grid = Grid2D(gx, gy)
    if args.mode == "exist":
        fld = build_subsolution(spec, grid)
    else:
        shift = supersolution_shift(spec, grid)
        fld = build_nonexistence_supersolution(spec, grid, shift)
    _emit(args, "subsolution", fld.to_csv)
    return EXIT_OK


def _cmd_evolve(args):
    _require(args, "c", "t_end")
    if args.dim == 1:
        grid = aligned_grid(-args.M, args.L, args.h)
        initial = Field1D(grid, (grid.centers() < 0).astype(float))
        boundary = (1.0, 0.0)
    else:
        p = make_strip_problem(args.c, args.kappa, args.M, args.L, args.h)
        grid = p.grid
        initial = Field2D(grid, np.ones(grid.n_cells))
        boundary = p.boundary
    dt = args.dt if args.dt else default_dt(grid)
    cfg = EvolveConfig(args.frame, args.c, dt, args.t_end, grid, initial,
                       boundary)
    if args.snapshot_every:
        fld, _, snaps = evolve(cfg, snapshot_every=args.snapshot_every)
        if args.out:
            stem = args.out[:-4] if args.out.endswith(".csv") else args.out
            for k, (t, snap) in enumerate(snaps):
                with open(f"{stem}_{k:04d}.csv", "w") as fh:
                    fh.write(_provenance("evolve", args) + f" # t={t:.17g}\n")
                    snap.to_csv(fh)
    else:
        fld, _ = evolve(cfg)
    _emit(args, "evolve", fld.to_csv)
    return EXIT_OK


def _parse_kappa(value: str) -> float:
    if value in ("inf", "infinity"):
        return KAPPA_INF
    return float(value)


def _cmd_sweep(args):
    c_grid = [args.c_min + i * (args.c_max - args.c_min)
              / max(args.c_steps - 1, 1) for i in range(args.c_steps)]
    kappa_grid = [args.kappa_min + i * (args.kappa_max - args.kappa_min)
                  / max(args.kappa_steps - 1, 1)
                  for i in range(args.kappa_steps)]
    if args.kappa_inf:
        kappa_grid.append(KAPPA_INF)
    if not c_grid or not kappa_grid:
        raise ParameterError("empty sweep grid")
    records = sweep(c_grid, kappa_grid, run_solvers=args.run_solvers,
                    h=args.h, workers=args.workers)

    def body(fh):
        fh.write("c,kappa,P,predicted,measured,wake_amplitude\n")
        for r in records:
            kap = "inf" if r.kappa == KAPPA_INF else f"{r.kappa:.17g}"
            fh.write(f"{r.c:.17g},{kap},{r.P:.17g},{r.predicted},"
                     f"{r.measured},{r.wake_amplitude:.17g}\n")

    _emit(args, "sweep", body)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="quench-patterns",
                     description="Patterns left behind by a moving quench: "
                                 "1D fronts, strip and half-plane patterns, "
                                 "comparison functions, and sweeps.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command")
    parser.commands = {}

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        parser.commands[name] = p
        p.set_defaults(func=func)
        p.add_argument("--config", help="JSON file of flag defaults")
        p.add_argument("--out", help="output file (default: stdout)")
        return p

    p = add("periodic", _cmd_periodic, "sample a periodic wake profile")
    p.add_argument("--kappa", type=_parse_kappa)
    p.add_argument("--n-cells", type=int, default=201)
    p.add_argument("--y-max", type=float, default=20.0)

    p = add("wave", _cmd_wave, "bistable traveling wave profile")
    p.add_argument("--d", type=float)
    p.add_argument("--x-min", type=float, default=-10.0)
    p.add_argument("--x-max", type=float, default=5.0)
    p.add_argument("--h", type=float, default=0.02)

    p = add("front1d", _cmd_front1d, "1D quenched front")
    p.add_argument("--c", type=float)
    p.add_argument("--M", type=float, default=25.0)
    p.add_argument("--L", type=float, default=30.0)
    p.add_argument("--h", type=float, default=0.02)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--continue", dest="do_continue", action="store_true")

    p = add("dichotomy", _cmd_dichotomy, "trivial/nontrivial wake verdict")
    p.add_argument("--c", type=float)
    p.add_argument("--h", type=float, default=0.02)

    p = add("strip", _cmd_strip, "pattern on the height-kappa strip")
    p.add_argument("--c", type=float)
    p.add_argument("--kappa", type=float)
    p.add_argument("--M", type=float, default=25.0)
    p.add_argument("--L", type=float, default=30.0)
    p.add_argument("--h", type=float, default=0.05)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--continue", dest="do_continue", action="store_true")

    p = add("hinfty", _cmd_hinfty, "half-plane pattern")
    p.add_argument("--c", type=float)
    p.add_argument("--h", type=float, default=0.05)
    p.add_argument("--tol", type=float, default=1e-8)

    p = add("subsolution", _cmd_subsolution, "explicit comparison function")
    p.add_argument("--c", type=float)
    p.add_argument("--d", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--kappa", type=float)
    p.add_argument("--mode", choices=("exist", "nonexist"), default="exist")
    p.add_argument("--M", type=float, default=15.0)
    p.add_argument("--h", type=float, default=0.05)

    p = add("evolve", _cmd_evolve, "parabolic time stepping")
    p.add_argument("--frame", choices=("comoving", "lab"), default="comoving")
    p.add_argument("--c", type=float)
    p.add_argument("--dim", type=int, choices=(1, 2), default=1)
    p.add_argument("--t-end", type=float)
    p.add_argument("--dt", type=float)
    p.add_argument("--kappa", type=float, default=2 * math.pi)
    p.add_argument("--M", type=float, default=25.0)
    p.add_argument("--L", type=float, default=30.0)
    p.add_argument("--h", type=float, default=0.02)
    p.add_argument("--snapshot-every", type=int, default=0)

    p = add("sweep", _cmd_sweep, "existence diagram over (c, kappa)")
    p.add_argument("--c-min", type=float, default=0.0)
    p.add_argument("--c-max", type=float, default=2.2)
    p.add_argument("--c-steps", type=int, default=12)
    p.add_argument("--kappa-min", type=float, default=4.0)
    p.add_argument("--kappa-max", type=float, default=32.0)
    p.add_argument("--kappa-steps", type=int, default=7)
    p.add_argument("--kappa-inf", action="store_true")
    p.add_argument("--run-solvers", action="store_true")
    p.add_argument("--h", type=float, default=0.1)
    p.add_argument("--workers", type=int, default=1)

    return parser


def _apply_config(parser: _Parser, argv):
    """Load --config JSON (if present) as defaults of the subcommand's
    parser, so explicit flags still win.

    Defaults must land on the subcommand parser: subcommands parse into a
    fresh namespace, which ignores top-level set_defaults.
    """
    path = None
    command = None
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            path = argv[i + 1]
        elif tok.startswith("--config="):
            path = tok.split("=", 1)[1]
        elif command is None and not tok.startswith("-"):
            command = tok
    if path is None:
        return
    sub = parser.commands.get(command)
    if sub is None:
        raise ParameterError("--config requires a known subcommand")
    known = {a.dest for a in sub._actions}
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParameterError(f"cannot read config {path}: {exc}")
    if not isinstance(raw, dict):
        raise ParameterError("config file must hold a JSON object")
    defaults = {}
    for key, val in raw.items():
        dest = key.replace("-", "_")
        if dest == "continue":
            dest = "do_continue"
        if dest == "kappa" and isinstance(val, str):
            val = _parse_kappa(val)
        if dest not in known:
            raise ParameterError(
                f"config key {key!r} is not a flag of {command!r}")
        defaults[dest] = val
    sub.set_defaults(**defaults)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        parser = build_parser()
        _apply_config(parser, argv)
        args = parser.parse_args(argv)
        if getattr(args, "func", None) is None:
            parser.print_usage(sys.stderr)
            return EXIT_PARAM
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except QuenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except SystemExit as exc:  # argparse --help / --version
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
