"""Command-line front end: ``fh-toeplitz <subcommand> ...``.

JSON output is one object per line, CSV output starts with the comment
line ``# fh-toeplitz v1``.  Exit codes: 0 success, 1 numerical failure
(JSON error object on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import correlators as corr
from .asymptotics import fh_expansion
from .exact import toeplitz_coefficients, toeplitz_determinant
from .special import barnes_g, log_barnes_g
from .symbol import (
    DEFAULT_BOUND,
    FHSingularity,
    FHSymbol,
    SmoothSymbol,
    density_density_symbol,
    density_matrix_symbol,
    enumerate_representations,
    identity_symbol,
    jump_symbol,
    minimal_representations,
    szego_symbol,
)

CSV_TAG = "# fh-toeplitz v1"
SYMBOLS = ("identity", "jump", "dm", "dd", "szego", "custom")
KINDS = ("galpha", "green", "counting", "dd")


@dataclass
class RunConfig:
    command: str
    symbol: str = "identity"
    alpha: float = 0.0
    x_r: float | None = None
    t: float = 0.5
    symbol_file: str | None = None
    n: list = field(default_factory=list)
    grid: int | None = None
    bound: int = DEFAULT_BOUND
    kind: str = "green"
    M: list = field(default_factory=list)
    L: float = 1.0
    x: list = field(default_factory=list)
    alphas: list = field(default_factory=list)
    mode: str = "both"
    z: complex = 0j
    fmt: str = "json"
    output: str | None = None


def cplx(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _parse_complex(text: str) -> complex:
    parts = [float(p) for p in text.split(",")]
    if len(parts) == 1:
        return complex(parts[0])
    if len(parts) == 2:
        return complex(parts[0], parts[1])
    raise ValueError(f"expected 're' or 're,im', got {text!r}")


def _parse_list(conv):
    def parse(text: str) -> list:
        return [conv(p) for p in text.split(",") if p.strip()]

    return parse


def _as_complex(v) -> complex:
    if isinstance(v, (list, tuple)):
        return complex(v[0], v[1])
    return complex(v)


def load_custom_symbol(path: str) -> FHSymbol:
    """Read ``{"singularities": [{"x", "a", "b"}], "log_coeffs": [...]}``.

    ``log_coeffs`` lists ``l_{-K} .. l_K``; complex entries as ``[re, im]``.
    """
    with open(path) as fh:
        data = json.load(fh)
    coeffs = [_as_complex(c) for c in data.get("log_coeffs", [0.0])]
    sings = [
        FHSingularity(s["x"], _as_complex(s.get("a", 0.0)), _as_complex(s.get("b", 0.0)))
        for s in data.get("singularities", [])
    ]
    return FHSymbol(SmoothSymbol(np.array(coeffs, dtype=complex)), tuple(sings))


def build_symbol(cfg: RunConfig) -> FHSymbol:
    if cfg.symbol == "identity":
        return identity_symbol()
    if cfg.symbol == "szego":
        return szego_symbol(cfg.t)
    if cfg.symbol == "custom":
        return load_custom_symbol(cfg.symbol_file)
    if cfg.symbol == "dd":
        return density_density_symbol(cfg.x_r)
    if cfg.symbol == "jump":
        return jump_symbol(cfg.alpha, cfg.x_r)
    return density_matrix_symbol(cfg.alpha, cfg.x_r)


# -- subcommands ------------------------------------------------------------


def run_barnes(cfg: RunConfig):
    yield {"z": cplx(cfg.z), "G": cplx(barnes_g(cfg.z)), "logG": cplx(log_barnes_g(cfg.z))}


def run_reps(cfg: RunConfig):
    reps = enumerate_representations(build_symbol(cfg), cfg.bound)
    best = {r.shifts for r in minimal_representations(reps)}
    yield [
        {
            "shifts": list(r.shifts),
            "betas": [cplx(b) for b in r.betas],
            "Q": cplx(r.exponent),
            "minimal": r.shifts in best,
        }
        for r in reps
    ]


def run_exact(cfg: RunConfig):
    sym = build_symbol(cfg)
    for N in cfg.n:
        coeffs = toeplitz_coefficients(sym, N, cfg.grid)
        ld = toeplitz_determinant(coeffs, N)
        yield {
            "N": N,
            "det": cplx(ld.value),
            "log_modulus": ld.log_modulus,
            "phase": ld.phase,
            "quad_err": coeffs.error,
            "grid": coeffs.grid,
            "method": coeffs.method,
        }


def run_asymptote(cfg: RunConfig):
    exp = fh_expansion(build_symbol(cfg), cfg.bound)
    for N in cfg.n:
        yield {
            "N": N,
            "l0": cplx(exp.l0),
            "representations": [
                {
                    "shifts": list(t.shifts),
                    "betas": [cplx(b) for b in t.betas],
                    "l0": cplx(t.l0),
                    "Q": cplx(t.exponent),
                    "E": cplx(t.E),
                }
                for t in exp.terms
            ],
            "D": cplx(exp(N)),
        }


def _rel_err(exact: complex, asym: complex) -> float:
    den = abs(exact)
    if den == 0:
        return 0.0 if asym == 0 else math.inf
    return abs(exact - asym) / den


def run_compare(cfg: RunConfig):
    sym = build_symbol(cfg)
    exp = fh_expansion(sym, cfg.bound)
    header = ["N", "exact_re", "exact_im", "asym_re", "asym_im", "rel_err"]
    yield header
    for N in cfg.n:
        e = toeplitz_determinant(toeplitz_coefficients(sym, N, cfg.grid), N).value
        a = exp(N)
        yield [N, e.real, e.imag, a.real, a.imag, _rel_err(e, a)]


def _correlator_pair(kind: str, p: corr.GasParameters, grid, want_exact=True, want_asym=True):
    extra = {}
    exact = asym = None
    if kind == "galpha":
        if want_exact:
            exact = corr.g_alpha_exact(p, grid)
        if want_asym:
            asym = corr.free_fermion_green_fh(p) if p.degenerate else corr.g_alpha_asymptotic(p)
    elif kind == "green":
        q = corr.GasParameters(p.M, p.L, p.x, math.pi)
        if want_exact:
            exact = corr.g_alpha_exact(q, grid)
        if want_asym:
            asym = complex(corr.free_fermion_green(q))
            extra["fh_sum"] = cplx(corr.free_fermion_green_fh(q))
    elif kind == "counting":
        if want_exact:
            exact = corr.exp_counting_exact(p, grid)
        if want_asym:
            asym = corr.exp_counting_asymptotic(p)
    else:
        dd = corr.density_density(p, grid)
        exact = complex(dd.exact)
        asym = complex(dd.leading)
        extra.update(
            det_exact=dd.det_exact,
            det_identity=dd.det_identity,
            det_free_fermion=dd.det_free_fermion,
            det_fh=dd.det_fh,
        )
    return exact, asym, extra


def run_correlator(cfg: RunConfig):
    for M in cfg.M:
        for x in cfg.x:
            for alpha in cfg.alphas:
                p = corr.GasParameters(M, cfg.L, x, alpha)
                exact, asym, extra = _correlator_pair(
                    cfg.kind, p, cfg.grid, cfg.mode in ("exact", "both"), cfg.mode in ("asym", "both")
                )
                row = {"kind": cfg.kind, "M": M, "L": cfg.L, "x": x, "alpha": alpha}
                if exact is not None:
                    row["exact"] = cplx(exact)
                if asym is not None:
                    row["asym"] = cplx(asym)
                if exact is not None and asym is not None:
                    row["rel_err"] = _rel_err(exact, asym)
                row.update(extra)
                yield row


def run_sweep(cfg: RunConfig):
    yield ["M", "x", "alpha", "exact_re", "exact_im", "asym_re", "asym_im", "rel_err"]
    for M in cfg.M:
        for x in cfg.x:
            for alpha in cfg.alphas:
                p = corr.GasParameters(M, cfg.L, x, alpha)
                e, a, _ = _correlator_pair(cfg.kind, p, cfg.grid)
                yield [M, x, alpha, e.real, e.imag, a.real, a.imag, _rel_err(e, a)]


COMMANDS = {
    "barnes": (run_barnes, "json"),
    "reps": (run_reps, "json"),
    "exact": (run_exact, "json"),
    "asymptote": (run_asymptote, "json"),
    "correlator": (run_correlator, "json"),
    "compare": (run_compare, "csv"),
    "sweep": (run_sweep, "csv"),
}


# -- output -----------------------------------------------------------------


def _fmt(v):
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def render(records, fmt: str) -> str:
    """Serialise subcommand output.

    Tabular commands yield a header list followed by row lists; the others
    yield dicts (or one list of dicts).
    """
    buf = io.StringIO()
    header = None
    if fmt == "json":
        for r in records:
            if header is None and isinstance(r, list) and r and isinstance(r[0], str):
                header = r
                continue
            if header is not None:
                r = dict(zip(header, r))
            buf.write(json.dumps(r) + "\n")
        return buf.getvalue()

    buf.write(CSV_TAG + "\n")
    w = csv.writer(buf, lineterminator="\n")
    for r in records:
        items = r if isinstance(r, list) and r and isinstance(r[0], dict) else [r]
        for item in items:
            if isinstance(item, dict):
                flat = _flatten(item)
                if header is None:
                    header = list(flat)
                    w.writerow(header)
                w.writerow([_fmt(flat.get(h, "")) for h in header])
            else:
                if header is None:
                    header = item
                w.writerow([_fmt(v) for v in item])
    return buf.getvalue()


def _flatten(d: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "_"))
        elif isinstance(v, list):
            out[key] = json.dumps(v)
        else:
            out[key] = v
    return out


# -- argument parsing -------------------------------------------------------


def _add_symbol_args(p: argparse.ArgumentParser):
    p.add_argument("--symbol", choices=SYMBOLS, default="identity")
    p.add_argument("--alpha", type=float, default=0.0, help="phase parameter (radians, default 0)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--xr", type=float, help="singularity angle x_r in (0, 2pi)")
    g.add_argument("--xr-frac", type=float, help="x/L; sets x_r = 2 pi x/L")
    p.add_argument("--t", type=float, default=0.5, help="szego symbol exp(t cos x) (default 0.5)")
    p.add_argument("--symbol-file", help="JSON description for --symbol custom")


def _add_common(p: argparse.ArgumentParser, default_fmt: str):
    p.add_argument("--format", choices=("json", "csv"), default=default_fmt)
    p.add_argument("--output", "-o", help="output path (default stdout)")
    p.add_argument("--seed", type=int, default=None, help="reserved; the pipeline is deterministic")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fh-toeplitz",
        description="Fisher-Hartwig asymptotics vs exact Toeplitz determinants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("barnes", help="Barnes G-function")
    p.add_argument("--z", type=_parse_complex, required=True, help="'re' or 're,im'")
    _add_common(p, "json")

    p = sub.add_parser("reps", help="enumerate representations")
    _add_symbol_args(p)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    _add_common(p, "json")

    for name, fmt, helptext in (
        ("exact", "json", "exact Toeplitz determinant"),
        ("asymptote", "json", "Fisher-Hartwig asymptote"),
        ("compare", "csv", "exact vs asymptote over an N sweep"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_symbol_args(p)
        p.add_argument("--n", type=_parse_list(int), required=True, help="N or comma list")
        p.add_argument("--grid", type=int, default=None, help="quadrature resolution")
        p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
        _add_common(p, fmt)

    for name, fmt in (("correlator", "json"), ("sweep", "csv")):
        p = sub.add_parser(name, help=f"physical correlators ({name})")
        p.add_argument("--kind", choices=KINDS, required=True)
        p.add_argument("--m", type=_parse_list(int), required=True, help="particle count(s)")
        p.add_argument("--l", type=float, default=1.0, help="system length (default 1)")
        p.add_argument("--x", type=_parse_list(float), required=True, help="separation(s)")
        p.add_argument("--alpha", type=_parse_list(float), default=[0.0], help="phase(s)")
        p.add_argument("--grid", type=int, default=None)
        if name == "correlator":
            m = p.add_mutually_exclusive_group()
            m.add_argument("--exact", dest="mode", action="store_const", const="exact")
            m.add_argument("--asym", dest="mode", action="store_const", const="asym")
            m.add_argument("--both", dest="mode", action="store_const", const="both")
            p.set_defaults(mode="both")
        _add_common(p, fmt)
    return parser


def config_from_args(args, parser) -> RunConfig:
    cfg = RunConfig(command=args.command, fmt=args.format, output=args.output)
    if args.command == "barnes":
        cfg.z = args.z
        return cfg
    if args.command in ("reps", "exact", "asymptote", "compare"):
        cfg.symbol = args.symbol
        cfg.alpha = args.alpha
        cfg.t = args.t
        cfg.symbol_file = args.symbol_file
        cfg.bound = args.bound
        if cfg.bound < 1:
            parser.error("--bound must be >= 1")
        cfg.x_r = args.xr if args.xr_frac is None else 2 * math.pi * args.xr_frac
        if args.symbol in ("jump", "dm", "dd"):
            if cfg.x_r is None:
                parser.error(f"--symbol {args.symbol} needs --xr or --xr-frac")
            if not 0 < cfg.x_r < 2 * math.pi:
                parser.error("x_r must lie in (0, 2pi)")
        if args.symbol == "custom" and not args.symbol_file:
            parser.error("--symbol custom needs --symbol-file")
        if args.command != "reps":
            cfg.n = args.n
            cfg.grid = args.grid
            if not cfg.n or min(cfg.n) < 1:
                parser.error("--n values must be >= 1")
        return cfg
    cfg.kind = args.kind
    cfg.M, cfg.L, cfg.x, cfg.alphas, cfg.grid = args.m, args.l, args.x, args.alpha, args.grid
    cfg.mode = getattr(args, "mode", "both")
    if cfg.L <= 0:
        parser.error("--l must be positive")
    if not all(0 < x < cfg.L for x in cfg.x):
        parser.error("--x values must lie in (0, L)")
    min_m = {"dd": 4, "galpha": 2, "green": 2}.get(cfg.kind, 1)
    if not cfg.M or min(cfg.M) < min_m:
        parser.error(f"--m must be >= {min_m} for kind {cfg.kind}")
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args, parser)
    func, _ = COMMANDS[cfg.command]
    try:
        text = render(func(cfg), cfg.fmt)
    except (ValueError, ArithmeticError, RuntimeError, OSError, np.linalg.LinAlgError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc), "type": type(exc).__name__}) + "\n")
        return 1
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
