"""Exact vs asymptotic correlators over a sweep of particle numbers.

Writes a CSV with one row per (kind, M) and prints the error ratio between
successive doublings of M.

    python3 scripts/convergence.py --x 0.3 --alpha 1.884955592 -o conv.csv
"""

import argparse
import csv
import math
import sys
from dataclasses import dataclass

from fhtoeplitz.correlators import (
    GasParameters,
    exp_counting_asymptotic,
    exp_counting_exact,
    g_alpha_asymptotic,
    g_alpha_exact,
)


@dataclass
class SweepConfig:
    x: float = 0.3
    alpha: float = 0.6 * math.pi
    Ms: tuple = (16, 32, 64, 128, 256)
    output: str | None = None


def sweep(cfg: SweepConfig):
    for kind, exact, asym in (
        ("counting", exp_counting_exact, exp_counting_asymptotic),
        ("galpha", g_alpha_exact, g_alpha_asymptotic),
    ):
        prev = None
        for M in cfg.Ms:
            p = GasParameters(M, 1.0, cfg.x, cfg.alpha)
            e, a = exact(p), asym(p)
            err = abs(e / a - 1)
            yield kind, M, e, a, err, (err / prev if prev else float("nan"))
            prev = err


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--x", type=float, default=0.3)
    ap.add_argument("--alpha", type=float, default=0.6 * math.pi)
    ap.add_argument("--m", default="16,32,64,128,256")
    ap.add_argument("-o", "--output")
    args = ap.parse_args(argv)
    cfg = SweepConfig(args.x, args.alpha, tuple(int(m) for m in args.m.split(",")), args.output)
    if abs(abs(math.remainder(cfg.alpha, 2 * math.pi)) - math.pi) < 1e-9:
        ap.error("alpha = pi is degenerate; use scripts/degenerate.py")
    out = open(cfg.output, "w", newline="") if cfg.output else sys.stdout
    w = csv.writer(out)
    w.writerow(["kind", "M", "exact_re", "exact_im", "asym_re", "asym_im", "rel_err", "ratio"])
    for kind, M, e, a, err, ratio in sweep(cfg):
        w.writerow([kind, M, e.real, e.imag, a.real, a.imag, f"{err:.6e}", f"{ratio:.4f}"])
    if out is not sys.stdout:
        out.close()


if __name__ == "__main__":
    main()
