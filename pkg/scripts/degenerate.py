"""Counting correlator at alpha = pi: exact determinant against the
two-representation sum, with the error measured relative to the envelope
2 (2M sin(pi x/L))^(-1/2) [G(3/2) G(1/2)]^2."""

import argparse
import math

from fhtoeplitz.correlators import GasParameters, exp_counting_asymptotic, exp_counting_exact
from fhtoeplitz.special import barnes_g


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--x", type=float, default=0.3)
    ap.add_argument("--m", default="32,64,128,256,512")
    args = ap.parse_args(argv)
    const = (barnes_g(1.5) * barnes_g(0.5)).real ** 2
    print(f"[G(3/2)G(1/2)]^2 = {const:.10f}")
    print(f"{'M':>5} {'|cos|':>7} {'exact':>12} {'asym':>12} {'env err':>10}")
    for M in (int(m) for m in args.m.split(",")):
        p = GasParameters(M, 1.0, args.x, math.pi)
        e, a = exp_counting_exact(p).real, exp_counting_asymptotic(p).real
        env = 2 * p.chord**-0.5 * const
        c = abs(math.cos(math.pi * M * args.x))
        print(f"{M:5d} {c:7.3f} {e:12.8f} {a:12.8f} {abs(e - a) / env:10.3e}")


if __name__ == "__main__":
    main()
