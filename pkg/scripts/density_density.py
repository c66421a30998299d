"""Density-density determinant: exact det_{M-2} against the leading
Fisher-Hartwig value (M-2)^2 / (4 sin^2(pi x/L)) and the Wick closed form
(M^2 - sin^2(pi M x/L)/sin^2(pi x/L)) / (4 sin^2(pi x/L))."""

import argparse

from fhtoeplitz.correlators import GasParameters, density_density


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--x", default="0.2,0.3,0.45")
    ap.add_argument("--m", default="10,20,40,80,160")
    args = ap.parse_args(argv)
    print(f"{'M':>5} {'x':>5} {'det exact':>14} {'FH leading':>14} {'Wick':>14} {'rel dev':>9}")
    for M in (int(m) for m in args.m.split(",")):
        for x in (float(v) for v in args.x.split(",")):
            d = density_density(GasParameters(M, 1.0, x))
            dev = abs(d.det_exact / d.det_identity - 1)
            print(f"{M:5d} {x:5.2f} {d.det_exact:14.6f} {d.det_identity:14.6f} "
                  f"{d.det_free_fermion:14.6f} {dev:9.2e}")


if __name__ == "__main__":
    main()
