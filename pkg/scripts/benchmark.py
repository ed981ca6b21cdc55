#!/usr/bin/env python3
"""Run the res/rres timing sweep and report complexity-shape ratios.

Wraps `ringres bench`: times res and rres on random monic pairs of degree
64..1024 over a 64-bit prime, a prime power, and an 8-prime-factor composite
of matching bit size, then prints the degree-doubling and composite/prime
ratios checked by the acceptance suite (run with RINGRES_BENCH=1).
"""
import argparse
import csv
import io
import sys
from contextlib import redirect_stdout

from ringres.cli import main as cli_main


def run(seed: int, out: str | None):
    argv = ["bench", "--seed", str(seed)]
    if out:
        cli_main(argv + ["--out", out])
        with open(out, newline="") as fh:
            rows = list(csv.reader(fh))
    else:
        buf = io.StringIO()
        with redirect_stdout(buf):
            cli_main(argv)
        rows = list(csv.reader(io.StringIO(buf.getvalue())))
    header, body = rows[0], rows[1:]
    print(",".join(header))
    for row in body:
        print(",".join(row))

    times = {(alg, int(d), cls): float(sec) for alg, d, cls, sec in body}
    print("\ndegree-doubling ratios (target <= 5):")
    for alg in ("res", "rres"):
        for d in (128, 256, 512):
            a, b = times[(alg, d, "prime")], times[(alg, 2 * d, "prime")]
            print(f"  {alg} prime {d}->{2 * d}: x{b / max(a, 1e-9):.2f}")
    print("composite/prime ratios at fixed degree (target <= 3):")
    for alg in ("res", "rres"):
        for d in (128, 256, 512):
            a = times[(alg, d, "prime")]
            b = times[(alg, d, "composite")]
            print(f"  {alg} d={d}: x{b / max(a, 1e-9):.2f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", help="also write the raw timing table as CSV")
    args = ap.parse_args()
    run(args.seed, args.out)


if __name__ == "__main__":
    sys.exit(main())
