#!/usr/bin/env python3
"""Regenerate the bundled table of imaginary parts of Riemann zeta zeros.

Uses mpmath (not a runtime dependency of the package) at 25 working digits
and writes one value per line with 16 significant digits, which is more than
double precision can resolve.  Run from the repository root:

    python3 tools/make_zeros_table.py [count] [outfile]
"""

import sys

import mpmath


def main(argv):
    count = int(argv[1]) if len(argv) > 1 else 1000
    out = argv[2] if len(argv) > 2 else "src/wittkit/data/zeta_zeros_1000.txt"
    mpmath.mp.dps = 25
    lines = [
        "# Imaginary parts of the first %d nontrivial zeros of the Riemann zeta\n"
        "# function on the critical line, one per line, strictly increasing.\n"
        "# Generated by tools/make_zeros_table.py via mpmath.zetazero." % count
    ]
    prev = mpmath.mpf(0)
    for k in range(1, count + 1):
        g = mpmath.zetazero(k).imag
        assert g > prev, f"zero #{k} not increasing"
        prev = g
        lines.append(mpmath.nstr(g, 16))
        if k % 100 == 0:
            print(f"{k}/{count}", file=sys.stderr)
    with open(out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {count} zeros to {out}", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv)
