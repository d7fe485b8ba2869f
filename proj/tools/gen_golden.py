#!/usr/bin/env python3
"""Regenerate tests/data/golden_special.csv with mpmath at 50 digits.

Each row holds an abscissa x in (0, 1) (as a C99 hex float, exactly the
double the tests will use) followed by log Gamma(x) and psi(x) evaluated at
that exact binary value.
"""
import sys
import mpmath

mpmath.mp.dps = 50


def main(path):
    with open(path, "w") as out:
        out.write("# x_hex,log_gamma,digamma\n")
        for i in range(1000):
            x = (i + 0.5) / 1000.0
            xm = mpmath.mpf(x)
            lg = mpmath.loggamma(xm)
            dg = mpmath.digamma(xm)
            out.write("%s,%s,%s\n" % (x.hex(), mpmath.nstr(lg, 30), mpmath.nstr(dg, 30)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/golden_special.csv")
