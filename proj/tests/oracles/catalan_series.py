"""Taylor coefficients of (1 - sqrt(1 - 4x^2)) / 2 up to a given order.

Prints one "exponent coefficient" line per nonzero term.
"""
import sys

import sympy


def main() -> None:
    order = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    x = sympy.symbols("x")
    expansion = sympy.series((1 - sympy.sqrt(1 - 4 * x**2)) / 2, x, 0, order + 1).removeO()
    poly = sympy.Poly(expansion, x)
    for (exponent,), coefficient in sorted(poly.terms()):
        print(exponent, coefficient)


if __name__ == "__main__":
    main()
