"""Exact-arithmetic toolkit for graded Weyl group characters.

Computes Green polynomials of GL_n, graded characters of nilpotent
fixed-point varieties, their values at roots of unity, and runs the
twisted-induction consistency checks exposed by the ``greenchar`` CLI.
All arithmetic is exact (integers, rationals, cyclotomic fields); there
is no floating point anywhere in the package.
"""

__version__ = "0.1.0"
