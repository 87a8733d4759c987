"""Exact intersection-cohomology and multiplicity polynomials for Schubert
varieties in Grassmannians.

Polynomials cross the boundary as lists of ``(exponent, coefficient)`` pairs
in ascending exponent order, with coefficients as exact Python ints.
"""

from kalu._core import (
    decompose,
    essential,
    gauss_poincare,
    kl,
    scan_relevant,
    smallness,
    validate,
    verify,
)

__all__ = [
    "decompose",
    "essential",
    "gauss_poincare",
    "kl",
    "poly_text",
    "scan_relevant",
    "smallness",
    "validate",
    "verify",
]


def poly_text(terms):
    """Render ``[(exponent, coefficient), ...]`` the way the CLI prints it."""
    if not terms:
        return "0"
    pieces = []
    for pos, (e, c) in enumerate(terms):
        a = c
        if pos == 0:
            head = "-" if a < 0 else ""
        else:
            head = " - " if a < 0 else " + "
        if a < 0:
            a = -a
        if e == 0:
            body = str(a)
        else:
            body = ("" if a == 1 else f"{a}*") + "t" + ("" if e == 1 else f"^{e}")
        pieces.append(head + body)
    return "".join(pieces)
