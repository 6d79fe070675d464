"""Exact polynomial arithmetic over the Gaussian tower fields."""

from .multivariate import BiPoly
from .univariate import Poly, SqfDecomp, gcd, gcdex, lcm, resultant, discriminant, sqfree_decompose, squarefree_part

__all__ = [
    "BiPoly",
    "Poly",
    "SqfDecomp",
    "gcd",
    "gcdex",
    "lcm",
    "resultant",
    "discriminant",
    "sqfree_decompose",
    "squarefree_part",
]
