"""Componentwise gcds of polynomials over Q[z1..zn]/T."""

from fractions import Fraction

from . import _core
from ._core import NotRadical, ParseError, TsetError, canonical, gcd, inv, is_radical_prime, mul, mul_cost_bound

__all__ = [
    "NotRadical",
    "ParseError",
    "TsetError",
    "canonical",
    "gcd",
    "inv",
    "is_radical_prime",
    "mul",
    "mul_cost_bound",
    "rational_reconstruction",
]


def rational_reconstruction(c, m):
    r = _core.rational_reconstruction(int(c), int(m))
    return None if r is None else Fraction(*r)
