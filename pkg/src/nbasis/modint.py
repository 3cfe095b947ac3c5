"""Residue arithmetic in Z/NZ with divisor-detecting primitives.

N may be composite and of arbitrary size.  Residues are plain Python ints
kept in [0, N).  Operations that would need N to be prime carry "hooks":
instead of failing on a zero divisor they raise :class:`DivisorOfModulus`
carrying a proper divisor of N.  Callers treat that exception as a usable
result (a splitting of the modulus), not as an error.

The valuation v_N(0) = infinity is represented by ``INFINITY`` below; it is
a sentinel ordinate ordered above every finite value and never enters
arithmetic.
"""

import math

INFINITY = math.inf


class DivisorOfModulus(Exception):
    """A ring operation met a zero divisor and surrenders a proper divisor of N."""

    def __init__(self, divisor: int, modulus: int):
        if not 1 < divisor < modulus or modulus % divisor != 0:
            raise ValueError(f"{divisor} is not a proper divisor of {modulus}")
        self.divisor = divisor
        self.modulus = modulus
        super().__init__(f"detected divisor {divisor} of modulus {modulus}")


class FactorOfPolynomial(Exception):
    """An extension-ring operation surrenders a proper monic factor of the defining polynomial.

    ``factor`` divides ``of_poly`` exactly in (Z/NZ)[x], with
    0 < deg factor < deg of_poly.
    """

    def __init__(self, factor, of_poly, modulus: int):
        self.factor = tuple(factor)
        self.of_poly = tuple(of_poly)
        self.modulus = modulus
        super().__init__(f"detected proper factor of degree {len(factor) - 1} "
                         f"polynomial of degree {len(of_poly) - 1} (modulus {modulus})")


class InconsistencyError(RuntimeError):
    """An internal identity failed: signals an arithmetic bug or a violated
    caller obligation (e.g. reducible input), never a modulus splitting."""


def gcd_with_modulus(a: int, n: int) -> int:
    """The unique positive divisor m of n such that a = m * unit in Z/nZ.

    Elements generating the same ideal of Z/nZ are associates, so this is
    the plain integer gcd of the canonical lift with n.  Returns n for a = 0.
    """
    if n < 2:
        raise ValueError("modulus must be >= 2")
    a %= n
    if a == 0:
        return n
    return math.gcd(a, n)


def invert_or_divisor(a: int, n: int) -> int:
    """Inverse of a mod n, or raise DivisorOfModulus(gcd(a, n)).

    a must be nonzero mod n.
    """
    a %= n
    if a == 0:
        raise ValueError("cannot invert zero")
    g = math.gcd(a, n)
    if g != 1:
        raise DivisorOfModulus(g, n)
    return pow(a, -1, n)


def val_n(a: int, n: int) -> int:
    """N-adic valuation with hook: the k with |a| = n^k * b, gcd(b, n) = 1.

    Divides by n until the remainder is nonzero; if that remainder shares a
    factor with n, raises DivisorOfModulus with it.  a must be nonzero;
    callers represent v(0) by the INFINITY sentinel.
    """
    if a == 0:
        raise ValueError("valuation of 0 is the INFINITY sentinel, not a value")
    if n < 2:
        raise ValueError("modulus must be >= 2")
    q = abs(a)
    r = 0
    value = -1
    while r == 0:
        value += 1
        q, r = divmod(q, n)
    d = math.gcd(r, n)
    if d != 1:
        raise DivisorOfModulus(d, n)
    return value
