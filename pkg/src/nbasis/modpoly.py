"""Polynomial arithmetic over Z/NZ with hooked gcd and squarefree decomposition.

Polynomials are dense coefficient lists, degree-ascending, with coefficients
reduced to [0, N) and trailing zeros trimmed; [] is the zero polynomial.
N may be composite: whenever a leading coefficient fails to be a unit, the
routines raise DivisorOfModulus instead of dividing, surrendering a proper
divisor of N.

Almost-monic means the leading coefficient is a unit mod N.  Division with
remainder requires an almost-monic divisor; the gcd routine normalizes its
intermediate remainders monic, detecting divisors of N along the way.
"""

import math

from .modint import DivisorOfModulus, InconsistencyError, invert_or_divisor


def trim(coeffs) -> list[int]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def reduce_poly(coeffs, n: int) -> list[int]:
    """Canonical representative mod n: coefficients in [0, n), trimmed."""
    return trim(c % n for c in coeffs)


def degree(p) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(p) - 1


def is_one(p) -> bool:
    return len(p) == 1 and p[0] == 1


def add(p, q, n: int) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] = (out[i] + c) % n
    return trim(out)


def sub(p, q, n: int) -> list[int]:
    out = list(p) + [0] * (len(q) - len(p))
    for i, c in enumerate(q):
        out[i] = (out[i] - c) % n
    return trim(out)


def mul(p, q, n: int) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = (out[i + j] + a * b) % n
    return trim(out)


def scale(p, c: int, n: int) -> list[int]:
    c %= n
    return trim(a * c % n for a in p)


def derivative(p, n: int) -> list[int]:
    return trim(i * c % n for i, c in enumerate(p) if i > 0)


def quotrem(h, g, n: int) -> tuple[list[int], list[int]]:
    """Division with remainder by an almost-monic g: h = g*q + r, deg r < deg g.

    Raises ValueError if the leading coefficient of g is not a unit
    (callers must normalize first, detecting divisors of N as they do).
    """
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    lc = g[-1]
    lcinv = 1 if lc == 1 else pow(lc, -1, n)  # ValueError if not a unit
    dg = len(g) - 1
    r = [c % n for c in h]
    if len(r) <= dg:
        return [], trim(r)
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c == 0:
            continue
        factor = c * lcinv % n
        q[i - dg] = factor
        for j, b in enumerate(g):
            r[i - dg + j] = (r[i - dg + j] - factor * b) % n
    return trim(q), trim(r)


def exact_div(h, g, n: int) -> list[int]:
    """Quotient of an exact division; nonzero remainder is an internal bug."""
    q, r = quotrem(h, g, n)
    if r:
        raise InconsistencyError("division expected to be exact left a remainder")
    return q


def _make_monic(p, n: int) -> list[int]:
    """Scale p by the inverse of its leading coefficient; hook on a non-unit."""
    lc = p[-1]
    b = math.gcd(lc, n)
    if b != 1:
        raise DivisorOfModulus(b, n)
    if lc == 1:
        return list(p)
    return scale(p, pow(lc, -1, n), n)


def gcd0(f, g, n: int) -> list[int]:
    """Monic d with f*A[x] + g*A[x] = d*A[x], A = Z/nZ; hooks on zero divisors.

    Euclidean remainder chain; every divisor is first normalized monic, and a
    non-unit leading coefficient raises DivisorOfModulus.
    """
    f = reduce_poly(f, n)
    g = reduce_poly(g, n)
    if not f and not g:
        raise ValueError("gcd0(0, 0) is undefined")
    while g:
        g = _make_monic(g, n)
        _, r = quotrem(f, g, n)
        f, g = g, r
    return _make_monic(f, n)


def xgcd0(f, g, n: int) -> tuple[list[int], list[int], list[int]]:
    """Extended gcd0: (d, r, s) with r*f + s*g = d, d monic."""
    f0 = reduce_poly(f, n)
    g0 = reduce_poly(g, n)
    if not f0 and not g0:
        raise ValueError("gcd0(0, 0) is undefined")
    rf, rg = [1], []
    sf, sg = [], [1]
    f, g = f0, g0
    while g:
        lc = g[-1]
        b = math.gcd(lc, n)
        if b != 1:
            raise DivisorOfModulus(b, n)
        if lc != 1:
            inv = pow(lc, -1, n)
            g = scale(g, inv, n)
            rg = scale(rg, inv, n)
            sg = scale(sg, inv, n)
        q, r = quotrem(f, g, n)
        rnew = sub(rf, mul(q, rg, n), n)
        snew = sub(sf, mul(q, sg, n), n)
        f, rf, sf, g, rg, sg = g, rg, sg, r, rnew, snew
    lc = f[-1]
    b = math.gcd(lc, n)
    if b != 1:
        raise DivisorOfModulus(b, n)
    if lc != 1:
        inv = pow(lc, -1, n)
        f = scale(f, inv, n)
        rf = scale(rf, inv, n)
        sf = scale(sf, inv, n)
    return f, rf, sf


def sfd0(f, n: int) -> list[tuple[list[int], int]]:
    """Squarefree decomposition of a monic f in (Z/nZ)[x], with hooks.

    Returns pairs (g, l) with g monic, squarefree, pairwise coprime and
    f = prod g^l mod n, exponents strictly increasing.  Requires
    deg f < p for every prime p | n (the driver strips small primes to
    guarantee this).  Any zero divisor met along the way raises
    DivisorOfModulus.
    """
    f = reduce_poly(f, n)
    if not f or f[-1] != 1:
        raise ValueError("sfd0 requires a monic polynomial")
    out: list[tuple[list[int], int]] = []
    j = 1
    g = exact_div(f, gcd0(f, derivative(f, n), n), n)
    while not is_one(f):
        f = exact_div(f, g, n)
        h = gcd0(f, g, n)
        t = exact_div(g, h, n)
        if not is_one(t):
            out.append((t, j))
        g = h
        j += 1
    return out


def ord_mod(h, g, n: int) -> int:
    """Largest k with g^k dividing h in (Z/nZ)[x], for monic g of degree >= 1."""
    h = reduce_poly(h, n)
    g = reduce_poly(g, n)
    if not h:
        raise ValueError("ord of the zero polynomial is undefined")
    if degree(g) < 1 or g[-1] != 1:
        raise ValueError("ord_mod requires a monic divisor of positive degree")
    k = 0
    while True:
        q, r = quotrem(h, g, n)
        if r:
            return k
        # h nonzero and g monic force q nonzero, so this terminates:
        # the degree drops by deg g every exact division.
        k += 1
        h = q
