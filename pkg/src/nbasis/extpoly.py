"""Arithmetic in A1 = (Z/NZ)[x]/(g) and hooked gcd/squarefree decomposition in A1[y].

g is monic and squarefree mod N (certified upstream).  Elements of A1 are
coefficient lists of degree < deg g; polynomials over A1 are lists of such
elements, trailing zero elements trimmed.

A nonzero element of A1 is either a unit or it betrays structure: inverting
it runs the extended gcd against g, which yields the inverse, a proper monic
factor of g (FactorOfPolynomial), or a proper divisor of N (DivisorOfModulus).
The gcd in A1[y] repeats the Euclidean scheme of the base ring with this
three-way leading-coefficient normalization.
"""

from .modint import FactorOfPolynomial, InconsistencyError
from . import modpoly


def elem_reduce(a, n: int, g) -> list[int]:
    _, r = modpoly.quotrem(modpoly.reduce_poly(a, n), g, n)
    return r


def elem_add(a, b, n: int) -> list[int]:
    return modpoly.add(a, b, n)


def elem_sub(a, b, n: int) -> list[int]:
    return modpoly.sub(a, b, n)


def elem_mul(a, b, n: int, g) -> list[int]:
    _, r = modpoly.quotrem(modpoly.mul(a, b, n), g, n)
    return r


def elem_is_one(a) -> bool:
    return modpoly.is_one(a)


def unit_or_factor(a, n: int, g) -> list[int]:
    """Inverse of a nonzero element of A1, or a hook.

    gcd(a, g) = 1 gives the inverse from the Bezout identity r*a + s*g = 1;
    a monic gcd of positive degree is a proper factor of g (proper because
    a is nonzero mod g); zero divisors of N propagate as DivisorOfModulus.
    """
    a = elem_reduce(a, n, g)
    if not a:
        raise ValueError("cannot invert zero")
    d, r, _ = modpoly.xgcd0(a, g, n)
    if modpoly.is_one(d):
        return elem_reduce(r, n, g)
    raise FactorOfPolynomial(d, g, n)


def ext_trim(F) -> list[list[int]]:
    F = [list(c) for c in F]
    while F and not F[-1]:
        F.pop()
    return F


def ext_reduce(F, n: int, g) -> list[list[int]]:
    return ext_trim(elem_reduce(c, n, g) for c in F)


def ext_degree(F) -> int:
    return len(F) - 1


def ext_is_one(F) -> bool:
    return len(F) == 1 and elem_is_one(F[0])


def ext_add(F, G, n: int) -> list[list[int]]:
    if len(F) < len(G):
        F, G = G, F
    out = [list(c) for c in F]
    for i, c in enumerate(G):
        out[i] = elem_add(out[i], c, n)
    return ext_trim(out)


def ext_sub(F, G, n: int) -> list[list[int]]:
    out = [list(c) for c in F] + [[] for _ in range(len(G) - len(F))]
    for i, c in enumerate(G):
        out[i] = elem_sub(out[i], c, n)
    return ext_trim(out)


def ext_mul(F, G, n: int, g) -> list[list[int]]:
    if not F or not G:
        return []
    out = [[] for _ in range(len(F) + len(G) - 1)]
    for i, a in enumerate(F):
        if not a:
            continue
        for j, b in enumerate(G):
            out[i + j] = elem_add(out[i + j], modpoly.mul(a, b, n), n)
    return ext_trim(elem_reduce(c, n, g) for c in out)


def ext_scale(F, a, n: int, g) -> list[list[int]]:
    return ext_trim(elem_mul(c, a, n, g) for c in F)


def ext_derivative(F, n: int) -> list[list[int]]:
    return ext_trim(modpoly.scale(c, i, n) for i, c in enumerate(F) if i > 0)


def ext_quotrem(F, G, n: int, g) -> tuple[list[list[int]], list[list[int]]]:
    """Division with remainder in A1[y] by a monic G."""
    if not G:
        raise ZeroDivisionError("division by zero polynomial")
    if not elem_is_one(G[-1]):
        raise ValueError("ext_quotrem requires a monic divisor")
    dG = len(G) - 1
    r = [list(c) for c in F]
    if len(r) <= dG:
        return [], ext_trim(r)
    q = [[] for _ in range(len(r) - dG)]
    for i in range(len(r) - 1, dG - 1, -1):
        c = r[i]
        if not c:
            continue
        q[i - dG] = c
        for j, b in enumerate(G):
            r[i - dG + j] = elem_sub(r[i - dG + j], elem_mul(c, b, n, g), n)
    return ext_trim(q), ext_trim(r)


def ext_exact_div(F, G, n: int, g) -> list[list[int]]:
    q, r = ext_quotrem(F, G, n, g)
    if r:
        raise InconsistencyError("division expected to be exact left a remainder")
    return q


def _ext_make_monic(F, n: int, g) -> list[list[int]]:
    lc = F[-1]
    if elem_is_one(lc):
        return [list(c) for c in F]
    inv = unit_or_factor(lc, n, g)
    return ext_scale(F, inv, n, g)


def gcd1(F, G, n: int, g) -> list[list[int]]:
    """Monic d with F*A1[y] + G*A1[y] = d*A1[y]; hooks on zero divisors of N or g."""
    F = ext_reduce(F, n, g)
    G = ext_reduce(G, n, g)
    if not F and not G:
        raise ValueError("gcd1(0, 0) is undefined")
    while G:
        G = _ext_make_monic(G, n, g)
        _, r = ext_quotrem(F, G, n, g)
        F, G = G, r
    return _ext_make_monic(F, n, g)


def sfd1(F, n: int, g) -> list[tuple[list[list[int]], int]]:
    """Squarefree decomposition in A1[y]: the base-ring routine with gcd1.

    Requires F monic and deg F < p for all primes p | n.
    """
    F = ext_reduce(F, n, g)
    if not F or not elem_is_one(F[-1]):
        raise ValueError("sfd1 requires a monic polynomial")
    out: list[tuple[list[list[int]], int]] = []
    j = 1
    G = ext_exact_div(F, gcd1(F, ext_derivative(F, n), n, g), n, g)
    while not ext_is_one(F):
        F = ext_exact_div(F, G, n, g)
        h = gcd1(F, G, n, g)
        t = ext_exact_div(G, h, n, g)
        if not ext_is_one(t):
            out.append((t, j))
        G = h
        j += 1
    return out


def certify_squarefree(R, n: int, g) -> bool:
    """True iff R is squarefree in A1[y] as certified by its decomposition.

    R need not be monic (its leading coefficient is a nonzero element of A1);
    it is normalized by a leading-unit inverse first, which preserves
    squarefreeness modulo every maximal ideal.  Hooks propagate.
    """
    R = ext_reduce(R, n, g)
    if not R:
        raise ValueError("cannot certify the zero polynomial")
    monic = _ext_make_monic(R, n, g)
    return all(exponent == 1 for _, exponent in sfd1(monic, n, g))
