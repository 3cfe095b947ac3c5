"""Newton polygons modulo N: g-expansions, principal polygons, residual polynomials.

For a monic integer polynomial f and a monic factor g of f mod N (from the
squarefree decomposition), f has a unique expansion f = a_0 + a_1 g + ... +
a_r g^r over Z with deg a_j < deg g.  The quotients q_j of the successive
divisions are kept: they are the numerators of the basis elements later on.

Each coefficient gets the N-adic valuation u_j (INFINITY for a_j = 0); the
principal polygon is the negative-slope part of the lower convex hull of the
points (j, u_j).  Slopes and ordinates are exact Fractions; no floating
point enters the geometry (INFINITY only ever marks skipped points).

Residual polynomials live in A1[y] with A1 = (Z/NZ)[x]/(g), and the
regularity report certifies the three conditions under which the basis
construction applies:

  (1) every coefficient valuation is computable (no divisor of N detected),
  (2) at each vertex abscissa s, gcd0(a_s / N^{u_s}, g) = 1 mod N,
  (3) every residual polynomial is certified squarefree.

Failures of (1)-(2) are hooks (a divisor of N or a factor of g); a repeated
factor in (3) is a negative certificate reported as regular = False.
"""

from dataclasses import dataclass
from fractions import Fraction

from .modint import INFINITY, InconsistencyError
from . import extpoly, modpoly
from .modpoly import trim


@dataclass(frozen=True)
class Side:
    """One negative-slope side: slope -h/e in lowest terms, lattice endpoints."""
    h: int
    e: int
    left: tuple[int, int]
    right: tuple[int, int]

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.h, self.e)

    @property
    def length(self) -> int:
        return self.right[0] - self.left[0]

    @property
    def degree(self) -> int:
        return self.length // self.e


@dataclass(frozen=True)
class PrincipalPolygon:
    """Negative-slope part of the lower hull of (j, v_N(a_j)).

    ``ordinates`` holds the exact polygon ordinate y_j at each integer
    abscissa j = 1..length (strictly decreasing, ending at 0).
    """
    vertices: tuple[tuple[int, int], ...]
    sides: tuple[Side, ...]
    length: int
    ordinates: tuple[Fraction, ...]

    def floor_sum(self) -> int:
        return sum(int(y) // 1 if isinstance(y, int) else y.__floor__()
                   for y in self.ordinates)


@dataclass(frozen=True)
class GExpansion:
    """g-expansion of f with its division quotients and coefficient valuations."""
    g: tuple[int, ...]
    coefficients: tuple[tuple[int, ...], ...]   # a_0 .. a_r, integer polynomials
    quotients: tuple[tuple[int, ...], ...]      # q_1 .. q_r, q_j = f div g^j
    valuations: tuple                           # u_j = v_N(a_j), int or INFINITY


@dataclass(frozen=True)
class ResidualPolynomial:
    """Coefficients over A1 attached to the lattice points of one side."""
    side: Side
    coeffs: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class FactorAnalysis:
    g: tuple[int, ...]
    multiplicity: int
    expansion: GExpansion
    polygon: PrincipalPolygon
    residuals: tuple[ResidualPolynomial, ...]
    residual_squarefree: tuple[bool, ...]


@dataclass(frozen=True)
class RegularityReport:
    modulus: int
    factors: tuple[FactorAnalysis, ...]
    regular: bool
    all_slopes_integral: bool
    obstruction: str | None = None


def zquotrem(h, g) -> tuple[list[int], list[int]]:
    """Division with remainder in Z[x] by a monic g; exact integer arithmetic."""
    if not g or g[-1] != 1:
        raise ValueError("integer division requires a monic divisor")
    dg = len(g) - 1
    r = list(h)
    if len(r) <= dg:
        return [], trim(r)
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c == 0:
            continue
        q[i - dg] = c
        for j, b in enumerate(g):
            r[i - dg + j] -= c * b
    return trim(q), trim(r)


def g_expansion(f, g, n: int) -> GExpansion:
    """Expand f in powers of the monic integer lift g, keeping the quotients.

    The valuations are computed afterwards by the caller or by
    :func:`analyze_factor`; here they are filled with v_N of each coefficient,
    hooks propagating.
    """
    coeffs: list[tuple[int, ...]] = []
    quots: list[tuple[int, ...]] = []
    cur = list(f)
    while True:
        q, a = zquotrem(cur, g)
        coeffs.append(tuple(a))
        if not q:
            break
        quots.append(tuple(q))
        cur = q
    vals = tuple(val_n_poly(a, n) for a in coeffs)
    return GExpansion(g=tuple(g), coefficients=tuple(coeffs),
                      quotients=tuple(quots), valuations=vals)


def val_n_poly(p, n: int):
    """Minimum of v_N over the coefficients; INFINITY for the zero polynomial."""
    from .modint import val_n
    best = INFINITY
    for c in p:
        if c == 0:
            continue
        v = val_n(c, n)
        if v < best:
            best = v
            if best == 0:
                break
    return best


def _lower_hull(points) -> list[tuple[int, int]]:
    pts = sorted(points)
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # pop while the middle point is on or above the chord
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def principal_polygon(points, ell: int) -> PrincipalPolygon:
    """Negative-slope part of the lower convex hull, with exact ordinates.

    ``points`` are (abscissa, ordinate) with ordinate a nonnegative int or
    INFINITY (skipped).  ``ell`` is ord_g(f) mod N; the polygon must reach
    ordinate 0 exactly at abscissa ell, anything else indicates an internal
    arithmetic inconsistency (or a reducible input).
    """
    finite = [(x, y) for x, y in points if y != INFINITY]
    if not finite:
        raise ValueError("no finite ordinate among the points")
    hull = _lower_hull(finite)

    vertices: list[tuple[int, int]] = [hull[0]]
    for v in hull[1:]:
        if v[1] >= vertices[-1][1]:
            break
        vertices.append(v)
    end = vertices[-1]
    if end[1] != 0:
        raise InconsistencyError(f"principal polygon ends at ordinate {end[1]}, expected 0")
    if end[0] != ell:
        raise InconsistencyError(
            f"principal polygon has length {end[0]}, expected {ell}")
    if len(vertices) > 1 and vertices[0][0] > 0:
        # a missing left part means g^ell divided f exactly over Z
        raise InconsistencyError("expansion starts with zero coefficients; input reducible?")

    sides = []
    for (x1, y1), (x2, y2) in zip(vertices, vertices[1:]):
        lam = Fraction(y1 - y2, x2 - x1)
        sides.append(Side(h=lam.numerator, e=lam.denominator,
                          left=(x1, y1), right=(x2, y2)))

    ordinates = []
    for j in range(1, ell + 1):
        if len(vertices) == 1:
            ordinates.append(Fraction(0))
            continue
        for side in sides:
            if side.left[0] <= j <= side.right[0]:
                y = side.left[1] - Fraction(side.h, side.e) * (j - side.left[0])
                ordinates.append(y)
                break
        else:
            raise InconsistencyError(f"abscissa {j} not covered by any side")
    for a, b in zip(ordinates, ordinates[1:]):
        if not a > b:
            raise InconsistencyError("polygon ordinates must strictly decrease")
    if ordinates and ordinates[-1] != 0:
        raise InconsistencyError("last polygon ordinate must be 0")

    return PrincipalPolygon(vertices=tuple(vertices), sides=tuple(sides),
                            length=ell, ordinates=tuple(ordinates))


def _reduced_coefficient(a, u: int, n: int, g) -> list[int]:
    """red_{N,g}(a / N^u): exact coefficientwise division then reduction."""
    scaled = []
    p = n ** u
    for c in a:
        q, r = divmod(c, p)
        if r:
            raise InconsistencyError("coefficient not divisible by N^u")
        scaled.append(q)
    return extpoly.elem_reduce(scaled, n, list(g))


def residual_polynomial(exp: GExpansion, side: Side, n: int) -> ResidualPolynomial:
    """Residual coefficients c_s, c_{s+e}, ..., c_{s+de} of one side.

    A lattice point contributes red_{N,g}(a_i / N^{u_i}) when it lies on the
    side (exact ordinate match) and 0 when it lies strictly above or a_i = 0.
    The two endpoint coefficients are vertices and always nonzero.
    """
    s, us = side.left
    g = list(exp.g)
    coeffs: list[tuple[int, ...]] = []
    for j in range(side.degree + 1):
        i = s + j * side.e
        u = exp.valuations[i] if i < len(exp.valuations) else INFINITY
        line_ord = us - j * side.h
        if u == INFINITY or u != line_ord:
            coeffs.append(())
        else:
            coeffs.append(tuple(_reduced_coefficient(exp.coefficients[i], u, n, g)))
    if not coeffs[0] or not coeffs[-1]:
        raise InconsistencyError("endpoint residual coefficients must be nonzero")
    return ResidualPolynomial(side=side, coeffs=tuple(coeffs))


def analyze_factor(f, g, ell: int, n: int) -> FactorAnalysis:
    """Expansion, polygon and residual data of f with respect to one factor g."""
    exp = g_expansion(f, g, n)
    points = list(enumerate(exp.valuations))
    polygon = principal_polygon(points, ell)

    # vertex condition: the scaled vertex coefficients must be coprime to g
    from .modint import FactorOfPolynomial
    for (s, us) in polygon.vertices:
        w = _reduced_coefficient(exp.coefficients[s], us if us != INFINITY else 0, n, list(g))
        d = modpoly.gcd0(w, list(g), n)
        if not modpoly.is_one(d):
            raise FactorOfPolynomial(d, tuple(g), n)

    residuals = []
    flags = []
    for side in polygon.sides:
        res = residual_polynomial(exp, side, n)
        residuals.append(res)
        flags.append(extpoly.certify_squarefree([list(c) for c in res.coeffs], n, list(g)))
    return FactorAnalysis(g=tuple(g), multiplicity=ell, expansion=exp,
                          polygon=polygon, residuals=tuple(residuals),
                          residual_squarefree=tuple(flags))


def regularity_report(f, decomposition, n: int) -> RegularityReport:
    """Run the three-condition certificate over a squarefree decomposition.

    ``decomposition`` is the output of sfd0 on f mod n: pairs (g, ell).
    Hook exceptions (DivisorOfModulus, FactorOfPolynomial) propagate to the
    caller; a repeated residual factor makes the report not regular with a
    description of the obstruction.
    """
    factors = []
    regular = True
    integral = True
    obstruction = None
    for g, ell in decomposition:
        analysis = analyze_factor(f, list(g), ell, n)
        factors.append(analysis)
        for side in analysis.polygon.sides:
            if side.e != 1:
                integral = False
        for side, ok in zip(analysis.polygon.sides, analysis.residual_squarefree):
            if not ok and regular:
                regular = False
                obstruction = (f"repeated factor in the residual polynomial of the "
                               f"side of slope -{side.h}/{side.e} for factor {list(g)}")
    return RegularityReport(modulus=n, factors=tuple(factors), regular=regular,
                            all_slopes_integral=integral, obstruction=obstruction)


def report_document(report: RegularityReport) -> dict:
    """JSON-ready structured document; big integers as decimal strings."""
    factors = []
    for fa in report.factors:
        factors.append({
            "factor": [str(c) for c in fa.g],
            "multiplicity": fa.multiplicity,
            "vertices": [[str(x), str(y)] for x, y in fa.polygon.vertices],
            "sides": [{"h": str(s.h), "e": str(s.e), "length": str(s.length)}
                      for s in fa.polygon.sides],
            "ordinates": [str(y) for y in fa.polygon.ordinates],
            "residual_polynomials": [
                [[str(c) for c in coeff] for coeff in r.coeffs] for r in fa.residuals],
            "residuals_squarefree": list(fa.residual_squarefree),
        })
    return {
        "modulus": str(report.modulus),
        "factors": factors,
        "regular": report.regular,
        "all_slopes_integral": report.all_slopes_integral,
        "obstruction": report.obstruction,
    }
