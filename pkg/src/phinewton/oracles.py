"""Brute-force oracles and structured random generators used by the tests.

Every oracle here reimplements its target with a different algorithm so the
two can only agree by being right: the hull oracle walks supporting lines
instead of running a monotone chain, the factorization oracle trial-divides
against an exhaustive enumeration instead of running Cantor-Zassenhaus, and
the polygon validator checks the defining inequalities directly.

The generators build polynomials whose factor structure is known by
construction, which turns the product rule and the factor-count bounds into
checkable statements.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .polygon import NewtonPolygon, Side, build_polygon
from .polyring import IntPoly, phi_expand
from .residual import residual_polynomial
from .residue_field import ExtPoly, FactorizationFp, FpPoly, fp_is_irreducible
from .valuation import INFINITY, ValuationDomain


def hull_oracle(points) -> NewtonPolygon:
    """Lower envelope by supporting-line search (gift wrapping).

    From each vertex, scan every remaining point for the minimum outgoing
    slope, breaking ties toward the farthest point so collinear runs merge.
    Same contract as build_polygon, different algorithm.
    """
    pts = [(int(i), u if u is INFINITY else int(u)) for i, u in points]
    pts.sort(key=lambda q: q[0])
    finite = [q for q in pts if q[1] is not INFINITY]
    if len(finite) < 2:
        raise ValueError("degenerate input: need at least two finite points")
    vertices = [finite[0]]
    last = finite[-1]
    while vertices[-1] != last:
        cur = vertices[-1]
        best = None
        for q in finite:
            if q[0] <= cur[0]:
                continue
            if best is None:
                best = q
                continue
            # q below the cur->best ray, or collinear but farther?
            lhs = (q[1] - cur[1]) * (best[0] - cur[0])
            rhs = (best[1] - cur[1]) * (q[0] - cur[0])
            if lhs < rhs or (lhs == rhs and q[0] > best[0]):
                best = q
        vertices.append(best)
    sides = tuple(
        Side.from_endpoints(vertices[k], vertices[k + 1])
        for k in range(len(vertices) - 1)
    )
    return NewtonPolygon(tuple(vertices), sides, tuple(pts))


def validate_polygon(np: NewtonPolygon, points) -> bool:
    """Third check: verify the defining properties of a lower envelope.

    Raises ValueError when the polygon is not the lower convex envelope of
    the finite input points with strictly increasing slopes.
    """
    finite = sorted((int(i), int(u)) for i, u in points if u is not INFINITY)
    finite_set = set(finite)
    for v in np.vertices:
        if v not in finite_set:
            raise ValueError(f"vertex {v} is not an input point")
    if np.vertices[0] != finite[0]:
        raise ValueError("polygon does not start at the lowest finite index")
    if np.vertices[-1][0] != finite[-1][0]:
        raise ValueError("polygon does not end at the highest finite index")
    slopes = np.slopes
    for a, b in zip(slopes, slopes[1:]):
        if not a < b:
            raise ValueError("side slopes are not strictly increasing")
    for s in np.sides:
        for i, u in finite:
            if s.start[0] <= i <= s.end[0] and u < s.height_at(i):
                raise ValueError(f"point ({i}, {u}) lies below side {s}")
    for prev, cur in zip(np.sides, np.sides[1:]):
        if prev.end != cur.start:
            raise ValueError("sides are not contiguous")
    return True


def enumerate_monic_fp(p: int, degree: int):
    """All monic polynomials over F_p of the given degree, lexicographically."""
    for tail in itertools.product(range(p), repeat=degree):
        yield FpPoly(p, tail + (1,))


def exhaustive_fp_factor(f: FpPoly) -> FactorizationFp:
    """Factorization by trial division over all monic candidates.

    The smallest-degree nontrivial divisor is necessarily irreducible, so
    dividing it out repeatedly yields the complete factorization.  Refuses
    inputs beyond the enumeration bound (p <= 7, degree <= 8).
    """
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if f.p > 7 or f.degree > 8:
        raise ValueError("enumeration bounds exceeded (p <= 7, degree <= 8)")
    unit = f.lead
    g = f.monic()
    counts: dict[FpPoly, int] = {}
    while g.degree > 0:
        divisor = None
        for d in range(1, g.degree // 2 + 1):
            for cand in enumerate_monic_fp(g.p, d):
                if (g % cand).is_zero:
                    divisor = cand
                    break
            if divisor is not None:
                break
        if divisor is None:
            divisor = g
        counts[divisor] = counts.get(divisor, 0) + 1
        g = g // divisor
    factors = tuple(sorted(counts.items(), key=lambda fm: (fm[0].degree, fm[0].coeffs)))
    return FactorizationFp(factors, unit)


def exhaustive_ext_factor_count(g: ExtPoly) -> int:
    """Factor count (with multiplicity) by trial division over F_q, q <= 9."""
    field = g.field
    if field.q > 9 or g.degree > 6:
        raise ValueError("enumeration bounds exceeded (q <= 9, degree <= 6)")
    if g.degree < 1:
        raise ValueError("factor counting requires degree >= 1")
    elems = [
        field.elem(list(tup))
        for tup in itertools.product(range(field.p), repeat=field.m)
    ]
    g = g.monic()
    count = 0
    while g.degree > 0:
        divisor = None
        for d in range(1, g.degree // 2 + 1):
            for tail in itertools.product(elems, repeat=d):
                cand = ExtPoly(field, list(tail) + [field.one])
                if (g % cand).is_zero:
                    divisor = cand
                    break
            if divisor is not None:
                break
        if divisor is None:
            divisor = g
        count += 1
        g = g // divisor
    return count


def _random_unit_poly(rng: random.Random, p: int, max_degree: int) -> IntPoly:
    """Random nonzero polynomial of degree < max_degree with unit content."""
    while True:
        coeffs = [rng.randrange(p) for _ in range(max_degree)]
        if any(coeffs):
            return IntPoly(coeffs)


def gen_eisenstein_family(
    domain: ValuationDomain,
    phi: IntPoly,
    count: int,
    seed: int,
    gcd_targets=(1, 2, 3),
) -> list[IntPoly]:
    """Random monic polynomials satisfying the single-side hypothesis.

    Each output f = phi^n + sum a_i phi^i has nu(a_0) = H exactly and every
    (i, u_i) on or above the line to (n, 0), with gcd(H, n) cycling through
    the requested targets.
    """
    if not fp_is_irreducible(phi.reduce_mod(domain.prime)):
        raise ValueError("phi must reduce to an irreducible polynomial")
    rng = random.Random(seed)
    p = domain.prime
    m = phi.degree
    out = []
    for j in range(count):
        target = gcd_targets[j % len(gcd_targets)]
        while True:
            e = rng.randint(1, 4)
            hq = rng.randint(1, 5)
            if math.gcd(e, hq) == 1:
                break
        n = target * e
        height = target * hq
        f = phi**n + _random_unit_poly(rng, p, m) * p**height
        for i in range(1, n):
            if rng.random() < 0.4:
                continue
            floor = -((-height * (n - i)) // n)  # ceil(H*(n-i)/n)
            u = floor + rng.randint(0, 2)
            f = f + _random_unit_poly(rng, p, m) * p**u * phi**i
        out.append(f)
    return out


def gen_power_family(
    domain: ValuationDomain,
    phi: IntPoly,
    count: int,
    seed: int,
    max_n: int = 8,
    max_height: int = 10,
    zero_a0_prob: float = 0.0,
) -> list[IntPoly]:
    """Random monic f with f mod p an exact power of phi mod p.

    Valuations of the lower expansion coefficients are free in
    [1, max_height], so the resulting polygons have arbitrary shapes.
    """
    rng = random.Random(seed)
    p = domain.prime
    m = phi.degree
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        f = phi**n
        start = 1 if rng.random() < zero_a0_prob else 0
        for i in range(start, n):
            if i != start and rng.random() < 0.35:
                continue
            u = rng.randint(1, max_height)
            f = f + _random_unit_poly(rng, p, m) * p**u * phi**i
        out.append(f)
    return out


@dataclass(frozen=True)
class FactorWitness:
    """A product with known factor structure: the true count is at least k.

    Per-factor polygon and residual data (relative to each factor's own phi)
    ride along so product-rule checks can replay the construction.
    """

    factors: tuple
    phis: tuple
    product: IntPoly
    polygons: tuple
    residuals: tuple

    @property
    def k(self) -> int:
        return len(self.factors)


def _phi_pool(domain: ValuationDomain) -> list[IntPoly]:
    p = domain.prime
    pool = [IntPoly((0, 1)), IntPoly((1, 1))]
    for tail in itertools.product(range(p), repeat=2):
        cand = FpPoly(p, tail + (1,))
        if fp_is_irreducible(cand):
            pool.append(IntPoly(cand.coeffs))
            if len(pool) >= 5:
                break
    return pool


def gen_factor_witness(domain: ValuationDomain, k: int, seed: int) -> FactorWitness:
    """Product of k analyzable monic polynomials with per-factor polygon data."""
    rng = random.Random(seed)
    pool = _phi_pool(domain)
    factors = []
    phis = []
    polygons = []
    residuals = []
    for j in range(k):
        phi = pool[rng.randrange(len(pool))]
        f = gen_eisenstein_family(
            domain, phi, 1, rng.randrange(2**30), gcd_targets=(1, 2, 3)
        )[0]
        exp = phi_expand(f, phi, domain)
        polygon = build_polygon(exp.points())
        side_data = tuple(
            residual_polynomial(exp, side, phi.reduce_mod(domain.prime))
            for side in polygon.principal_part().sides
        )
        factors.append(f)
        phis.append(phi)
        polygons.append(polygon)
        residuals.append(side_data)
    product = IntPoly.one()
    for f in factors:
        product = product * f
    return FactorWitness(
        tuple(factors), tuple(phis), product, tuple(polygons), tuple(residuals)
    )
