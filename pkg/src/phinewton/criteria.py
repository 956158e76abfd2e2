"""Applies the Newton-polygon irreducibility criteria and factor-count bounds.

Two modes are supported for a monic f in Z[x] and a prime p:

* single-phi: the caller fixes a monic phi whose reduction is irreducible
  and with f congruent to a power of it mod p.  When the polygon is a single
  side from (0, nu(a_0)) to (n, 0), f has at most gcd(nu(a_0), n) irreducible
  factors over the henselization (hence over Q), each of degree at least
  e * deg(phi); if moreover the residual polynomial is irreducible over
  F_phi, f itself is irreducible.
* full: f mod p is factored completely, a polygon is built for every
  irreducible factor phibar_i, and the side degrees of all principal parts
  are summed into a factor-count bound; residual factor counts give an
  informational refinement.

Verdicts are one-directional: the tool certifies IRREDUCIBLE or a BOUNDED
factor count, never reducibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .expr import render_poly
from .polygon import NewtonPolygon, Side, build_polygon, single_vertex_polygon
from .polyring import IntPoly, PhiExpansion, is_power_of_phibar, phi_expand
from .residual import ResidualPolynomial, residual_polynomial
from .residue_field import (
    FpPoly,
    ext_count_irreducible_factors,
    ext_is_irreducible,
    fp_factorize,
    fp_is_irreducible,
)
from .valuation import INFINITY, ValuationDomain

IRREDUCIBLE = "IRREDUCIBLE"
BOUNDED = "BOUNDED"
INAPPLICABLE = "INAPPLICABLE"

MODE_SINGLE_PHI = "single-phi"
MODE_FULL = "full"

_NUM_WORDS = {
    1: "one", 2: "two", 3: "three", 4: "four", 5: "five",
    6: "six", 7: "seven", 8: "eight", 9: "nine", 10: "ten",
}


def _count_word(n: int) -> str:
    return _NUM_WORDS.get(n, str(n))


@dataclass(frozen=True)
class SingleSideHypothesis:
    """Result of the single-side check n*u_i >= (n-i)*u_0 > 0.

    `violations` lists (index, required height, actual valuation) for every
    finite valuation falling strictly below the line; infinite valuations can
    never violate the inequality.  `applicable` is False when f mod p is not
    a power of phi mod p, in which case nothing else is meaningful.
    """

    applicable: bool
    holds: bool
    lam: Fraction | None
    violations: tuple
    a0_is_zero: bool = False


def check_single_side_hypothesis(exp: PhiExpansion) -> SingleSideHypothesis:
    """Check that every point (i, u_i) lies on or above the single candidate
    side from (0, u_0) to (n, 0), with u_0 > 0."""
    f, phi = exp.f, exp.phi
    if not f.is_monic or not is_power_of_phibar(f, phi, exp.domain):
        return SingleSideHypothesis(False, False, None, ())
    n = exp.length
    u0 = exp.valuations[0]
    if u0 is INFINITY:
        return SingleSideHypothesis(True, False, None, (), a0_is_zero=True)
    lam = Fraction(u0, n)
    violations = []
    if u0 <= 0:
        violations.append((0, Fraction(1), u0))
    for i in range(1, n):
        u = exp.valuations[i]
        if u is INFINITY:
            continue
        if n * u < (n - i) * u0:
            violations.append((i, Fraction((n - i) * u0, n), u))
    return SingleSideHypothesis(True, not violations, lam, tuple(violations))


@dataclass(frozen=True)
class SingleSideBound:
    """The gcd factor bound for an expansion satisfying the hypothesis."""

    applicable: bool
    factor_bound: int | None = None
    min_factor_degree: int | None = None
    gcd_d: int | None = None
    ramification_e: int | None = None
    lam: Fraction | None = None


def bound_single_phi(exp: PhiExpansion) -> SingleSideBound:
    """At most gcd(nu(a_0), n) factors, each of degree at least e*deg(phi)."""
    hyp = check_single_side_hypothesis(exp)
    if not hyp.applicable or not hyp.holds:
        return SingleSideBound(False)
    n = exp.length
    u0 = exp.valuations[0]
    d = math.gcd(u0, n)
    e = n // d
    return SingleSideBound(True, d, e * exp.phi.degree, d, e, hyp.lam)


def irreducibility_test(exp: PhiExpansion, seed: int = 0) -> str:
    """Single-side verdict: IRREDUCIBLE when the gcd bound is 1 or the
    residual polynomial is irreducible over F_phi; BOUNDED otherwise;
    INAPPLICABLE when the hypothesis fails."""
    bound = bound_single_phi(exp)
    if not bound.applicable:
        return INAPPLICABLE
    if bound.gcd_d == 1:
        return IRREDUCIBLE
    np = build_polygon(exp.points())
    phibar = exp.phi.reduce_mod(exp.domain.prime)
    rp = residual_polynomial(exp, np.sides[0], phibar)
    if ext_is_irreducible(rp.as_ext_poly()):
        return IRREDUCIBLE
    return BOUNDED


@dataclass(frozen=True)
class SideAnalysis:
    """One principal side with its residual data."""

    side: Side
    residual: ResidualPolynomial
    irreducible: bool
    factor_count: int


@dataclass(frozen=True)
class PhiReport:
    """Per-phi polygon data: N_phi(f), its principal sides, and residuals.

    `exact_power_exponent` is the exact multiplicity w with phi^w | f in
    Z[x] (leading run of INFINITY valuations); it contributes w certified
    irreducible factors on top of the side-degree sum.
    """

    phi: IntPoly
    multiplicity: int
    polygon: NewtonPolygon
    sides: tuple
    side_degree_sum: int
    exact_power_exponent: int = 0


@dataclass
class AnalysisReport:
    """Everything the criteria certify about one input polynomial."""

    input: str
    f: IntPoly
    prime: int
    seed: int
    mode: str
    verdict: str
    factor_bound: int
    min_factor_degree: int | None
    refined_bound: int | None
    valuation_count_bound: int
    prime_ideal_count_bound: int
    notes: list = field(default_factory=list)
    phi_reports: list = field(default_factory=list)


def _leading_infinity_run(exp: PhiExpansion) -> int:
    w = 0
    while w < len(exp.valuations) and exp.valuations[w] is INFINITY:
        w += 1
    return w


def _polygon_of(exp: PhiExpansion) -> NewtonPolygon:
    finite = [(i, u) for i, u in exp.points() if u is not INFINITY]
    if len(finite) < 2:
        i, u = finite[0]
        return single_vertex_polygon(i, u, exp.points())
    return build_polygon(exp.points())


def _zero_interior_notes(exp: PhiExpansion, rp: ResidualPolynomial) -> list[str]:
    """Explain vanishing interior residual coefficients of a side."""
    side = rp.side
    notes = []
    for j in range(1, rp.degree):
        if not rp.ts[j].is_zero:
            continue
        abscissa = rp.anchor + j * side.e
        u = exp.valuations[abscissa]
        if u is INFINITY:
            why = f"expansion coefficient a_{abscissa} vanishes"
        else:
            why = f"({abscissa}, {u}) lies strictly above the side"
        notes.append(
            f"side ({side.start[0]},{side.start[1]})->({side.end[0]},{side.end[1]}): "
            f"residual coefficient at y^{rp.degree - j} is zero ({why})"
        )
    return notes


def _analyze_sides(exp: PhiExpansion, polygon: NewtonPolygon, phibar: FpPoly, seed: int):
    records = []
    notes = []
    for side in polygon.principal_part().sides:
        rp = residual_polynomial(exp, side, phibar)
        g = rp.as_ext_poly()
        records.append(
            SideAnalysis(side, rp, ext_is_irreducible(g),
                         ext_count_irreducible_factors(g, seed))
        )
        notes.extend(_zero_interior_notes(exp, rp))
    return records, notes


def _corollary_note(bound: int, p: int) -> str:
    return (
        f"if f is irreducible over the base field, at most {bound} valuation(s) "
        f"extend nu to the root field, equivalently at most {bound} prime "
        f"ideal(s) lie above {p}"
    )


def _validate_input(f: IntPoly):
    if f.degree < 1:
        raise ValueError("f must have degree >= 1")
    if not f.is_monic:
        raise ValueError("f must be monic")


def analyze(
    f: IntPoly,
    domain: ValuationDomain,
    phi: IntPoly | None = None,
    seed: int = 0,
    input_str: str | None = None,
) -> AnalysisReport:
    """Run the single-phi criteria when phi is given, the full bound otherwise."""
    _validate_input(f)
    if input_str is None:
        input_str = render_poly(f)
    if phi is None:
        return bound_full(f, domain, seed, input_str)
    return _analyze_single_phi(f, phi, domain, seed, input_str)


def _inapplicable_report(input_str, f, domain, seed, reasons, phi_reports=()):
    bound = f.degree
    notes = list(reasons)
    notes.append(
        f"factor bound falls back to the trivial degree bound {bound}"
    )
    notes.append(_corollary_note(bound, domain.prime))
    return AnalysisReport(
        input=input_str, f=f, prime=domain.prime, seed=seed,
        mode=MODE_SINGLE_PHI, verdict=INAPPLICABLE, factor_bound=bound,
        min_factor_degree=None, refined_bound=None,
        valuation_count_bound=bound, prime_ideal_count_bound=bound,
        notes=notes, phi_reports=list(phi_reports),
    )


def _analyze_single_phi(f, phi, domain, seed, input_str) -> AnalysisReport:
    if not phi.is_monic or phi.degree < 1:
        raise ValueError("phi must be monic of degree >= 1")
    p = domain.prime
    phibar = phi.reduce_mod(p)
    if not fp_is_irreducible(phibar):
        return _inapplicable_report(
            input_str, f, domain, seed,
            [f"phi mod {p} = {phibar} is reducible over F_{p}"],
        )
    if not is_power_of_phibar(f, phi, domain):
        return _inapplicable_report(
            input_str, f, domain, seed,
            [f"f mod {p} is not a power of {phibar}"],
        )

    exp = phi_expand(f, phi, domain)
    n = exp.length
    m = phi.degree
    w = _leading_infinity_run(exp)

    if w == n:
        # f = phi^n exactly: phi is irreducible over the henselization, so
        # the factor count is exactly n.
        verdict = IRREDUCIBLE if n == 1 else BOUNDED
        polygon = single_vertex_polygon(n, 0, exp.points())
        notes = [
            f"f equals phi^{n} exactly: exactly {_count_word(n)} irreducible "
            f"factor(s) over the henselization",
            _corollary_note(n, p),
        ]
        return AnalysisReport(
            input=input_str, f=f, prime=p, seed=seed, mode=MODE_SINGLE_PHI,
            verdict=verdict, factor_bound=n, min_factor_degree=m,
            refined_bound=n, valuation_count_bound=n,
            prime_ideal_count_bound=n,
            notes=notes, phi_reports=[PhiReport(phi, n, polygon, (), 0, w)],
        )

    polygon = _polygon_of(exp)
    records, side_notes = _analyze_sides(exp, polygon, phibar, seed)
    dsum = sum(r.side.degree for r in records)
    hyp = check_single_side_hypothesis(exp)
    phi_report = PhiReport(phi, n, polygon, tuple(records), dsum, w)

    if not hyp.holds:
        reasons = []
        if hyp.a0_is_zero:
            reasons.append(f"a_0 = 0: f is divisible by phi (phi^{w} divides f)")
        for i, required, actual in hyp.violations:
            reasons.append(
                f"single-side hypothesis fails at index {i}: "
                f"need nu(a_{i}) >= {required}, got {actual}"
            )
        bound = w + dsum
        refined = w + sum(r.factor_count for r in records)
        degrees = [r.side.e * m for r in records]
        if w > 0:
            degrees.append(m)
        notes = reasons + side_notes
        notes.append(
            f"polygon has {len(records)} principal side(s); per-side degree "
            f"bound still applies: at most {bound} irreducible factor(s)"
        )
        notes.append(_corollary_note(bound, p))
        return AnalysisReport(
            input=input_str, f=f, prime=p, seed=seed, mode=MODE_SINGLE_PHI,
            verdict=INAPPLICABLE, factor_bound=bound,
            min_factor_degree=min(degrees) if degrees else None,
            refined_bound=refined, valuation_count_bound=bound,
            prime_ideal_count_bound=bound,
            notes=notes, phi_reports=[phi_report],
        )

    # Single side from (0, u_0) to (n, 0).
    u0 = exp.valuations[0]
    side = records[0].side
    d = math.gcd(u0, n)
    assert len(records) == 1 and side.degree == d == n // side.e, (
        "single-side gcd identity violated"
    )
    e = n // d
    rp = records[0]
    notes = [f"single side from (0, {u0}) to ({n}, 0): slope -{hyp.lam}, "
             f"gcd({u0}, {n}) = {d}"]
    notes.extend(side_notes)
    if d == 1:
        verdict = IRREDUCIBLE
        notes.append(
            f"gcd({u0}, {n}) = 1: f is irreducible (Eisenstein/Dumas shape)"
        )
    elif rp.irreducible:
        verdict = IRREDUCIBLE
        notes.append(
            f"residual polynomial {rp.residual} is irreducible over F_phi: "
            f"f is irreducible over the henselization"
        )
    else:
        verdict = BOUNDED
        notes.append(
            f"residual polynomial {rp.residual} factors over F_phi "
            f"({rp.factor_count} factor(s) with multiplicity): "
            f"keeping the gcd bound {d}"
        )
    factor_bound = 1 if verdict == IRREDUCIBLE else d
    refined = 1 if verdict == IRREDUCIBLE else rp.factor_count
    notes.append(_corollary_note(factor_bound, p))
    return AnalysisReport(
        input=input_str, f=f, prime=p, seed=seed, mode=MODE_SINGLE_PHI,
        verdict=verdict, factor_bound=factor_bound,
        min_factor_degree=e * m, refined_bound=refined,
        valuation_count_bound=factor_bound, prime_ideal_count_bound=factor_bound,
        notes=notes, phi_reports=[phi_report],
    )


def bound_full(
    f: IntPoly,
    domain: ValuationDomain,
    seed: int = 0,
    input_str: str | None = None,
) -> AnalysisReport:
    """Sum of principal side degrees over every irreducible factor of f mod p.

    Factors f mod p completely, builds each phi_i-polygon from the canonical
    lift of phibar_i, and adds the side degrees of the principal parts (plus
    the exact power of phi_i dividing f, when positive).  The refined count
    replaces each side degree by the number of irreducible factors of its
    residual polynomial; equality would require regularity, so it is
    reported as information only.
    """
    _validate_input(f)
    if input_str is None:
        input_str = render_poly(f)
    p = domain.prime
    factorization = fp_factorize(f.reduce_mod(p), seed)

    phi_reports = []
    notes = []
    total_bound = 0
    refined = 0
    degree_floors = []
    for phibar, n_i in factorization.factors:
        phi = IntPoly(phibar.coeffs)
        m = phi.degree
        exp = phi_expand(f, phi, domain)
        w = _leading_infinity_run(exp)
        if w == exp.length:
            polygon = single_vertex_polygon(exp.length, 0, exp.points())
            records, side_notes = [], []
        else:
            polygon = _polygon_of(exp)
            records, side_notes = _analyze_sides(exp, polygon, phibar, seed)
        dsum = sum(r.side.degree for r in records)
        phi_reports.append(PhiReport(phi, n_i, polygon, tuple(records), dsum, w))
        total_bound += w + dsum
        refined += w + sum(r.factor_count for r in records)
        if w > 0:
            degree_floors.append(m)
            notes.append(f"phi = {render_poly(phi)} divides f exactly {w} time(s)")
        degree_floors.extend(r.side.e * m for r in records)
        notes.extend(side_notes)
        notes.append(
            f"phi = {render_poly(phi)}: multiplicity {n_i}, "
            f"{len(records)} principal side(s), degree sum {dsum}"
        )

    hensel_lower = len(factorization.factors)
    verdict = BOUNDED
    factor_bound = total_bound
    refined_bound = refined
    if total_bound == 1:
        verdict = IRREDUCIBLE
        notes.append("factor bound is 1: f is irreducible")
    elif len(factorization.factors) == 1:
        # Single phibar: when the polygon is one side covering the whole
        # principal part, an irreducible residual certifies irreducibility.
        pr = phi_reports[0]
        if pr.exact_power_exponent == 0 and len(pr.sides) == 1:
            side = pr.sides[0].side
            full_span = side.start[0] == 0 and side.end == (pr.multiplicity, 0)
            if full_span and pr.sides[0].irreducible:
                verdict = IRREDUCIBLE
                factor_bound = 1
                refined_bound = 1
                notes.append(
                    f"residual polynomial {pr.sides[0].residual} is irreducible "
                    f"over F_phi: f is irreducible over the henselization"
                )
    if verdict == BOUNDED and total_bound == hensel_lower:
        notes.append(
            f"coprime-factor lower bound matches the polygon bound: exactly "
            f"{_count_word(total_bound)} irreducible factor(s) over the "
            f"henselization"
        )
    notes.append(_corollary_note(factor_bound, p))
    return AnalysisReport(
        input=input_str, f=f, prime=p, seed=seed, mode=MODE_FULL,
        verdict=verdict, factor_bound=factor_bound,
        min_factor_degree=min(degree_floors) if degree_floors else None,
        refined_bound=refined_bound, valuation_count_bound=factor_bound,
        prime_ideal_count_bound=factor_bound,
        notes=notes, phi_reports=phi_reports,
    )
