"""Command-line front end: parse, analyze, and render certificates.

Exit codes: 0 on success, 1 on input errors (syntax, non-prime p, non-monic
f), 2 when the requested single-phi criteria are inapplicable to the input,
so batch scripts can tell "theorems don't apply" from "bad input".

The JSON report is stable under re-runs: feeding the embedded input, prime,
phi, and seed back through the tool reproduces the report byte for byte.
Top-level keys: input, prime, mode, phi_reports, verdict, factor_bound,
min_factor_degree (present only when certified), refined_bound,
valuation_count_bound, prime_ideal_count_bound, notes, seed, version.
Each phi_report carries phi, multiplicity, and per-side geometry with the
residual polynomial as the coefficient list [t_0 .. t_d] over F_phi (t_i is
the F_p coefficient list, ascending in x, of the coefficient of y^(d-i)).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .criteria import (
    INAPPLICABLE,
    MODE_SINGLE_PHI,
    AnalysisReport,
    analyze,
    check_single_side_hypothesis,
)
from .expr import ParseError, parse_poly, render_poly
from .polyring import is_power_of_phibar, phi_expand
from .residue_field import fp_is_irreducible
from .valuation import INFINITY, ValuationDomain

ENV_SEED = "PHINEWTON_SEED"


@dataclass
class CliConfig:
    expression: str
    prime: int
    phi: str | None = None
    fmt: str = "text"
    seed: int = 0
    check_only: bool = False
    output: str | None = None


def report_to_dict(report: AnalysisReport) -> dict:
    phi_reports = []
    for pr in report.phi_reports:
        sides = []
        for rec in pr.sides:
            s = rec.side
            sides.append({
                "start": list(s.start),
                "end": list(s.end),
                "length": s.length,
                "slope": {"num": s.slope.numerator, "den": s.slope.denominator},
                "h": s.h,
                "e": s.e,
                "degree": s.degree,
                "residual_poly": [list(t.value.coeffs) for t in rec.residual.ts],
                "residual_irreducible": rec.irreducible,
                "residual_factor_count": rec.factor_count,
            })
        phi_reports.append({
            "phi": render_poly(pr.phi),
            "multiplicity": pr.multiplicity,
            "sides": sides,
        })
    out = {
        "input": report.input,
        "prime": report.prime,
        "mode": report.mode,
        "phi_reports": phi_reports,
        "verdict": report.verdict,
    }
    out["factor_bound"] = report.factor_bound
    if report.min_factor_degree is not None:
        out["min_factor_degree"] = report.min_factor_degree
    if report.refined_bound is not None:
        out["refined_bound"] = report.refined_bound
    out["valuation_count_bound"] = report.valuation_count_bound
    out["prime_ideal_count_bound"] = report.prime_ideal_count_bound
    out["notes"] = list(report.notes)
    out["seed"] = report.seed
    out["version"] = __version__
    return out


def render_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def render_text(report: AnalysisReport) -> str:
    lines = []
    lines.append(f"input:  {report.input}")
    lines.append(f"prime:  {report.prime}    mode: {report.mode}    seed: {report.seed}")
    for pr in report.phi_reports:
        lines.append(f"phi = {render_poly(pr.phi)}   (multiplicity {pr.multiplicity})")
        verts = " -> ".join(f"({i}, {u})" for i, u in pr.polygon.vertices)
        lines.append(f"  polygon vertices: {verts}")
        if pr.exact_power_exponent:
            lines.append(f"  phi divides f exactly {pr.exact_power_exponent} time(s)")
        for k, rec in enumerate(pr.sides, 1):
            s = rec.side
            lines.append(
                f"  side {k}: ({s.start[0]},{s.start[1]})->({s.end[0]},{s.end[1]})"
                f"  length {s.length}  slope {s.slope}  h={s.h} e={s.e} degree {s.degree}"
            )
            lines.append(
                f"    residual: {rec.residual}   irreducible over F_phi: "
                f"{'yes' if rec.irreducible else 'no'}   factors: {rec.factor_count}"
            )
    lines.append(f"verdict: {report.verdict}")
    lines.append(f"factor bound: {report.factor_bound}")
    if report.min_factor_degree is not None:
        lines.append(f"minimum factor degree: {report.min_factor_degree}")
    if report.refined_bound is not None:
        lines.append(f"refined residual count: {report.refined_bound}")
    lines.append(f"valuation count bound: {report.valuation_count_bound}")
    lines.append(f"prime ideal count bound: {report.prime_ideal_count_bound}")
    if report.notes:
        lines.append("notes:")
        lines.extend(f"  - {note}" for note in report.notes)
    return "\n".join(lines) + "\n"


_SX = 48   # pixels per abscissa unit
_SY = 32   # pixels per valuation unit
_MARGIN = 56


def _svg_phi_block(pr, y_offset: int) -> tuple[list[str], int, int]:
    finite = [(i, u) for i, u in pr.polygon.all_points if u is not INFINITY]
    max_i = max(i for i, _ in finite)
    max_u = max(u for _, u in finite)
    width = _MARGIN * 2 + _SX * max(max_i, 1)
    height = _MARGIN * 2 + _SY * max(max_u, 1)

    def px(i):
        return _MARGIN + _SX * i

    def py(u):
        # SVG y grows downward; valuation axis points up
        return y_offset + _MARGIN + _SY * (max_u - u)

    parts = [f'<g font-family="monospace" font-size="12">']
    parts.append(
        f'<text x="{_MARGIN}" y="{y_offset + 24}">phi = {render_poly(pr.phi)} '
        f'(multiplicity {pr.multiplicity})</text>'
    )
    # axes
    parts.append(
        f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(max_i)}" y2="{py(0)}" '
        f'stroke="#bbb"/>'
    )
    parts.append(
        f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(0)}" y2="{py(max_u)}" '
        f'stroke="#bbb"/>'
    )
    # hull
    if len(pr.polygon.vertices) >= 2:
        pointstr = " ".join(f"{px(i)},{py(u)}" for i, u in pr.polygon.vertices)
        parts.append(
            f'<polyline points="{pointstr}" fill="none" stroke="#000" '
            f'stroke-width="2"/>'
        )
    # points: solid when on a side's line inside its span, hollow when above
    for i, u in finite:
        on_side = any(
            s.start[0] <= i <= s.end[0] and s.height_at(i) == u
            for s in pr.polygon.sides
        ) or (i, u) in pr.polygon.vertices
        fill = "#000" if on_side else "#fff"
        parts.append(
            f'<circle cx="{px(i)}" cy="{py(u)}" r="4" fill="{fill}" '
            f'stroke="#000"/>'
        )
    # slope labels and residual annotations
    for k, rec in enumerate(pr.sides):
        s = rec.side
        mx = (px(s.start[0]) + px(s.end[0])) / 2
        my = (py(s.start[1]) + py(s.end[1])) / 2 - 8
        parts.append(f'<text x="{mx:.1f}" y="{my:.1f}">slope {s.slope}</text>')
        parts.append(
            f'<text x="{_MARGIN}" y="{y_offset + height - 28 + 14 * k}">'
            f'side {k + 1}: f_S = {rec.residual} '
            f'({"irreducible" if rec.irreducible else f"{rec.factor_count} factors"})'
            f'</text>'
        )
    parts.append("</g>")
    block_height = height + 14 * max(len(pr.sides), 1)
    return parts, width, block_height


def render_svg(report: AnalysisReport) -> str:
    blocks = []
    width = 480
    y = 0
    for pr in report.phi_reports:
        if not pr.polygon.all_points:
            continue
        parts, w, h = _svg_phi_block(pr, y)
        blocks.extend(parts)
        width = max(width, w)
        y += h
    header_lines = [
        f'<text x="8" y="16" font-family="monospace" font-size="12">'
        f'{report.verdict}: factor bound {report.factor_bound}</text>'
    ]
    total_height = max(y, 48) + 24
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{total_height}" viewBox="0 0 {width} {total_height}">\n'
        + "\n".join(header_lines + blocks)
        + "\n</svg>\n"
    )


RENDERERS = {"text": render_text, "json": render_json, "svg": render_svg}


def _check_only(f, phi_expr, domain) -> tuple[str, int]:
    if phi_expr is None:
        return f"ok: monic degree-{f.degree} polynomial, p = {domain.prime}", 0
    phi = parse_poly(phi_expr)
    if not phi.is_monic or phi.degree < 1:
        return "inapplicable: phi must be monic of degree >= 1", 2
    phibar = phi.reduce_mod(domain.prime)
    if not fp_is_irreducible(phibar):
        return f"inapplicable: phi mod {domain.prime} is reducible", 2
    if not is_power_of_phibar(f, phi, domain):
        return f"inapplicable: f mod {domain.prime} is not a power of phi", 2
    hyp = check_single_side_hypothesis(phi_expand(f, phi, domain))
    if hyp.holds:
        return f"ok: single-side hypothesis holds (lambda = {hyp.lam})", 0
    return "inapplicable: single-side hypothesis fails", 2


def run(config: CliConfig) -> int:
    """Execute one analysis; returns the process exit code."""
    try:
        domain = ValuationDomain.p_adic(config.prime)
        f = parse_poly(config.expression)
        if f.degree < 1 or not f.is_monic:
            raise ValueError("input polynomial must be monic of degree >= 1")
        if config.check_only:
            message, code = _check_only(f, config.phi, domain)
            print(message)
            return code
        phi = parse_poly(config.phi) if config.phi is not None else None
        report = analyze(f, domain, phi=phi, seed=config.seed,
                         input_str=config.expression)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    rendered = RENDERERS[config.fmt](report)
    if config.output:
        Path(config.output).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    if report.verdict == INAPPLICABLE and report.mode == MODE_SINGLE_PHI:
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phinewton",
        description="phi-adic Newton polygons, residual polynomials, and "
                    "irreducibility bounds for monic integer polynomials.",
    )
    parser.add_argument("expression", nargs="?", help="polynomial in x")
    parser.add_argument("--input", help="file containing one expression (UTF-8)")
    parser.add_argument("-p", "--prime", type=int, required=True,
                        help="prime for the p-adic valuation")
    parser.add_argument("--phi", help="monic phi for single-phi mode")
    parser.add_argument("--format", dest="fmt", choices=("text", "json", "svg"),
                        default="text")
    parser.add_argument("--seed", type=int, default=None,
                        help=f"PRNG seed (default: ${ENV_SEED} or 0)")
    parser.add_argument("--check-only", action="store_true",
                        help="validate input and hypothesis, print one line")
    parser.add_argument("--output", help="write the report to this path")
    return parser


def config_from_args(args) -> CliConfig:
    if (args.expression is None) == (args.input is None):
        raise ValueError("supply exactly one input: a positional expression "
                         "or --input FILE")
    if args.input is not None:
        expression = Path(args.input).read_text(encoding="utf-8").strip()
    else:
        expression = args.expression
    if args.seed is not None:
        seed = args.seed
    else:
        seed = int(os.environ.get(ENV_SEED, "0"))
    if args.prime < 2:
        raise ValueError("p must be at least 2")
    return CliConfig(
        expression=expression, prime=args.prime, phi=args.phi, fmt=args.fmt,
        seed=seed, check_only=args.check_only, output=args.output,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
