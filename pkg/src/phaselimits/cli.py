"""Command-line front end.

Exit status: 0 on success (or a clean certificate), 1 on usage errors,
2 when a certification run finds a violation. All angles are radians.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from collections.abc import Sequence

from . import bounds, certify
from .certify import LambdaScheme, ScanRecord, SearchSpec
from .errors import PhaseLimitsError
from .phase import PhaseProfile, is_distinguishable, is_manifoldwise_distinguishable, manifold_overlaps, overlap_after_shift
from .states import StateRecipe

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2

SCAN_HEADER = ["phi", "overlap_re", "overlap_im", "overlap_abs"]


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    """12 significant digits, '.' decimal point regardless of locale."""
    return f"{x:.12g}"


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False)


def parse_floats(text: str, name: str = "--lambda") -> list[float]:
    out = []
    for tok in text.split(","):
        try:
            value = float(tok)
        except ValueError:
            raise UsageError(f"bad number {tok!r} in {name}") from None
        if not math.isfinite(value):
            raise UsageError(f"non-finite number {tok!r} in {name}")
        out.append(value)
    return out


def parse_recipe(text: str) -> StateRecipe:
    try:
        return StateRecipe.parse(text)
    except PhaseLimitsError as exc:
        raise UsageError(str(exc)) from None


# --------------------------------------------------------------------------
# commands; each returns the text to print


def cmd_bounds(energy: float, format: str = "table") -> str:
    if not math.isfinite(energy) or energy <= 0:
        raise UsageError(f"energy must be positive, got {energy}")
    rows = bounds.limits_table(energy)
    cells: dict[tuple[str, str], dict[str, str]] = {}
    for e in rows:
        cells.setdefault((e.states, e.entity), {})[e.modes] = fmt(e.report.value) if e.report else "NA"
    if format == "json":
        return _dumps(
            {
                "energy": energy,
                "rows": [
                    {
                        "states": e.states,
                        "entity": e.entity,
                        "modes": e.modes,
                        "bound_kind": e.report.bound_kind.value if e.report else None,
                        "value": e.report.value if e.report else "NA",
                        "attainable": e.report.attainable if e.report else False,
                    }
                    for e in rows
                ],
            }
        )
    header = ["states", "entity", "one_mode", "two_or_more_modes"]
    table = [[s, ent, c["one"], c["two_or_more"]] for (s, ent), c in cells.items()]
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(table)
        return buf.getvalue().rstrip("\n")
    if format != "table":
        raise UsageError(f"unknown format {format!r}")
    widths = [max(len(r[i]) for r in [header] + table) for i in range(len(header))]
    lines = [f"# lower limits on distinguishable phase shifts at <N> = {fmt(energy)}"]
    for r in [header] + table:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def _profile_for(recipe: StateRecipe, lambdas: Sequence[float], phi: float = 0.0) -> PhaseProfile:
    if len(lambdas) != recipe.mode_count:
        raise UsageError(f"--lambda has {len(lambdas)} entries but {recipe} has {recipe.mode_count} modes")
    try:
        return PhaseProfile(lambdas, phi)
    except PhaseLimitsError as exc:
        raise UsageError(str(exc)) from None


def scan_csv(records: Sequence[ScanRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCAN_HEADER)
    for r in records:
        writer.writerow([fmt(r.phi), fmt(r.overlap_re), fmt(r.overlap_im), fmt(r.overlap_abs)])
    return buf.getvalue().rstrip("\n")


def cmd_scan(recipe: str, lambdas: str, phi_min: float = 0.0, phi_max: float = math.pi, steps: int = 4096) -> str:
    rec = parse_recipe(recipe)
    lam = parse_floats(lambdas)
    _profile_for(rec, lam)
    try:
        records = certify.overlap_scan(rec.build(), lam, (phi_min, phi_max, steps))
    except PhaseLimitsError as exc:
        raise UsageError(str(exc)) from None
    return scan_csv(records)


def cmd_certify(spec: SearchSpec, objective: str = "phi") -> tuple[str, int]:
    try:
        if objective == "phi":
            report = certify.min_phi_search(spec)
        elif objective == "phitot":
            report = certify.min_phitot_search(spec)
        else:
            raise UsageError(f"unknown objective {objective!r}")
    except PhaseLimitsError as exc:
        raise UsageError(str(exc)) from None
    return _dumps(report.as_dict()), EXIT_VIOLATION if report.violation else EXIT_OK


def cmd_wdrp(recipe: str, lambdas: str, phi: float, tol: float = 1e-10, format: str = "text") -> str:
    rec = parse_recipe(recipe)
    profile = _profile_for(rec, parse_floats(lambdas), phi)
    state = rec.build()
    terms = manifold_overlaps(state, profile)
    overlap = overlap_after_shift(state, profile)
    global_ok = is_distinguishable(state, profile, tol)
    manifold_ok = is_manifoldwise_distinguishable(state, profile, tol)
    if format == "json":
        return _dumps(
            {
                "recipe": str(rec),
                "phi": phi,
                "lambdas": list(profile.mode_coefficients()),
                "overlap_abs": abs(overlap),
                "manifold_overlap_abs": {str(n): abs(t) for n, t in terms.items()},
                "distinguishable": global_ok,
                "manifoldwise_distinguishable": manifold_ok,
                "tol": tol,
            }
        )
    lines = [f"state {rec}  phi {fmt(phi)}  lambdas {','.join(fmt(x) for x in profile.mode_coefficients())}"]
    for n, t in terms.items():
        lines.append(f"manifold {n}: |<psi|1_N U|psi>| = {fmt(abs(t))}")
    lines.append(f"overlap: |<psi|U|psi>| = {fmt(abs(overlap))}")
    lines.append(f"distinguishable: {'PASS' if global_ok else 'FAIL'}")
    lines.append(f"manifoldwise: {'PASS' if manifold_ok else 'FAIL'}")
    return "\n".join(lines)


def cmd_linear_demo(modes: int, photons: int) -> str:
    try:
        rep = certify.linear_profile_demo(modes, photons)
    except PhaseLimitsError as exc:
        raise UsageError(str(exc)) from None
    return _dumps(
        {
            "mode_count": rep.mode_count,
            "photon_number": rep.photon_number,
            "linear_min_phi": rep.linear_min_phi,
            "largest_relative_shift": rep.largest_relative_shift,
            "two_mode_min_relative_shift": rep.two_mode_min_relative_shift,
            "two_mode_equivalent_phi": rep.two_mode_equivalent_phi,
            "ratio": rep.ratio,
        }
    )


# --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="phaselimits", description="Limits on perfectly distinguishable phase shifts.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bounds", help="print the limits table at a mean photon number")
    p.add_argument("--energy", type=float, default=1.0)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")

    def grid_flags(p):
        p.add_argument("--phi-min", type=float, default=0.0)
        p.add_argument("--phi-max", type=float, default=math.pi)
        p.add_argument("--grid-steps", type=int, default=4096)

    p = sub.add_parser("scan", help="overlap versus phi as CSV")
    p.add_argument("recipe", help="kind:N:M:theta, e.g. phi_N:2:2:0, or xi")
    p.add_argument("--lambda", dest="lambdas", required=True, help="comma list, one per mode")
    grid_flags(p)

    p = sub.add_parser("certify", help="brute-force search against the limits; JSON report")
    p.add_argument("--modes", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--exact-n", type=int, help="search the single manifold with this photon number")
    group.add_argument("--photon-cap", type=int, help="search manifolds 0..cap (or --manifolds) at free energy")
    p.add_argument("--manifolds", help="comma list of photon numbers (with --photon-cap)")
    p.add_argument("--energy", type=float, default=1.0, help="report free-energy results at this <N>")
    p.add_argument("--objective", choices=["phi", "phitot"], default="phi")
    p.add_argument("--scheme", choices=[s.value for s in LambdaScheme], default="extremal")
    p.add_argument("--same-sign", action="store_true", help="restrict phase shifts to one sign")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=certify.SEARCH_TOL)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-saturator", action="store_true")
    grid_flags(p)

    p = sub.add_parser("wdrp", help="per-manifold orthogonality report")
    p.add_argument("recipe")
    p.add_argument("--lambda", dest="lambdas", required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("linear-demo", help="linear profile phi_m = m*phi versus two modes")
    p.add_argument("--modes", type=int, required=True)
    p.add_argument("--exact-n", type=int, required=True)
    return parser


def _spec_from_args(args) -> SearchSpec:
    manifolds = None
    if args.manifolds:
        manifolds = tuple(int(x) for x in parse_floats(args.manifolds, "--manifolds"))
    try:
        return SearchSpec(
            mode_count=args.modes,
            photon_cap=args.exact_n if args.exact_n is not None else args.photon_cap,
            exact_n=args.exact_n is not None,
            manifolds=manifolds,
            energy_target=args.energy,
            phi_min=args.phi_min,
            phi_max=args.phi_max,
            grid_steps=args.grid_steps,
            lambda_scheme=args.scheme,
            sample_count=args.samples,
            seed=args.seed,
            tol=args.tol,
            same_sign=args.same_sign,
            inject_saturator=not args.no_saturator,
            workers=args.workers,
        )
    except PhaseLimitsError as exc:
        raise UsageError(str(exc)) from None


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    status = EXIT_OK
    try:
        if args.command == "bounds":
            out = cmd_bounds(args.energy, args.format)
        elif args.command == "scan":
            out = cmd_scan(args.recipe, args.lambdas, args.phi_min, args.phi_max, args.grid_steps)
        elif args.command == "certify":
            out, status = cmd_certify(_spec_from_args(args), args.objective)
        elif args.command == "wdrp":
            out = cmd_wdrp(args.recipe, args.lambdas, args.phi, args.tol, args.format)
        else:
            out = cmd_linear_demo(args.modes, args.exact_n)
    except UsageError as exc:
        print(f"phaselimits: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
