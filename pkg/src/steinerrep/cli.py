"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 Groebner budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from . import invariants as inv
from .delpezzo import PipelineConfig, PipelineError, run_pipeline
from .field import Field
from .fileio import FormatError, format_ideal, read_form, read_ideal, read_matrix
from .groebner import Budget, BudgetExceeded, DEFAULT_MAX_PAIRS, DEFAULT_MAX_TERMS
from .ideal import (
    Ideal,
    hilbert_polynomial,
    irrelevant_ideal,
    minimal_generator_degrees,
    ring_map_kernel,
    saturate,
)
from .lattice import Lattice2, qscan_report, search_report
from .matrices import (
    DETERMINANTAL,
    PFAFFIAN,
    RepresentationCertificate,
    cofactor_determinant,
    determinant,
    pfaffian,
    verify_representation,
)
from .monomial import MonomialOrder
from .poly import PolyRing, format_poly

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def emit_report(result) -> bytes:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return (json.dumps(result, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


# -- shared option handling -------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", default=None, help="q or gf:<p> (for inputs without a ring header; default gf:32003)")
    p.add_argument("--vars", default=None, help="comma-separated variable names for header-less inputs")
    p.add_argument("--order", default=None, help="grevlex, lex or elim:<k>")
    p.add_argument("--seed", type=int, default=1, help="seed for all randomized steps")
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.add_argument("--retries", type=int, default=5, help="maximum random re-draws")
    p.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)
    p.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)
    return p


def _budget(args) -> Budget:
    return Budget(max_pairs=args.max_pairs, max_terms=args.max_terms)


def _field(args) -> Field:
    return Field.parse(args.field) if args.field else Field.prime()


def _fallback_ring(args) -> PolyRing | None:
    if not args.vars:
        return None
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    return PolyRing(_field(args), names, args.order or "grevlex")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_ideal(args, path: str, ring: PolyRing | None = None) -> Ideal:
    return read_ideal(_read(path), ring or _fallback_ring(args))


def _ideal_payload(ideal: Ideal) -> dict:
    r = ideal.ring
    return {
        "ring": {"field": str(r.field), "vars": list(r.var_names), "order": str(r.order)},
        "generators": [format_poly(g) for g in ideal.generators],
    }


# -- subcommands ---------------------------------------------------------------


def cmd_groebner(args):
    ideal = _load_ideal(args, args.ideal)
    order = MonomialOrder.parse(args.order) if args.order else ideal.ring.order
    gb = ideal.groebner(order, _budget(args))
    basis = Ideal(gb.ring, gb.basis)
    payload = _ideal_payload(basis)
    payload["size"] = len(gb)
    payload["leading_monomials"] = [format_poly(gb.ring.monomial(m)) for m in gb.leading_monomials()]
    return EXIT_OK, payload, format_ideal(basis)


def cmd_hilbert(args):
    ideal = _load_ideal(args, args.ideal)
    budget = _budget(args)
    hp = hilbert_polynomial(ideal, budget)
    payload = {
        "hilbert_polynomial": str(hp),
        "coefficients": [str(c) for c in hp.coefficients],
        "series_numerator": hp.numerator,
        "dimension": hp.degree,
        "degree": hp.projective_degree,
        "regularity_index": hp.regularity_index,
        "minimal_generator_degrees": minimal_generator_degrees(ideal, budget),
    }
    text = f"HP(t) = {hp}\ndimension {hp.degree}, degree {hp.projective_degree}\n"
    return EXIT_OK, payload, text


def cmd_saturate(args):
    ideal = _load_ideal(args, args.ideal)
    by = irrelevant_ideal(ideal.ring) if args.by is None else _load_ideal(args, args.by, ideal.ring)
    out = saturate(ideal, by, _budget(args))
    payload = _ideal_payload(out)
    payload["is_unit"] = out.is_unit()
    return EXIT_OK, payload, format_ideal(out)


def cmd_kernel(args):
    ideal = _load_ideal(args, args.ideal)
    images = read_ideal(_read(args.images), ideal.ring).generators
    target = None
    if args.target_vars:
        names = [v.strip() for v in args.target_vars.split(",") if v.strip()]
        target = PolyRing(ideal.ring.field, names)
    out = ring_map_kernel(ideal, images, target, _budget(args))
    return EXIT_OK, _ideal_payload(out), format_ideal(out)


def cmd_det(args):
    m = read_matrix(_read(args.matrix), _fallback_ring(args))
    value = cofactor_determinant(m) if args.method == "cofactor" else determinant(m)
    s = format_poly(value)
    return EXIT_OK, {"determinant": s, "size": m.nrows, "method": args.method}, s + "\n"


def cmd_pfaffian(args):
    m = read_matrix(_read(args.matrix), _fallback_ring(args))
    s = format_poly(pfaffian(m))
    return EXIT_OK, {"pfaffian": s, "size": m.nrows}, s + "\n"


def cmd_verify(args):
    m = read_matrix(_read(args.matrix), _fallback_ring(args))
    form = read_form(_read(args.form), m.ring)
    cert = RepresentationCertificate(m, form, args.power, args.mode)
    report = verify_representation(cert, check_smoothness=args.smooth)
    payload = report.to_dict()
    lines = [
        f"{'verified' if report.verified else 'REJECTED'}: {args.mode} of a {report.size}x{report.size} matrix",
        f"form degree {report.form_degree}, bundle rank {report.bundle_rank}, quantum number {report.quantum_number}",
    ]
    if report.difference_leading_term:
        lines.append(f"difference leading term: {report.difference_leading_term}")
    if report.smooth is not None:
        lines.append(f"smooth: {report.smooth}")
    lines += [f"note: {n}" for n in report.notes]
    ok = report.verified and report.smooth is not False
    return (EXIT_OK if ok else EXIT_FAILED), payload, "\n".join(lines) + "\n"


_CALCS = {
    "steiner-betti": (inv.steiner_betti_report, ["N", "n", "h0", "q"]),
    "chi-steiner": (inv.chi_steiner_report, ["N", "h0", "q", "t"]),
    "chi-linear": (inv.chi_linear_report, ["N", "chi", "h1", "hN1", "t"]),
    "monad-betti": (inv.monad_betti_report, ["N", "rank", "h1m1", "hN1mN", "chi?"]),
    "representation-size": (inv.representation_size_report, ["d", "rkE", "q"]),
    "curve-invariants": (inv.curve_invariants_report, ["d", "q"]),
    "slope": (inv.slope_report, ["N", "rank", "HN", "KHN1", "q"]),
    "pfaffian-bound": (inv.pfaffian_bound_report, ["d"]),
    "macaulay-bound": (inv.macaulay_bound_report, ["d"]),
    "rr-surface": (inv.rr_surface_report, ["rank", "chiO", "c1_sq", "K_c1", "c2"]),
}


def cmd_invariants(args):
    fn, params = _CALCS[args.calculator]
    values = [getattr(args, p.rstrip("?")) for p in params]
    report = fn(*values)
    outs = ", ".join(f"{k} = {v}" for k, v in report["outputs"].items())
    checks = "".join(f"\ncheck {c['name']}: {'pass' if c['pass'] else 'FAIL'}" for c in report["cross_checks"])
    ok = all(c["pass"] for c in report["cross_checks"])
    return (EXIT_OK if ok else EXIT_FAILED), report, outs + checks + "\n"


def cmd_lattice_search(args):
    try:
        a, b, c = (int(v) for v in args.gram.split(","))
    except ValueError:
        raise UsageError("--gram expects three integers a,b,c") from None
    report = search_report(Lattice2(a, b, c), args.deg, args.selfint, args.bound)
    sols = report["outputs"]["classes"]
    text = "\n".join(f"({x}, {y})" for x, y in sols) or "no classes"
    return EXIT_OK, report, text + "\n"


def cmd_qscan(args):
    report = qscan_report(args.qmax)
    ok = all(c["pass"] for c in report["cross_checks"])
    text = "admissible q: " + ", ".join(str(q) for q in report["outputs"]["admissible"]) + "\n"
    return (EXIT_OK if ok else EXIT_FAILED), report, text


def cmd_delpezzo(args):
    config = PipelineConfig(
        variant=args.variant,
        field=_field(args),
        seed=args.seed,
        max_retries=args.retries,
        smoothness_check=not args.no_smoothness,
        cubic_tries=args.cubic_tries,
        budget=_budget(args),
    )
    report = run_pipeline(config)
    ok = report.center_ok and report.cubic_smooth is not False
    return (EXIT_OK if ok else EXIT_FAILED), report.to_dict(timings=not args.json), report.transcript()


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="steinerrep", description="Exact tools for determinantal and pfaffian representations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log engine progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("groebner", parents=[common], help="reduced Groebner basis of an ideal file")
    p.add_argument("ideal")
    p.set_defaults(run=cmd_groebner)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert polynomial of a graded ideal file")
    p.add_argument("ideal")
    p.set_defaults(run=cmd_hilbert)

    p = sub.add_parser("saturate", parents=[common], help="saturation I : J^infinity")
    p.add_argument("ideal")
    p.add_argument("--by", default=None, help="ideal file J (default: the irrelevant ideal)")
    p.set_defaults(run=cmd_saturate)

    p = sub.add_parser("kernel", parents=[common], help="kernel of a ring map into ring/ideal")
    p.add_argument("ideal")
    p.add_argument("--images", required=True, help="file with one image polynomial per line")
    p.add_argument("--target-vars", default=None, help="comma-separated target variable names")
    p.set_defaults(run=cmd_kernel)

    p = sub.add_parser("det", parents=[common], help="determinant of a matrix file")
    p.add_argument("matrix")
    p.add_argument("--method", choices=["bareiss", "cofactor"], default="bareiss")
    p.set_defaults(run=cmd_det)

    p = sub.add_parser("pfaffian", parents=[common], help="pfaffian of a skew-symmetric matrix file")
    p.add_argument("matrix")
    p.set_defaults(run=cmd_pfaffian)

    p = sub.add_parser("verify", parents=[common], help="check det or pf of a matrix against a power of a form")
    p.add_argument("--matrix", required=True)
    p.add_argument("--form", required=True)
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--mode", choices=[DETERMINANTAL, PFAFFIAN], default=DETERMINANTAL)
    p.add_argument("--smooth", action="store_true", help="also test smoothness of the hypersurface")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("invariants", help="closed-form numeric invariants")
    calcs = p.add_subparsers(dest="calculator", required=True)
    for name, (_, params) in _CALCS.items():
        c = calcs.add_parser(name, parents=[common])
        for param in params:
            optional = param.endswith("?")
            c.add_argument(f"--{param.rstrip('?')}", type=int, required=not optional, default=None)
        c.set_defaults(run=cmd_invariants)

    p = sub.add_parser("lattice-search", parents=[common], help="classes of given degree and square in a rank-2 lattice")
    p.add_argument("--gram", required=True, help="a,b,c for the form [[a,b],[b,c]]")
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--selfint", type=int, required=True)
    p.add_argument("--bound", type=int, default=200)
    p.set_defaults(run=cmd_lattice_search)

    p = sub.add_parser("qscan", parents=[common], help="admissible quantum numbers of determinantal quartics")
    p.add_argument("--qmax", type=int, default=200)
    p.set_defaults(run=cmd_qscan)

    p = sub.add_parser("delpezzo", parents=[common], help="project a del Pezzo surface to P^5 and find a smooth cubic")
    p.add_argument("--variant", choices=["d8", "d7"], default="d8")
    p.add_argument("--no-smoothness", action="store_true")
    p.add_argument("--cubic-tries", type=int, default=8)
    p.set_defaults(run=cmd_delpezzo)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=stderr)
    stage = args.command
    try:
        code, payload, text = args.run(args)
    except BudgetExceeded as exc:
        print(f"error [{stage}]: budget exhausted: {exc}", file=stderr)
        return EXIT_BUDGET
    except PipelineError as exc:
        print(f"error {exc}", file=stderr)
        return EXIT_FAILED
    except (UsageError, FormatError, ValueError) as exc:
        print(f"error [{stage}]: {exc}", file=stderr)
        return EXIT_USAGE
    if args.json:
        stdout.write(emit_report(payload).decode("utf-8"))
    else:
        stdout.write(text)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
