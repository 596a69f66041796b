"""Command-line entry point.

Exit status: 0 on success, 1 when an applicable bound fails or an algebra
fails validation, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .algebra import LeibnizIdentityError, catalog_make, CATALOG
from .bounds import verify_corollaries, verify_theorem_a, verify_theorem_b
from .checks import invariance_failures, structural_failures
from .derivations import DerivationError, ad_set, derivation_algebra, lie_closure
from .field import FieldError, FieldSpec, scalar_format
from .formats import FormatError, parse_algebra_file, parse_derivation_file, render_algebra_file
from .fuzz import STRATEGIES, FuzzConfig, derivation_sets, fuzz_generate
from .report import kv_lines, render_report
from .series import lower_d_central_series, upper_d_central_series

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load(args):
    a = parse_algebra_file(_read(args.file))
    if getattr(args, "d", None):
        d = parse_derivation_file(_read(args.d), a)
    else:
        d = lie_closure(a)
    return a, d


def _field_arg(text: str) -> FieldSpec:
    try:
        return FieldSpec.from_string(text)
    except FieldError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _vec(v) -> str:
    return " ".join(scalar_format(x) for x in v)


def cmd_validate(args, out) -> int:
    a = parse_algebra_file(_read(args.file))
    out.write("".join(f"{line}\n" for line in kv_lines(
        [("valid", True), ("dim", a.n), ("field", a.field), ("is_lie", a.is_lie)])))
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    a = parse_algebra_file(_read(args.file))
    left, right, center = a.centers
    ad = ad_set(a)
    upper = upper_d_central_series(a, ad)
    lower = lower_d_central_series(a, ad)
    pairs = [
        ("field", a.field),
        ("dim", a.n),
        ("is_lie", a.is_lie),
        ("dim_left_center", left.dim),
        ("dim_right_center", right.dim),
        ("dim_center", center.dim),
        ("dim_derived", a.derived.dim),
        ("dim_der", derivation_algebra(a).dim),
        ("dim_adl", ad.dim),
        ("upper_central_series", upper.dims),
        ("zl", upper.zl),
        ("lower_central_series", lower.dims),
    ]
    out.write("".join(f"{line}\n" for line in kv_lines(pairs)))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    a, d = _load(args)
    claims = {c.strip() for c in args.claims.split(",") if c.strip()}
    unknown = claims - {"a", "b", "corollaries"}
    if unknown:
        raise UsageError(f"unknown claims {sorted(unknown)}; use a, b, corollaries")
    reports = []
    if "a" in claims:
        reports.append(verify_theorem_a(a, d))
    if "b" in claims:
        reports.append(verify_theorem_b(a, d))
    if "corollaries" in claims:
        reports += verify_corollaries(a, args.series_index)
    if args.format == "kv":
        out.write("".join(f"{line}\n" for line in kv_lines([("d.dim", d.dim), ("d.k", d.k)])))
    out.write(render_report(reports, args.format))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_series(args, out) -> int:
    a, d = _load(args)
    s = upper_d_central_series(a, d) if args.upper else lower_d_central_series(a, d)
    pairs = [("flavor", s.flavor), ("stabilized_at", s.stabilized_at)]
    if s.flavor == "upper":
        pairs += [("zl", s.zl), ("hypercenter.dim", s.hypercenter.dim)]
    first = 0 if s.flavor == "upper" else 1
    for i, term in enumerate(s.terms, first):
        pairs += [(f"term.{i}.dim", term.dim), (f"term.{i}.basis", "; ".join(_vec(b) for b in term.basis))]
    out.write("".join(f"{line}\n" for line in kv_lines(pairs)))
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    try:
        a = catalog_make(args.name, args.dim, args.field)
    except ValueError as e:
        raise UsageError(str(e)) from None
    text = render_algebra_file(a)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def run_fuzz(cfg: FuzzConfig, fmt: str = "kv", invariants: bool = False) -> tuple[str, bool]:
    """Run the fuzz corpus; returns the rendered report and whether everything passed."""
    stats: dict = {}
    chunks = []
    failures = 0
    mismatched_centers = 0
    for idx, a in enumerate(fuzz_generate(cfg, stats)):
        rng = random.Random(f"{cfg.seed}:{idx}")
        left, right, _ = a.centers
        if left.dim != right.dim:
            mismatched_centers += 1
        head = [("dim", a.n), ("is_lie", a.is_lie), ("dim_left_center", left.dim), ("dim_right_center", right.dim)]
        lines = kv_lines(head, f"instance.{idx}.") if fmt == "kv" else [f"instance {idx}: dim={a.n} lie={a.is_lie}"]
        chunk = "".join(f"{line}\n" for line in lines)
        reports_all = []
        for label, d in derivation_sets(a, rng):
            reps = [verify_theorem_a(a, d), verify_theorem_b(a, d)]
            reports_all += reps
            chunk += render_report(reps, fmt, f"instance.{idx}.{label}.")
            if invariants:
                bad = structural_failures(a, d) + invariance_failures(a, d, rng)
                failures += len(bad)
                chunk += "".join(f"instance.{idx}.{label}.invariant_failure = {b}\n" for b in bad)
        for s in (1, 2, 3):
            reps = verify_corollaries(a, s)
            if s > 1:
                reps = [r for r in reps if r.claim.startswith("baer")]
            reports_all += reps
            chunk += render_report(reps, fmt, f"instance.{idx}.s{s}.")
        failures += sum(not r.ok for r in reports_all)
        chunks.append(chunk)
    summary = [
        ("summary.instances", cfg.count),
        ("summary.attempts", stats["attempts"]),
        ("summary.acceptance", f"{stats['accepted']}/{stats['attempts']}"),
        ("summary.center_dim_mismatch", mismatched_centers),
        ("summary.failures", failures),
    ]
    text = "".join(chunks) + "".join(f"{line}\n" for line in kv_lines(summary))
    return text, failures == 0


def cmd_fuzz(args, out) -> int:
    try:
        cfg = FuzzConfig(args.dim, args.field, args.count, args.seed, args.strategy)
    except ValueError as e:
        raise UsageError(str(e)) from None
    text, ok = run_fuzz(cfg, args.format, args.invariants)
    out.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leibniz", description="Generalized central series of Leibniz algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check the left Leibniz identity")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", help="centers, derived algebra, Der, Ad^l and classical series")
    s.add_argument("file")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("verify", help="check dimension bounds")
    s.add_argument("file")
    s.add_argument("--d", metavar="DFILE", help="derivation file; closed together with Ad^l")
    s.add_argument("--claims", default="a,b,corollaries")
    s.add_argument("--series-index", type=int, default=1)
    s.add_argument("--format", choices=("kv", "text"), default="kv")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("series", help="upper or lower D-central series")
    s.add_argument("file")
    s.add_argument("--d", metavar="DFILE")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--upper", action="store_true")
    g.add_argument("--lower", action="store_true")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("catalog", help="write a catalog algebra")
    s.add_argument("name", choices=sorted(CATALOG))
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--field", type=_field_arg, required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("fuzz", help="random algebras checked against every bound")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--field", type=_field_arg, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--strategy", choices=STRATEGIES, default="catalog_conjugate")
    s.add_argument("--format", choices=("kv", "text"), default="kv")
    s.add_argument("--invariants", action="store_true", help="also run the structural invariant checks")
    s.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except LeibnizIdentityError as e:
        err.write(f"error: {e}\n")
        for (i, j, k), lhs, rhs in e.violations:
            err.write(f"  violation at ({i + 1},{j + 1},{k + 1}): lhs = {_vec(lhs)}; rhs = {_vec(rhs)}\n")
        return EXIT_FAIL
    except DerivationError as e:
        err.write(f"error: {e}\n")
        return EXIT_FAIL
    except (FormatError, FieldError, UsageError) as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
