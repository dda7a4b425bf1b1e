"""Command-line front end: ``octofib audit|norm-table|classify|eval|scan|table``.

Exit codes: 0 everything passed (findings allowed), 1 a failure (or a
finding under ``--strict-findings``), 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

import click

from octofib import classification, fib_octonions, gfl_octonions, sequences
from octofib.expr import ParseError, evaluate, parse, to_source
from octofib.octonion import AlgebraParams, audit_composition_laws, basis_table_json, coefficients, format_octonion
from octofib.rationals import format_rational, parse_rational, parse_rational_list
from octofib.report import FAIL, FINDING, AuditReport, reports_to_json, reports_to_markdown, summary_line

SCOPES = ("sequences", "algebra", "norms", "prop34", "gfl", "all")

DEFAULT_A = tuple(parse_rational_list("-4,-2,-3/2,0,1,7/3"))
SPLIT_FAMILY_A = tuple(parse_rational_list("-3/2,-2,-4,-10"))
SIGN_A = tuple(parse_rational_list("-2,-5/2,-3,-4,-10"))
POLY_A = tuple(parse_rational_list("-10,-4,-3,-5/2,-2,-1,0,1,2"))


class RationalType(click.ParamType):
    name = "p/q"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


class RationalListType(click.ParamType):
    name = "p/q,..."

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return tuple(value)
        try:
            return tuple(parse_rational_list(value))
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


RATIONAL = RationalType()
RATIONAL_LIST = RationalListType()


def algebra_options(f):
    f = click.option("-g", "--gamma", "gamma", type=RATIONAL, default="1", show_default=True)(f)
    f = click.option("-b", "--beta", "beta", type=RATIONAL, default="1", show_default=True)(f)
    f = click.option("-a", "--alpha", "alpha", type=RATIONAL, default="1", show_default=True)(f)
    return f


def _algebra(alpha: Fraction, beta: Fraction, gamma: Fraction) -> AlgebraParams:
    try:
        return AlgebraParams(alpha, beta, gamma)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


@dataclass
class AuditConfig:
    scope: str = "all"
    n_min: int = 0
    n_max: Optional[int] = None
    a_samples: Sequence[Fraction] = DEFAULT_A
    big_n: int = 12
    trials: int = 50
    pairs: int = 500
    seed: int = 0
    algebra: AlgebraParams = field(default_factory=lambda: AlgebraParams(1, 1, 1))
    extend_negative: bool = False

    def n_hi(self, default: int) -> int:
        return default if self.n_max is None else self.n_max


def _sequence_reports(cfg: AuditConfig) -> list[AuditReport]:
    n_hi = cfg.n_hi(300)
    if cfg.n_min < 0 and not cfg.extend_negative:
        raise ValueError("negative --n-min requires --extend-negative-indices")
    lo = max(cfg.n_min, 0)
    reports = sequences.audit_sequence_identities(sequences.ALL_IDENTITY_IDS, lo, n_hi)
    if cfg.extend_negative:
        ext_lo = cfg.n_min if cfg.n_min < 0 else -n_hi
        reports += [sequences.audit_identity_extended(i, ext_lo, -1) for i in sequences.ALL_IDENTITY_IDS]
    return reports


def _algebra_reports(cfg: AuditConfig) -> list[AuditReport]:
    return audit_composition_laws(cfg.pairs, cfg.seed) + [
        classification.audit_stated_classes(),
        classification.audit_split_isotropy(),
        classification.audit_quaternion_example(),
    ]


def _norm_reports(cfg: AuditConfig) -> list[AuditReport]:
    n_hi = cfg.n_hi(100)
    lo = max(cfg.n_min, 0)
    split_a = sorted(set(SPLIT_FAMILY_A) | {a for a in cfg.a_samples if a < -1})
    return [
        fib_octonions.audit_norm_formula(lo, n_hi, cfg.a_samples),
        fib_octonions.audit_worked_example(-4, lo, n_hi),
        fib_octonions.audit_invertible_family(-2, lo, n_hi),
        fib_octonions.audit_worked_example(Fraction(-3, 2), lo, n_hi),
        fib_octonions.audit_family_split(split_a),
    ]


def _sign_argument_reports(cfg: AuditConfig) -> list[AuditReport]:
    return [
        fib_octonions.audit_sign_polynomials(POLY_A),
        fib_octonions.audit_negative_norms(SIGN_A, max(cfg.n_min, 0), cfg.n_hi(100)),
    ]


def _gfl_reports(cfg: AuditConfig) -> list[AuditReport]:
    reports = [
        gfl_octonions.audit_zero_characterization(20, 3),
        gfl_octonions.audit_linear_decomposition(200, cfg.seed, cfg.algebra),
        gfl_octonions.audit_product_expansion(30),
    ]
    if cfg.extend_negative:
        reports.append(gfl_octonions.audit_product_expansion_extended())
    return reports + gfl_octonions.audit_module_structure(cfg.big_n, cfg.trials, cfg.algebra, cfg.seed)


_SCOPE_RUNNERS = {
    "sequences": _sequence_reports,
    "algebra": _algebra_reports,
    "norms": _norm_reports,
    "prop34": _sign_argument_reports,
    "gfl": _gfl_reports,
}


def run_audits(cfg: AuditConfig) -> list[AuditReport]:
    scopes = [s for s in _SCOPE_RUNNERS] if cfg.scope == "all" else [cfg.scope]
    reports: list[AuditReport] = []
    for s in scopes:
        reports.extend(_SCOPE_RUNNERS[s](cfg))
    return reports


def exit_code(reports: Sequence[AuditReport], strict_findings: bool = False) -> int:
    statuses = {r.status for r in reports}
    if FAIL in statuses:
        return 1
    if strict_findings and FINDING in statuses:
        return 1
    return 0


def _timestamp(no_timestamp: bool) -> Optional[str]:
    return None if no_timestamp else datetime.now(timezone.utc).isoformat(timespec="seconds")


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise click.UsageError(f"cannot write {path}: {exc.strerror or exc}") from exc


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(package_name="artifact", message="%(version)s")
def main():
    """Exact audits of Fibonacci and generalized Fibonacci-Lucas octonions."""


@main.command()
@click.option("--scope", type=click.Choice(SCOPES), default="all", show_default=True)
@click.option("--n-min", type=int, default=0, show_default=True)
@click.option("--n-max", type=int, default=None, help="default 300 for sequences, 100 for norms and prop34")
@click.option("--a", "a_samples", type=RATIONAL_LIST, default=",".join(map(format_rational, DEFAULT_A)), show_default=True,
              help="family parameters for the closed-form norm audit")
@click.option("--N", "big_n", type=int, default=12, show_default=True, help="generator index bound")
@click.option("--trials", type=int, default=50, show_default=True)
@click.option("--pairs", type=int, default=500, show_default=True, help="random pairs for the composition laws")
@algebra_options
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=0, show_default=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
@click.option("--markdown", "md_path", type=click.Path(dir_okay=False), default=None)
@click.option("--strict-findings", is_flag=True, help="exit 1 when any finding is reported")
@click.option("--no-timestamp", is_flag=True)
@click.option("--extend-negative-indices", "extend", is_flag=True)
def audit(scope, n_min, n_max, a_samples, big_n, trials, pairs, alpha, beta, gamma, seed,
          json_path, md_path, strict_findings, no_timestamp, extend):
    """Run audit suites and write JSON/Markdown reports."""
    cfg = AuditConfig(scope, n_min, n_max, a_samples, big_n, trials, pairs, seed,
                      _algebra(alpha, beta, gamma), extend)
    try:
        reports = run_audits(cfg)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    ts = _timestamp(no_timestamp)
    _write(json_path, reports_to_json(reports, ts))
    _write(md_path, reports_to_markdown(reports, ts))
    for r in reports:
        click.echo(summary_line(r))
    counts = {s: sum(r.status == s for r in reports) for s in ("pass", "fail", "finding")}
    click.echo(f"{len(reports)} claims: {counts['pass']} pass, {counts['fail']} fail, {counts['finding']} finding")
    sys.exit(exit_code(reports, strict_findings))


NORM_TABLE_COLUMNS = ("n", "a", "norm_closed", "norm_direct", "equal")


def norm_table_csv(a_samples: Sequence[Fraction], n_lo: int, n_hi: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(NORM_TABLE_COLUMNS)
    for a in a_samples:
        for n in range(n_lo, n_hi + 1):
            closed = fib_octonions.norm_closed_form(n, a)
            direct = fib_octonions.norm_direct(n, a)
            w.writerow((n, format_rational(a), format_rational(closed), format_rational(direct), str(closed == direct).lower()))
    return buf.getvalue()


@main.command("norm-table")
@click.option("--a", "a_samples", type=RATIONAL_LIST, default=",".join(map(format_rational, DEFAULT_A)), show_default=True)
@click.option("--n-min", type=int, default=0, show_default=True)
@click.option("--n-max", type=int, default=20, show_default=True)
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None, help="output file (stdout if omitted)")
def norm_table(a_samples, n_min, n_max, csv_path):
    """Tabulate closed-form and direct norms of Fibonacci octonions."""
    if not 0 <= n_min <= n_max:
        raise click.UsageError("need 0 <= --n-min <= --n-max")
    try:
        text = norm_table_csv(a_samples, n_min, n_max)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    if csv_path is None:
        click.echo(text, nl=False)
    else:
        _write(csv_path, text)


@main.command("classify")
@algebra_options
@click.option("--height", type=click.IntRange(1, 2), default=1, show_default=True, help="isotropic search height")
def classify_cmd(alpha, beta, gamma, height):
    """Split or division verdict for O(alpha, beta, gamma) over the reals."""
    alg = _algebra(alpha, beta, gamma)
    verdict = classification.classify(alg)
    click.echo(str(verdict))
    if verdict is classification.AlgebraClass.SPLIT and all(abs(v) == 1 for v in (alg.alpha, alg.beta, alg.gamma)):
        witness = classification.find_isotropic_octonion(alg, height)
        if witness is not None:
            click.echo(f"isotropic witness: {format_octonion(witness)} (norm 0)")


@main.command("eval")
@click.argument("expression")
@algebra_options
def eval_cmd(expression, alpha, beta, gamma):
    """Evaluate an octonion expression exactly. '*' groups left to right.

    Start the expression with '--' if it begins with a minus sign.
    """
    alg = _algebra(alpha, beta, gamma)
    try:
        tree = parse(expression)
    except ParseError as exc:
        click.echo(f"parse error: {exc}\n  {expression}\n  {' ' * exc.position}^", err=True)
        sys.exit(2)
    value = evaluate(tree, alg)
    click.echo(f"parsed: {to_source(tree)}")
    click.echo(f"in {alg}: {format_octonion(value)}")
    click.echo("coefficients: " + " ".join(coefficients(value)))
    click.echo("note: '*' groups left to right; octonion multiplication is not associative")


@main.command("scan")
@click.option("--a", "a", type=RATIONAL, required=True)
@click.option("--n-min", type=int, default=0, show_default=True)
@click.option("--n-max", type=int, default=100, show_default=True)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
def scan_cmd(a, n_min, n_max, json_path):
    """Signs of n(F_n) in O(a+1, 2a+1, 3a+1); exit 1 if some F_n is not invertible."""
    try:
        rep = fib_octonions.invertibility_scan(a, n_min, n_max)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    doc = rep.to_dict()
    _write(json_path, json.dumps(doc, indent=2) + "\n")
    click.echo(f"{fib_octonions.ap_algebra(a)}, n in [{n_min}, {n_max}]")
    for sign in ("positive", "negative", "zero"):
        first = doc[f"first_{sign}"]
        click.echo(f"{sign:9s} {doc[sign]}" + ("" if first is None else f"  (first at n={first})"))
    click.echo("all invertible" if rep.all_invertible else "zero divisors found")
    sys.exit(0 if rep.all_invertible else 1)


@main.command("table")
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
def table_cmd(json_path):
    """Write the symbolic multiplication table as JSON (stdout if no path)."""
    text = basis_table_json()
    if json_path is None:
        click.echo(text, nl=False)
    else:
        _write(json_path, text)


if __name__ == "__main__":
    main()
