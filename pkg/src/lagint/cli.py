"""Command-line front end: list the corpus, verify identities, evaluate special functions.

Exit status: 0 when every requested verification passes (always for
``list`` and ``eval``), 1 when any verification fails, 2 on usage errors.
Tolerances default to abs 1e-8 / rel 1e-7 / deriv 1e-6 and may be
overridden by flags or by LAGINT_TOL_ABS / LAGINT_TOL_REL / LAGINT_TOL_DERIV.
"""

from __future__ import annotations

import json
import math
import sys
from typing import Optional, Sequence

import click

from . import corpus, specfun
from .errors import LagintError
from .identity import get_gauge, make_identity
from .odecat import get_ode
from .verify import DEFAULT_TOLERANCE, Tolerance, VerificationReport, verify_identity

FORMATS = click.Choice(["text", "json"])


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------
def _num(v: float):
    """JSON number (shortest round-trip repr) or null for non-finite values."""
    v = float(v)
    return v if math.isfinite(v) else None


def report_to_dict(report: VerificationReport) -> dict:
    d = {
        "id": report.id,
        "intervals": [
            {"a": _num(c.a), "b": _num(c.b), "quad": _num(c.quad), "quad_err": _num(c.quad_err),
             "delta_f": _num(c.delta_f), "abs_err": _num(c.abs_err), "rel_err": _num(c.rel_err),
             "pass": c.passed}
            for c in report.intervals
        ],
        "deriv": {"points": report.deriv.points, "max_resid": _num(report.deriv.max_resid),
                  "pass": report.deriv.passed},
        "pass": report.passed,
        "runtime_ms": _num(1e3 * report.runtime),
        "notes": report.notes,
        "dual": None if report.dual is None else {
            "points": report.dual.points, "max_rel": _num(report.dual.max_rel), "pass": report.dual.passed},
        "skipped": report.skipped,
    }
    if report.error:
        d["error"] = report.error
    return d


def reports_to_json(reports: Sequence[VerificationReport]) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2, allow_nan=False)


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def format_text(report: VerificationReport) -> list[str]:
    if report.skipped:
        return [f"{report.id}  SKIP  {report.error}"]
    if report.error and not report.intervals:
        return [f"{report.id}  ERROR  {report.error}"]
    lines = [
        f"{report.id}  [{c.a:g}, {c.b:g}]  quad={c.quad:.16e}  dF={c.delta_f:.16e}  "
        f"abs_err={c.abs_err:.3e}  rel_err={c.rel_err:.3e}  {_status(c.passed)}"
        for c in report.intervals
    ]
    lines.append(f"{report.id}  deriv  points={report.deriv.points}  max_resid={report.deriv.max_resid:.3e}  "
                 f"{_status(report.deriv.passed)}")
    if report.dual is not None:
        lines.append(f"{report.id}  dual  points={report.dual.points}  max_rel={report.dual.max_rel:.3e}  "
                     f"{_status(report.dual.passed)}")
    return lines


def _emit(reports: Sequence[VerificationReport], fmt: str, report_path: Optional[str]) -> int:
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write(reports_to_json(reports) + "\n")
    summary = corpus.summarize(reports)
    if fmt == "json":
        click.echo(reports_to_json(reports))
    else:
        for r in reports:
            for line in format_text(r):
                click.echo(line)
        click.echo(f"summary: {summary.passed} passed, {summary.failed} failed, "
                   f"{summary.skipped} skipped of {summary.total}")
    return 0 if summary.failed == 0 else 1


# ---------------------------------------------------------------------------
# shared options
# ---------------------------------------------------------------------------
def _positive(ctx, param, value):
    if value is not None and not (value > 0.0 and math.isfinite(value)):
        raise click.BadParameter("must be positive and finite")
    return value


def tolerance_options(fn):
    fn = click.option("--tol-deriv", type=float, default=DEFAULT_TOLERANCE.deriv, show_default=True,
                      envvar="LAGINT_TOL_DERIV", callback=_positive, help="Derivative-check tolerance.")(fn)
    fn = click.option("--tol-rel", type=float, default=DEFAULT_TOLERANCE.rel, show_default=True,
                      envvar="LAGINT_TOL_REL", callback=_positive, help="Relative tolerance.")(fn)
    fn = click.option("--tol-abs", type=float, default=DEFAULT_TOLERANCE.abs, show_default=True,
                      envvar="LAGINT_TOL_ABS", callback=_positive, help="Absolute tolerance.")(fn)
    return fn


def output_options(fn):
    fn = click.option("--report", "report_path", type=click.Path(dir_okay=False, writable=True),
                      help="Also write the JSON report to PATH.")(fn)
    fn = click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)(fn)
    return fn


def _interval_override(a, b):
    if (a is None) != (b is None):
        raise click.UsageError("--a and --b must be given together")
    if a is None:
        return None
    if not a < b:
        raise click.UsageError("--a must be smaller than --b")
    return [(a, b)]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------
@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Construct and numerically verify indefinite-integral identities."""


@cli.command("list")
@click.option("--filter", "tag", help="Only entries carrying this family tag.")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def list_cmd(tag, fmt):
    """List corpus entries."""
    entries = corpus.list_entries(tag)
    if fmt == "json":
        click.echo(json.dumps([
            {"id": e.id, "recipe": e.recipe, "ode": e.ode, "solution": e.solution, "gauge": e.gauge,
             "params": dict(e.params), "intervals": [list(iv) for iv in e.intervals], "tags": list(e.tags),
             "notes": e.notes}
            for e in entries
        ], indent=2))
    else:
        for e in entries:
            click.echo(f"{e.id:<16} {e.ode:<28} {e.solution:<10} {e.gauge:<40} {','.join(e.tags)}")
    return 0


@cli.command("verify")
@click.option("--entry", "entries", multiple=True, help="Corpus entry id (repeatable).")
@click.option("--ode", "ode_id", help="Ad-hoc identity: catalog ODE id, e.g. 'bessel(0,1)'.")
@click.option("--solution", help="Ad-hoc identity: solution name in the catalog entry.")
@click.option("--gauge", "gauge_id", help="Ad-hoc identity: gauge id (see identity.gauge_ids()).")
@click.option("--gauge-param", "gauge_params", type=float, multiple=True, help="Gauge parameter (repeatable).")
@click.option("--a", "a", type=float, help="Left end of a single verification interval.")
@click.option("--b", "b", type=float, help="Right end of a single verification interval.")
@tolerance_options
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@output_options
def verify_cmd(entries, ode_id, solution, gauge_id, gauge_params, a, b, tol_abs, tol_rel, tol_deriv, jobs,
               fmt, report_path):
    """Verify corpus entries or an ad-hoc identity g = f (h'' + p h' + q h) y."""
    tol = Tolerance(tol_abs, tol_rel, tol_deriv)
    intervals = _interval_override(a, b)
    adhoc = any(v is not None for v in (ode_id, solution, gauge_id))
    if adhoc == bool(entries):
        raise click.UsageError("give either --entry ids or --ode/--solution/--gauge")
    if adhoc:
        if None in (ode_id, solution, gauge_id):
            raise click.UsageError("an ad-hoc identity needs --ode, --solution and --gauge")
        if intervals is None:
            raise click.UsageError("an ad-hoc identity needs --a and --b")
        ode, sols = get_ode(ode_id)
        if solution not in sols:
            raise click.UsageError(f"{ode_id} has no solution {solution!r} (known: {', '.join(sols)})")
        ident = make_identity(ode, sols[solution], get_gauge(gauge_id, gauge_params))
        reports = [verify_identity(ident, intervals, tol)]
    else:
        for e in entries:
            corpus.get_entry(e)
        if jobs == 1:
            reports = [corpus.run_entry(e, tol, intervals) for e in entries]
        else:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=jobs) as pool:
                reports = list(pool.map(lambda e: corpus.run_entry(e, tol, intervals), entries))
    return _emit(reports, fmt, report_path)


@cli.command("corpus")
@click.option("--all", "run_all", is_flag=True, help="Run every corpus entry.")
@click.option("--entry", "entries", multiple=True, help="Corpus entry id (repeatable).")
@click.option("--filter", "tag", help="Only entries carrying this family tag.")
@tolerance_options
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@output_options
def corpus_cmd(run_all, entries, tag, tol_abs, tol_rel, tol_deriv, jobs, fmt, report_path):
    """Batch-verify the corpus (all entries, a family tag, or explicit ids)."""
    if sum(bool(x) for x in (run_all, entries, tag)) != 1:
        raise click.UsageError("choose exactly one of --all, --entry or --filter")
    tol = Tolerance(tol_abs, tol_rel, tol_deriv)
    run = corpus.run_all(tol, jobs, filter=tag, ids=list(entries) or None)
    return _emit(run.reports, fmt, report_path)


def _family(name: str) -> specfun.Family:
    key = name.replace("_", "").replace("-", "").lower()
    for fam in specfun.Family:
        if fam.value.lower() == key:
            return fam
    names = ", ".join(f.value for f in specfun.Family)
    raise click.BadParameter(f"unknown function {name!r} (known: {names})", param_hint="--fn")


@cli.command("eval")
@click.option("--fn", "fn_name", required=True, help="Function family, e.g. elliptic_k, bessel_j, assoc_legendre_p.")
@click.option("--param", "params", type=float, multiple=True,
              help="Function parameter (repeatable, in order: order / degree, order / a, b, c).")
@click.option("--x", "xs", type=float, multiple=True, required=True, help="Argument (repeatable).")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
def eval_cmd(fn_name, params, xs, fmt):
    """Evaluate a special function (value, first and second derivative)."""
    fam = _family(fn_name)
    try:
        spec = specfun.SpecFnId(fam, tuple(params))
    except LagintError as exc:
        raise click.BadParameter(str(exc), param_hint="--param") from None
    rows = []
    for x in xs:
        r = spec(x)
        rows.append({"fn": fam.value, "params": list(spec.parameters), "x": x, "value": _num(r.value),
                     "d1": _num(r.d1), "d2": None if r.d2 is None else _num(r.d2)})
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2))
    else:
        for row in rows:
            click.echo(repr(row["value"]) if len(rows) == 1 else f"{row['x']!r} {row['value']!r}")
    return 0


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI on ``argv`` and return the exit status instead of exiting."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="lagint", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except LagintError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    return int(rv or 0)


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
