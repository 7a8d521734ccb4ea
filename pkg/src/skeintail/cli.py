#!/usr/bin/env python3
# src/skeintail/cli.py
"""
skeintail: colored Jones tails from planar diagram codes.

Usage examples:
  skeintail adequacy trefoil-std           # bundled corpus name or a .pd path
  skeintail jones knot.pd --n 3 --json
  skeintail jw --n 4 --verify
  skeintail states unlink-clasp --n 2
  skeintail tail trefoil-std --n-max 4 --window 2
  skeintail bounds unlink-clasp --n 2..4
  skeintail selftest --quick
"""

from __future__ import annotations

import functools
import importlib.metadata as _ilm
import json
import logging
import pathlib
from typing import Any, Callable, Iterable, List, Optional

import click

from . import corpus
from .colored_jones import colored_jones, state_decomposition
from .config import DEFAULT_LIMITS, Limits
from .diagram import Diagram, parse_pd
from .errors import SkeinTailError
from .jones_wenzl import jw, verify_jw
from .selftest import run_selftest
from .states import bracket_oracle, state_sum_summary
from .tails import bounds_report, stabilization_check, truncation_from_report

log = logging.getLogger(__name__)


# ---------- helpers ----------
def _pkg_version() -> str:
    try:
        return _ilm.version("skeintail")
    except Exception:
        return "0+unknown"


class DiagramFailure(click.ClickException):
    """Bad input or an evaluation that could not finish."""
    exit_code = 2

    def show(self, file: Any = None) -> None:
        click.secho(f"error: {self.format_message()}", err=True, fg="red")


def _guarded(fn: Callable[..., Any]) -> Callable[..., Any]:
    @functools.wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return fn(*args, **kwargs)
        except (SkeinTailError, ValueError) as exc:
            raise DiagramFailure(f"{type(exc).__name__}: {exc}") from exc
    return wrapper


def _resolve_diagram_path(arg: str) -> Optional[pathlib.Path]:
    path = pathlib.Path(arg)
    return path if path.is_file() else None


def _load_diagram(arg: str) -> Diagram:
    """A readable file wins; otherwise the argument names a bundled diagram (with or without .pd)."""
    path = _resolve_diagram_path(arg)
    if path is not None:
        return parse_pd(path.read_text(encoding="utf-8"), name=path.stem)
    stem = pathlib.Path(arg).name
    if stem.endswith(".pd"):
        stem = stem[:-3]
    if stem in corpus.names():
        log.debug("using bundled diagram %s", stem)
        return corpus.load(stem)
    raise click.BadParameter(f"no such file or bundled diagram: {arg}", param_hint="DIAGRAM")


def _parse_levels(text: str, minimum: int = 1) -> List[int]:
    """'3', '2..5' or '2,3,5'."""
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split("..", 1))
            levels = list(range(lo, hi + 1))
        else:
            levels = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise click.BadParameter(f"expected N, LO..HI or a comma list, got {text!r}", param_hint="--n") from None
    if not levels or min(levels) < minimum:
        raise click.BadParameter(f"levels must be at least {minimum}, got {text!r}", param_hint="--n")
    return levels


def _emit(payload: Any, as_json: bool, lines: Iterable[str]) -> None:
    if as_json:
        click.echo(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
        return
    for line in lines:
        click.echo(line)


def _yes(flag: Optional[bool]) -> str:
    if flag is None:
        return "-"
    return "yes" if flag else "no"


jw_max_option = click.option("--jw-max", type=int, default=None,
                             help=f"Largest projector built (default {DEFAULT_LIMITS.jw_max}).")


def _limit_options(fn: Callable[..., Any]) -> Callable[..., Any]:
    fn = jw_max_option(fn)
    fn = click.option("--width-cap", type=int, default=None,
                      help=f"Largest sweep width accepted (default {DEFAULT_LIMITS.width_cap}).")(fn)
    fn = click.option("--brute-limit", type=int, default=None,
                      help=f"Crossings enumerated by the state-sum oracle (default {DEFAULT_LIMITS.brute_limit}).")(fn)
    return fn


def _limits(brute_limit: Optional[int] = None, width_cap: Optional[int] = None, window: Optional[int] = None,
            jw_max: Optional[int] = None) -> Limits:
    return DEFAULT_LIMITS.with_overrides(brute_limit=brute_limit, width_cap=width_cap, window=window,
                                         jw_max=jw_max)


json_option = click.option("--json", "as_json", is_flag=True, help="Print a JSON document instead of text.")


# ---------- commands ----------
@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=_pkg_version(), prog_name="skeintail")
@click.option("--debug", is_flag=True, help="Log evaluation progress to stderr.")
def cli(debug: bool) -> None:
    """Kauffman states, Jones-Wenzl projectors and colored Jones tails."""
    logging.basicConfig(level=logging.DEBUG if debug else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")


@cli.command()
@click.argument("diagram")
@json_option
@_guarded
def adequacy(diagram: str, as_json: bool) -> None:
    """All-A/all-B circle counts, adequacy and loop crossings."""
    d = _load_diagram(diagram)
    s = state_sum_summary(d)
    loops = ", ".join(str(x) for x in s["loop_crossings"]) or "-"
    _emit({"diagram": d.label(), **s}, as_json, [
        f"{d.label()}: {s['crossings']} crossings, {s['components']} component(s)",
        f"|s_A| = {s['s_A']}, |s_B| = {s['s_B']}",
        f"A-adequate: {_yes(s['A_adequate'])}, B-adequate: {_yes(s['B_adequate'])}, c^ℓ = {s['c_loop']}",
        f"loop crossings: {loops}",
    ])


@cli.command()
@click.argument("diagram")
@_limit_options
@json_option
@_guarded
def bracket(diagram: str, brute_limit: Optional[int], width_cap: Optional[int], jw_max: Optional[int],
            as_json: bool) -> None:
    """Un-normalized Kauffman bracket by state enumeration."""
    d = _load_diagram(diagram)
    poly = bracket_oracle(d, _limits(brute_limit, width_cap, jw_max=jw_max))
    _emit({"diagram": d.label(), "bracket": poly.to_pairs(), "q_form": poly.format_q()},
          as_json, [f"<{d.label()}> = {poly.format_q()}"])


@cli.command()
@click.argument("diagram")
@click.option("--n", "n", type=int, default=2, show_default=True, help="Cable width (color).")
@click.option("--loop", "loop_crossing", type=int, default=None,
              help="Leave the cabled grid of this crossing unresolved.")
@_limit_options
@json_option
@click.pass_context
@_guarded
def states(ctx: click.Context, diagram: str, n: int, loop_crossing: Optional[int], brute_limit: Optional[int],
           width_cap: Optional[int], jw_max: Optional[int], as_json: bool) -> None:
    """Split the cabled bracket over Kauffman states and count the ones that vanish."""
    d = _load_diagram(diagram)
    split = state_decomposition(d, n, loop_crossing, _limits(brute_limit, width_cap, jw_max=jw_max))
    where = "all cabled crossings" if loop_crossing is None else f"outside crossing {loop_crossing}"
    _emit(split.as_dict(), as_json, [
        f"{split.diagram} n={n}: {len(split)} states over {where}",
        f"vanishing: {split.vanishing}, surviving: {split.surviving}",
        f"sum matches bracket: {_yes(split.consistent)}",
    ])
    if not split.consistent:
        ctx.exit(1)


@cli.command("jw")
@click.option("--n", "n", type=int, required=True, help="Number of strands.")
@click.option("--verify", is_flag=True, help="Check annihilation, idempotence, trace and caps.")
@jw_max_option
@json_option
@click.pass_context
@_guarded
def jw_command(ctx: click.Context, n: int, verify: bool, jw_max: Optional[int], as_json: bool) -> None:
    """Expand the Jones-Wenzl projector on n strands in the matching basis."""
    limits = _limits(jw_max=jw_max)
    p = jw(n, limits)
    terms = [{"matching": str(m), "coefficient": c.format_q()} for m, c in p.items()]
    payload: dict = {"n": n, "terms": terms}
    lines = [f"jw({n}): {len(terms)} basis terms"] + [f"  [{t['matching']}]  {t['coefficient']}" for t in terms]
    report = None
    if verify:
        report = verify_jw(n, limits)
        payload["verification"] = report.as_dict()
        lines.append(f"verification: {'pass' if report.passed else 'FAIL'}")
    _emit(payload, as_json, lines)
    if report is not None and not report.passed:
        ctx.exit(1)


@cli.command()
@click.argument("diagram")
@click.option("--n", "n", type=int, required=True, help="Cable width (color).")
@click.option("--raw", is_flag=True, help="Skip the writhe factor.")
@_limit_options
@json_option
@_guarded
def jones(diagram: str, n: int, raw: bool, brute_limit: Optional[int], width_cap: Optional[int],
          jw_max: Optional[int], as_json: bool) -> None:
    """Colored Jones polynomial J(q; n) by cabled skein evaluation."""
    d = _load_diagram(diagram)
    result = colored_jones(d, n, raw=raw, limits=_limits(brute_limit, width_cap, jw_max=jw_max))
    body = result.as_dict()
    _emit({"diagram": d.label(), **body}, as_json, [
        f"J({d.label()}; {n}) = {body['q_form']}",
        f"d(n) = {body['d_n']}, writhe = {result.writhe}"
        + (" (factor not applied)" if raw else ""),
        f"peak width = {result.peak_width}, integral q-powers: {_yes(result.integral)}",
    ])


@cli.command()
@click.argument("diagram")
@click.option("--n-max", type=int, default=4, show_default=True, help="Largest cable width compared.")
@click.option("--window", type=int, default=None, help="Tail coefficients compared per level.")
@_limit_options
@json_option
@click.pass_context
@_guarded
def tail(ctx: click.Context, diagram: str, n_max: int, window: Optional[int],
         brute_limit: Optional[int], width_cap: Optional[int], jw_max: Optional[int], as_json: bool) -> None:
    """Stabilization of the lowest coefficients of J(q; n)."""
    d = _load_diagram(diagram)
    limits = _limits(brute_limit, width_cap, window, jw_max)
    report = stabilization_check(d, n_max, window, limits)
    if report.side == "head":
        click.secho(f"WARN: {report.diagram} is not A-adequate; reading the head from the top of J, h_n from its mirror.",
                    fg="yellow", err=True)
    payload = report.as_dict()
    lines = [f"{report.diagram} ({report.side}), n = 2..{report.n_max}, window {report.window}"]
    for row in report.rows:
        lines.append(f"  n={row.n}: d(n)={row.d_n} h_n={row.h_n} sign={row.sign:+d} "
                     f"low={row.low_coefficients}")
    lines.append(f"stabilization: {'pass' if report.stabilization_ok else 'FAIL'}")
    if report.sharp_ok is not None:
        lines.append(f"d(n) = h_n: {_yes(report.sharp_ok)}")
    if report.stabilization_ok:
        truncated = truncation_from_report(report)
        payload["truncation"] = truncated.format_q()
        lines.append(f"tail ≈ {truncated.format_q()}")
    _emit(payload, as_json, lines)
    if not report.stabilization_ok:
        ctx.exit(1)


@cli.command()
@click.argument("diagram")
@click.option("--n", "levels", default="2..4", show_default=True, help="N, LO..HI or a comma list.")
@_limit_options
@json_option
@click.pass_context
@_guarded
def bounds(ctx: click.Context, diagram: str, levels: str, brute_limit: Optional[int],
           width_cap: Optional[int], jw_max: Optional[int], as_json: bool) -> None:
    """Sharpness on A-adequate diagrams; gap and vanishing window otherwise."""
    d = _load_diagram(diagram)
    ns = _parse_levels(levels, minimum=2)
    report = bounds_report(d, ns, _limits(brute_limit, width_cap, jw_max=jw_max))
    lines = [f"{report.diagram}: A-adequate {_yes(report.a_adequate)}"]
    for row in report.rows:
        if report.a_adequate:
            lines.append(f"  n={row['n']}: d(n)={row['d_n']} h_n={row['h_n']} "
                         f"lowest coefficient {row['lowest_coefficient']:+d} sharp {_yes(row['sharp'])}")
        else:
            gap, win = row["gap"], row["window"]
            lines.append(f"  n={row['n']}: gap {gap['gap']} >= {gap['required']} {_yes(gap['passed'])}; "
                         f"window below {win['threshold']} {_yes(win['passed'])}")
    lines.append(f"bounds: {'pass' if report.passed else 'FAIL'}")
    _emit(report.as_dict(), as_json, lines)
    if not report.passed:
        ctx.exit(1)


@cli.command()
@click.option("--quick", is_flag=True, help="Smaller levels; finishes in seconds.")
@_limit_options
@json_option
@click.pass_context
@_guarded
def selftest(ctx: click.Context, quick: bool, brute_limit: Optional[int], width_cap: Optional[int],
             jw_max: Optional[int], as_json: bool) -> None:
    """Run the acceptance checks against the bundled corpus."""
    report = run_selftest(_limits(brute_limit, width_cap, jw_max=jw_max), quick=quick)
    lines = [f"{'pass' if c.passed else 'FAIL'}  {c.name}" for c in report.checks]
    lines.append(f"selftest: {'pass' if report.passed else 'FAIL'}")
    _emit(report.as_dict(), as_json, lines)
    if not report.passed:
        ctx.exit(1)


# ---------- entry ----------
def main(argv: Optional[List[str]] = None) -> None:
    """Console entry; always leaves through SystemExit with the command's exit code."""
    cli.main(args=argv, prog_name="skeintail")


if __name__ == "__main__":
    main()
