"""Command line front end.

Exit codes: 0 success / every law holds, 1 a law or cross-check failed,
2 bad input, 3 inconclusive (the window of powers was too short).
"""

from __future__ import annotations

import json
import sys
import warnings
from pathlib import Path

import click

from . import asymptotics as asym
from .ass_primes import ass_profile, associated_primes, max_primes
from .errors import DomainError, InputError
from .ideal import MonomialPrime, RingContext, format_monomial, iter_powers, sorted_primes
from .parsing import parse_ideal
from .report import (
    monomials_text,
    prime_label,
    report_dict,
    report_text,
    table_dict,
    table_text,
    table_to_csv,
)
from .twovar import (
    M_XY,
    ass_closed_form,
    family_ideal,
    family_power_gens,
    from_ideal,
    v_closed_form,
    v_m_closed_form,
    v_power_closed_forms,
)
from .vnumber import module_min_gens, v_all, v_p

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class _Abort(Exception):
    def __init__(self, code):
        self.code = code


def _fail_input(message: str):
    click.echo(f"error: {message}", err=True)
    raise _Abort(EXIT_INPUT)


def _load(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        _fail_input(f"cannot read {path}: {exc.strerror}")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            ideal = parse_ideal(text)
        except InputError as exc:
            _fail_input(f"{path}: {exc}")
    for w in caught:
        click.echo(f"warning: {w.message}", err=True)
    try:
        ideal.require_proper()
    except DomainError as exc:
        _fail_input(str(exc))
    return ideal


def _header(name: str, ctx_opts: dict, ideal=None) -> list:
    opts = " ".join(f"{k}={v}" for k, v in ctx_opts.items())
    lines = [f"# vnumbers {name}  {opts}".rstrip()]
    if ideal is not None:
        lines.append(f"# ring: {', '.join(ideal.ctx.var_names)}")
        lines.append(f"# I = {ideal}")
    return lines


def _emit(fmt: str, lines: list, payload: dict):
    if fmt == "machine":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo("\n".join(lines))


def _opts(**kw):
    return {k.replace("_", "-"): v for k, v in kw.items()}


input_option = click.option(
    "-i", "--input", "input_path", required=True, metavar="PATH",
    help="Ideal description file (text or JSON); '-' reads standard input.",
)
format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "machine"]), default="text", show_default=True,
)
max_power_option = click.option("--max-power", type=click.IntRange(min=1), default=asym.DEFAULT_K_MAX, show_default=True)
min_run_option = click.option("--min-run", type=click.IntRange(min=2), default=asym.DEFAULT_MIN_RUN, show_default=True)
window_option = click.option("--window", type=click.IntRange(min=1), default=asym.DEFAULT_WINDOW, show_default=True)


class _Group(click.Group):
    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except _Abort as exc:
            ctx.exit(exc.code)
        except (InputError, DomainError) as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(EXIT_INPUT)


@click.group(cls=_Group)
def main():
    """v-numbers and v-functions of monomial ideals."""


@main.command()
@input_option
@max_power_option
@window_option
@format_option
def ass(input_path, max_power, window, fmt):
    """Associated primes of I and of its powers."""
    ideal = _load(input_path)
    ctx = ideal.ctx
    if window > max_power:
        _fail_input("--window may not exceed --max-power")
    primes = associated_primes(ideal)
    top = max_primes(ideal, primes)
    prof = ass_profile(ideal, max_power, window)

    def names(ps):
        return [prime_label(P, ctx) for P in sorted_primes(ps)]

    lines = _header("ass", _opts(max_power=max_power, window=window), ideal)
    lines.append("Ass(I) = {" + ", ".join(names(primes)) + "}")
    lines.append("Max(I) = {" + ", ".join(names(top)) + "}")
    for k, s in enumerate(prof.per_power, start=1):
        lines.append(f"Ass(I^{k}) = {{" + ", ".join(names(s)) + "}")
    status = "confirmed" if prof.confirmed else "not confirmed"
    lines.append(f"stable from k = {prof.onset} ({status}, window {window})")
    _emit(fmt, lines, {
        "ideal": str(ideal),
        "ass": names(primes),
        "max": names(top),
        "per_power": [names(s) for s in prof.per_power],
        "onset": prof.onset,
        "confirmed": prof.confirmed,
    })
    sys.exit(EXIT_OK if prof.confirmed else EXIT_INCONCLUSIVE)


@main.command("v")
@input_option
@format_option
def v_cmd(input_path, fmt):
    """The v-number of I."""
    ideal = _load(input_path)
    vals = v_all(ideal)
    value = min(x.v for x in vals.values())
    lines = _header("v", {}, ideal)
    lines.append(str(value))
    _emit(fmt, lines, {"ideal": str(ideal), "v": value})


@main.command()
@input_option
@click.option("--prime", "prime_names", metavar="VARS", help="Comma-separated variables, e.g. 'x,y'. Default: every associated prime.")
@format_option
def vp(input_path, prime_names, fmt):
    """v_P(I) with the degree range of (I : P)/I and a witness."""
    ideal = _load(input_path)
    ctx = ideal.ctx
    ass_set = associated_primes(ideal)
    if prime_names:
        P = MonomialPrime.from_names(ctx, [s.strip() for s in prime_names.split(",")])
        primes = [P]
    else:
        primes = sorted_primes(ass_set)
    lines = _header("vp", {}, ideal)
    payload = {"ideal": str(ideal), "primes": []}
    for P in primes:
        val = v_p(ideal, P, ass_set)
        mod = module_min_gens(ideal, P)
        label = prime_label(P, ctx)
        lines.append(
            f"v_{label} = {val.v}  alpha_mod = {val.alpha_mod}  omega_mod = {val.omega_mod}"
            f"  witness = {format_monomial(val.witness, ctx)}"
        )
        lines.append(f"  (I:P)/I generators: {monomials_text(mod.gens, ctx)}")
        lines.append(f"  witnesses: {monomials_text(mod.witnesses, ctx)}")
        payload["primes"].append({
            "prime": label, "v": val.v, "alpha_mod": val.alpha_mod, "omega_mod": val.omega_mod,
            "witness": format_monomial(val.witness, ctx),
            "module_gens": [format_monomial(g, ctx) for g in mod.gens],
            "witnesses": [format_monomial(g, ctx) for g in mod.witnesses],
        })
    _emit(fmt, lines, payload)


@main.command()
@input_option
@max_power_option
@window_option
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, writable=True), help="Also write the table as CSV.")
@format_option
def vfun(input_path, max_power, window, csv_path, fmt):
    """The v-function k -> v(I^k) with per-prime columns."""
    ideal = _load(input_path)
    table = asym.v_function(ideal, max_power, window)
    if csv_path:
        Path(csv_path).write_text(table_to_csv(table, ideal.ctx))
    lines = _header("vfun", _opts(max_power=max_power, window=window), ideal)
    lines.append(f"alpha(I) = {table.alpha_I}, omega(I) = {table.omega_I}")
    lines.extend(table_text(table, ideal.ctx))
    _emit(fmt, lines, table_dict(table, ideal.ctx))


@main.command()
@input_option
@max_power_option
@min_run_option
@window_option
@format_option
def verify(input_path, max_power, min_run, window, fmt):
    """Check every asymptotic law on I, I^2, ..., I^max_power."""
    ideal = _load(input_path)
    if max_power < 3:
        _fail_input("verify needs --max-power >= 3")
    if window > max_power:
        _fail_input("--window may not exceed --max-power")
    report = asym.verify_laws(ideal, max_power, min_run, window)
    lines = _header("verify", _opts(max_power=max_power, min_run=min_run, window=window), ideal)
    lines.extend(report_text(report, ideal.ctx))
    _emit(fmt, lines, report_dict(report, ideal.ctx))
    sys.exit({asym.PASS: EXIT_OK, asym.FAIL: EXIT_FAILED, asym.INCONCLUSIVE: EXIT_INCONCLUSIVE}[report.status])


@main.command()
@input_option
@max_power_option
@format_option
def twovar(input_path, max_power, fmt):
    """Closed-form values for an ideal of K[x, y], diffed against the engine."""
    ideal = _load(input_path)
    if ideal.ctx.n != 2:
        _fail_input("twovar needs a ring in exactly two variables")
    ctx = ideal.ctx
    J = from_ideal(ideal)
    lines = _header("twovar", _opts(max_power=max_power), ideal)
    lines.append(f"a = {list(J.a)}, b = {list(J.b)}")
    checks = []

    def check(what, formula, engine):
        checks.append({"check": what, "formula": formula, "engine": engine, "match": formula == engine})

    engine_ass = associated_primes(ideal)
    check("Ass(I)", sorted(prime_label(P, ctx) for P in ass_closed_form(J)),
          sorted(prime_label(P, ctx) for P in engine_ass))
    vals = v_all(ideal, engine_ass)
    check("v(I)", v_closed_form(J), min(x.v for x in vals.values()))
    if J.m > 1:
        check(f"v_{prime_label(M_XY, ctx)}(I)", v_m_closed_form(J), vals[M_XY].v)
    for k, power in enumerate(iter_powers(ideal, max_power), start=1):
        formulas = v_power_closed_forms(J, k)
        if not formulas:
            continue
        pvals = v_all(power, engine_ass)
        for P, value in sorted(formulas.items(), key=lambda kv: kv[0].sort_key()):
            check(f"v_{prime_label(P, ctx)}(I^{k})", value, pvals[P].v if P in pvals else None)
    width = max(len(c["check"]) for c in checks)
    for c in checks:
        mark = "ok" if c["match"] else "MISMATCH"
        lines.append(f"{c['check'].ljust(width)}  formula={c['formula']}  engine={c['engine']}  {mark}")
    bad = sum(not c["match"] for c in checks)
    lines.append(f"{len(checks)} checks, {bad} mismatches")
    _emit(fmt, lines, {"ideal": str(ideal), "a": list(J.a), "b": list(J.b), "checks": checks, "mismatches": bad})
    sys.exit(EXIT_FAILED if bad else EXIT_OK)


@main.command()
@click.option("--slope", type=int, required=True)
@click.option("--intercept", type=int, required=True)
@max_power_option
@format_option
def family(slope, intercept, max_power, fmt):
    """Build the ideal whose v-function is slope*k + intercept and confirm it."""
    J = family_ideal(slope, intercept)
    ideal = J.to_ideal(RingContext(("x", "y")))
    lines = _header("family", _opts(slope=slope, intercept=intercept, max_power=max_power), ideal)
    rows = []
    for k, power in enumerate(iter_powers(ideal, max_power), start=1):
        value = min(x.v for x in v_all(power).values())
        gens_ok = sorted(power.gens) == sorted(family_power_gens(slope, intercept, k))
        expected = slope * k + intercept
        rows.append({"k": k, "v": value, "expected": expected, "gens_match": gens_ok,
                     "match": gens_ok and value == expected})
        lines.append(
            f"k={k:<3} v(I^k)={value:<6} slope*k+intercept={expected:<6} "
            f"G(I^k) {'matches' if gens_ok else 'DIFFERS FROM'} formula"
        )
    bad = sum(not r["match"] for r in rows)
    lines.append(f"{len(rows)} powers, {bad} mismatches")
    _emit(fmt, lines, {"ideal": str(ideal), "slope": slope, "intercept": intercept, "rows": rows, "mismatches": bad})
    sys.exit(EXIT_FAILED if bad else EXIT_OK)


if __name__ == "__main__":
    main()
