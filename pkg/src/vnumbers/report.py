"""Serialisation of tables and law reports: CSV, text and JSON-ready dicts."""

from __future__ import annotations

import csv
import io
from typing import Dict, List

from .asymptotics import LawReport, LinearFit, PrimeEntry, VFunctionTable, VRow
from .errors import InputError
from .ideal import MonomialPrime, RingContext, format_monomial


def prime_label(P: MonomialPrime, ctx: RingContext) -> str:
    return P.name(ctx)


def _parse_prime_label(label: str, ctx: RingContext) -> MonomialPrime:
    if not (label.startswith("(") and label.endswith(")")):
        raise InputError(f"bad prime label {label!r}")
    return MonomialPrime.from_names(ctx, [s.strip() for s in label[1:-1].split(",")])


def _cell(x) -> str:
    return "" if x is None else str(x)


def table_to_csv(table: VFunctionTable, ctx: RingContext) -> str:
    """One row per k. Empty cells mark v_P for powers where P is not associated."""
    header = ["k", "v"]
    for P in table.primes:
        label = prime_label(P, ctx)
        header += [f"v_{label}", f"alpha_mod_{label}", f"omega_mod_{label}"]
    header += ["alpha_I", "omega_I"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in table.rows:
        cells = [row.k, row.v]
        for P in table.primes:
            e = row.primes[P]
            cells += [_cell(e.v), _cell(e.alpha_mod), _cell(e.omega_mod)]
        cells += [table.alpha_I, table.omega_I]
        writer.writerow(cells)
    return buf.getvalue()


def table_from_csv(text: str, ctx: RingContext) -> VFunctionTable:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise InputError("empty CSV") from None
    if header[:2] != ["k", "v"] or header[-2:] != ["alpha_I", "omega_I"]:
        raise InputError(f"unexpected CSV header {header}")
    middle = header[2:-2]
    if len(middle) % 3:
        raise InputError("per-prime columns must come in triples")
    primes = []
    for i in range(0, len(middle), 3):
        label = middle[i][len("v_"):]
        if middle[i:i + 3] != [f"v_{label}", f"alpha_mod_{label}", f"omega_mod_{label}"]:
            raise InputError(f"malformed prime columns {middle[i:i + 3]}")
        primes.append(_parse_prime_label(label, ctx))

    def num(s):
        return None if s == "" else int(s)

    rows = []
    alpha = omega = None
    for lineno, cells in enumerate(reader, start=2):
        if len(cells) != len(header):
            raise InputError(f"row has {len(cells)} cells, expected {len(header)}", lineno, 1)
        entries = {}
        for j, P in enumerate(primes):
            v, a, w = (num(c) for c in cells[2 + 3 * j: 5 + 3 * j])
            entries[P] = PrimeEntry(v, a, w)
        rows.append(VRow(int(cells[0]), int(cells[1]), entries))
        alpha, omega = int(cells[-2]), int(cells[-1])
    if not rows:
        raise InputError("CSV has no data rows")
    return VFunctionTable(len(rows), tuple(primes), tuple(rows), alpha, omega)


def fit_text(fit: LinearFit) -> str:
    sign = "+" if fit.intercept >= 0 else "-"
    return f"{fit.slope}*k {sign} {abs(fit.intercept)} for k >= {fit.onset} (run {fit.run_length})"


def fit_dict(fit):
    if fit is None:
        return None
    return {"slope": fit.slope, "intercept": fit.intercept, "onset": fit.onset, "run_length": fit.run_length}


def table_text(table: VFunctionTable, ctx: RingContext) -> List[str]:
    header = ["k", "v"]
    for P in table.primes:
        label = prime_label(P, ctx)
        header += [f"v_{label}", f"[alpha,omega]_{label}"]
    lines = []
    body = []
    for row in table.rows:
        cells = [str(row.k), str(row.v)]
        for P in table.primes:
            e = row.primes[P]
            cells.append("-" if e.v is None else str(e.v))
            cells.append("-" if e.alpha_mod is None else f"[{e.alpha_mod},{e.omega_mod}]")
        body.append(cells)
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    for r in [header] + body:
        lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
    return lines


def table_dict(table: VFunctionTable, ctx: RingContext) -> Dict:
    return {
        "k_max": table.k_max,
        "alpha_I": table.alpha_I,
        "omega_I": table.omega_I,
        "primes": [prime_label(P, ctx) for P in table.primes],
        "rows": [
            {
                "k": row.k,
                "v": row.v,
                "primes": {
                    prime_label(P, ctx): {
                        "v": e.v, "alpha_mod": e.alpha_mod, "omega_mod": e.omega_mod,
                    }
                    for P, e in ((P, row.primes[P]) for P in table.primes)
                },
            }
            for row in table.rows
        ],
    }


def report_text(report: LawReport, ctx: RingContext) -> List[str]:
    lines = [f"alpha(I) = {report.alpha}, omega(I) = {report.omega}"]
    prof = report.profile
    lines.append(
        "Ass stable set: {" + ", ".join(prime_label(P, ctx) for P in prof.stable_primes()) + "}"
        + f" from k = {prof.onset}" + ("" if prof.confirmed else " (not confirmed)")
    )
    lines.append("v(I^k) fit: " + (fit_text(report.v_fit) if report.v_fit else "none"))
    for P in report.table.primes:
        fit = report.prime_fits.get(P)
        lines.append(f"v_{prime_label(P, ctx)}(I^k) fit: " + (fit_text(fit) if fit else "none"))
    lines.append("")
    lines.extend(table_text(report.table, ctx))
    lines.append("")
    width = max(len(law.name) for law in report.laws)
    for law in report.laws:
        rng = f"k={law.k_range[0]}..{law.k_range[1]}" if law.k_range else "k=-"
        lines.append(f"{law.name.ljust(width)}  {law.status.upper():12}  {rng:8}  {law.detail}".rstrip())
    lines.append("")
    lines.append(f"overall: {report.status.upper()}")
    return lines


def report_dict(report: LawReport, ctx: RingContext) -> Dict:
    return {
        "alpha_I": report.alpha,
        "omega_I": report.omega,
        "ass_profile": {
            "per_power": [
                [prime_label(P, ctx) for P in sorted(s, key=MonomialPrime.sort_key)]
                for s in report.profile.per_power
            ],
            "onset": report.profile.onset,
            "confirmed": report.profile.confirmed,
        },
        "v_fit": fit_dict(report.v_fit),
        "prime_fits": {prime_label(P, ctx): fit_dict(f) for P, f in report.prime_fits.items()},
        "table": table_dict(report.table, ctx),
        "laws": [
            {
                "name": law.name,
                "status": law.status,
                "k_range": list(law.k_range) if law.k_range else None,
                "onset": law.onset,
                "witness_k": law.witness_k,
                "detail": law.detail,
            }
            for law in report.laws
        ],
        "status": report.status,
    }


def monomials_text(gens, ctx: RingContext) -> str:
    return "{" + ", ".join(format_monomial(g, ctx) for g in gens) + "}"
