"""Acceptance criteria 1-7.

Each criterion is a plain function returning ``(passed, message)`` so the
module also runs as a script (``python tests/test_acceptance.py``). Under
pytest every criterion records its line into ``conftest.ACCEPTANCE`` and the
summary prints one PASS/FAIL line per criterion.
"""

import random
import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import conftest  # noqa: E402
from conftest import XY, random_ideal  # noqa: E402
from oracles import exhaustive_witness_degrees  # noqa: E402
from vnumbers import asymptotics as asym  # noqa: E402
from vnumbers.ass_primes import associated_primes, associated_primes_exhaustive  # noqa: E402
from vnumbers.asymptotics import fit_eventual_linear, verify_laws  # noqa: E402
from vnumbers.ideal import MonomialPrime, alpha_omega, iter_powers, power  # noqa: E402
from vnumbers.twovar import (  # noqa: E402
    M_XY,
    P_X,
    StaircaseIdeal,
    ass_closed_form,
    family_ideal,
    family_power_gens,
    v_closed_form,
    v_m_closed_form,
    v_power_closed_forms,
)
from vnumbers.vnumber import v, v_all, v_p, v_p_bruteforce  # noqa: E402

SEED = 20240611
K_MAX = 10
N_STAIRCASE = 240
N_RANDOM = 60

# every confirmed fit of v(I^k) seen by criteria 2-4: (label, fit, alpha(I))
FITS = []


def _record_fit(label, values, I, min_run=asym.DEFAULT_MIN_RUN):
    fit = fit_eventual_linear(values, min_run)
    if fit is not None:
        FITS.append((label, fit, alpha_omega(I)[0]))


@lru_cache(maxsize=None)
def staircase_sample():
    rng = random.Random(SEED)
    sample = []
    while len(sample) < N_STAIRCASE:
        m = rng.randint(1, 6)
        a = sorted(rng.sample(range(13), m), reverse=True)
        b = sorted(rng.sample(range(13), m))
        if m == 1 and a[0] == b[0] == 0:
            continue
        sample.append(StaircaseIdeal(tuple(a), tuple(b)))
    return tuple(sample)


@lru_cache(maxsize=None)
def staircase_runs():
    """(J, Ass(I^k) for k=1..K_MAX, v(I^k) for k=1..K_MAX) per staircase ideal."""
    runs = []
    for J in staircase_sample():
        ass, values = [], []
        for Ik in iter_powers(J.to_ideal(), K_MAX):
            ass.append(associated_primes(Ik))
            values.append(min(x.v for x in v_all(Ik, ass[-1]).values()))
        runs.append((J, tuple(ass), tuple(values)))
    return tuple(runs)


@lru_cache(maxsize=None)
def random_sample():
    rng = random.Random(SEED + 1)
    return tuple(random_ideal(rng, rng.choice((2, 3, 3, 3)), 6) for _ in range(N_RANDOM))


@lru_cache(maxsize=None)
def random_reports():
    return tuple(verify_laws(I, K_MAX) for I in random_sample())


def criterion_1():
    I = StaircaseIdeal((5, 4, 2), (0, 3, 4)).to_ideal()
    report = verify_laws(I, 8)
    column = report.table.column(P_X)
    problems = []
    if column != [6 * k - 1 for k in range(1, 9)]:
        problems.append(f"v_(x)(I^k) = {column}")
    if report.v_fit is None or report.v_fit.slope != 5 or report.alpha != 5:
        problems.append(f"v fit {report.v_fit}, alpha {report.alpha}")
    px_fit = report.prime_fits.get(P_X)
    if px_fit is None or px_fit.slope != 6:
        problems.append(f"v_(x) fit {px_fit}")
    _record_fit("worked example", report.table.v_values(), I)
    msg = "v_(x)(I^k) = 6k-1 for k=1..8; v slope 5 = alpha; v_(x) slope 6"
    return not problems, "; ".join(problems) or msg


def criterion_2():
    bad = []
    for a in range(1, 6):
        for b in range(-1, 5):
            I = family_ideal(a, b).to_ideal()
            values = []
            for k, Ik in enumerate(iter_powers(I, K_MAX), start=1):
                if list(Ik.gens) != family_power_gens(a, b, k):
                    bad.append(f"G(I^{k}) for ({a},{b})")
                values.append(v(Ik))
            if values != [a * k + b for k in range(1, K_MAX + 1)]:
                bad.append(f"v(I^k) for ({a},{b}): {values}")
            _record_fit(f"family({a},{b})", values, I)
    return not bad, f"{len(bad)} mismatches over 30 family ideals, k=1..{K_MAX}" + (f": {bad[:3]}" if bad else "")


def criterion_3():
    bad = []
    for J in staircase_sample():
        I = J.to_ideal()
        ass = associated_primes(I)
        if ass != ass_closed_form(J):
            bad.append((J, "Ass"))
        if v(I) != v_closed_form(J):
            bad.append((J, "v"))
        if J.m > 1 and v_p(I, M_XY, ass).v != v_m_closed_form(J):
            bad.append((J, "v_m"))
        for k, Ik in enumerate(iter_powers(I, 5), start=1):
            vals = v_all(Ik)
            for P, value in v_power_closed_forms(J, k).items():
                if P not in vals or vals[P].v != value:
                    bad.append((J, f"v_{P.vars}(I^{k})"))
    # five powers can end inside a transient (e.g. (x^6 y^3, y^8) runs along
    # 9k - 1 until k = 5), so the fits for criterion 7 use k = 1..K_MAX
    for J, _, values in staircase_runs():
        _record_fit(f"staircase {J.a},{J.b}", values, J.to_ideal())
    n = len(staircase_sample())
    return not bad, f"{n} staircase ideals, {len(bad)} mismatches" + (f": {bad[:3]}" if bad else "")


CRITERION_4_LAWS = ("module_bounds", "sandwich", "monotone", "power_quotient", "colon_factorization")


def criterion_4():
    failed, inconclusive = [], []
    for I, report in zip(random_sample(), random_reports()):
        statuses = {name: report.law(name).status for name in CRITERION_4_LAWS}
        if asym.FAIL in statuses.values():
            failed.append((str(I), statuses))
        elif asym.INCONCLUSIVE in statuses.values():
            inconclusive.append(str(I))
        if report.v_fit is not None:
            FITS.append((f"random {I}", report.v_fit, report.alpha))
    n = len(random_sample())
    share = len(inconclusive) / n
    ok = not failed and share < 0.10
    msg = f"{n} ideals, k_max={K_MAX}: {len(failed)} failed, {len(inconclusive)} inconclusive ({share:.0%})"
    if inconclusive:
        msg += f" e.g. {inconclusive[0]}"
    if failed:
        msg += f"; first failure {failed[0]}"
    return ok, msg


def criterion_5():
    bad = []
    checked = 0
    for I in random_sample():
        for J in (I, power(I, 2)):
            ass = associated_primes(J)
            n = J.ctx.n
            naive = exhaustive_witness_degrees(J.gens, n)
            if ass != associated_primes_exhaustive(J) or ass != {MonomialPrime(P) for P in naive}:
                bad.append((str(J), "Ass"))
                continue
            for P in ass:
                checked += 1
                value = v_p(J, P, ass).v
                if value != v_p_bruteforce(J, P) or value != naive[P.vars]:
                    bad.append((str(J), P.vars))
    return not bad, f"{checked} (ideal, prime) pairs on I and I^2, {len(bad)} mismatches" + (f": {bad[:3]}" if bad else "")


def criterion_6():
    bad = [J for J, ass, _ in staircase_runs() if len(set(ass)) != 1]
    return not bad, f"Ass(I^k) constant for k=1..{K_MAX} on {len(staircase_sample()) - len(bad)}/{len(staircase_sample())} staircase ideals"


def criterion_7():
    bad = [(label, fit) for label, fit, alpha in FITS if fit.intercept < -1 or fit.slope != alpha]
    return not bad, f"{len(FITS)} confirmed fits from criteria 1-4, {len(bad)} with intercept < -1 or slope != alpha" + (
        f": {bad[:3]}" if bad else "")


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    if number == 7:
        # the fits come from criteria 1-4; run any that have not run yet
        for k in range(1, 5):
            if k not in conftest.ACCEPTANCE:
                conftest.ACCEPTANCE[k] = CRITERIA[k]()
    ok, message = CRITERIA[number]()
    conftest.ACCEPTANCE[number] = (ok, message)
    assert ok, message


if __name__ == "__main__":
    results = {k: CRITERIA[k]() for k in sorted(CRITERIA)}
    for k, (ok, message) in results.items():
        print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {message}")
    sys.exit(0 if all(ok for ok, _ in results.values()) else 1)
