"""v-functions k -> v(I^k), their eventual linear form, and the asymptotic laws.

Every law here is an exact integer statement. Laws that hold only for
k >> 0 are checked on a finite window: the report gives the first k from
which the law held through the end of the window. A law that is still
broken at the last k is reported inconclusive, never failed, since more
powers may fix it. The same holds for the slope and intercept of the fitted
line. Only the module bounds, which hold at every k, can fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .ass_primes import AssProfile, max_primes, profile_from_sets, associated_primes
from .errors import InputError
from .ideal import (
    MonomialIdeal,
    MonomialPrime,
    alpha_omega,
    colon_by_ideal,
    colon_by_prime,
    iter_powers,
    product,
    sorted_primes,
)
from .vnumber import module_min_gens, v_all

DEFAULT_K_MAX = 12
DEFAULT_MIN_RUN = 4
DEFAULT_WINDOW = 3

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class PrimeEntry:
    """v_P(I^k) and the degree range of (I^k : P)/I^k.

    ``v`` is None when P is not associated to I^k; the module bounds are
    None when the module is zero.
    """

    v: Optional[int]
    alpha_mod: Optional[int]
    omega_mod: Optional[int]


@dataclass(frozen=True)
class VRow:
    k: int
    v: int
    primes: Dict[MonomialPrime, PrimeEntry]


@dataclass(frozen=True)
class VFunctionTable:
    k_max: int
    primes: Tuple[MonomialPrime, ...]
    rows: Tuple[VRow, ...]
    alpha_I: int
    omega_I: int

    def v_values(self) -> List[int]:
        return [row.v for row in self.rows]

    def column(self, P: MonomialPrime) -> List[Optional[int]]:
        return [row.primes[P].v for row in self.rows]


@dataclass(frozen=True)
class LinearFit:
    slope: int
    intercept: int
    onset: int
    run_length: int

    def __call__(self, k: int) -> int:
        return self.slope * k + self.intercept


@dataclass(frozen=True)
class LawResult:
    name: str
    status: str
    k_range: Optional[Tuple[int, int]]
    onset: Optional[int] = None
    witness_k: Optional[int] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass(frozen=True)
class LawReport:
    k_max: int
    min_run: int
    window: int
    alpha: int
    omega: int
    profile: AssProfile
    table: VFunctionTable
    v_fit: Optional[LinearFit]
    prime_fits: Dict[MonomialPrime, Optional[LinearFit]]
    laws: Tuple[LawResult, ...] = field(default=())

    def law(self, name: str) -> LawResult:
        for result in self.laws:
            if result.name == name:
                return result
        raise KeyError(name)

    @property
    def status(self) -> str:
        statuses = {law.status for law in self.laws}
        if FAIL in statuses:
            return FAIL
        if INCONCLUSIVE in statuses:
            return INCONCLUSIVE
        return PASS


LAW_NAMES = (
    "monotone",
    "sandwich",
    "power_quotient",
    "colon_factorization",
    "module_bounds",
    "slope_equals_alpha",
    "intercept_ge_minus_one",
    "ass_stable",
)


def fit_eventual_linear(
    values: Sequence[int], min_run: int = DEFAULT_MIN_RUN, start: int = 1
) -> Optional[LinearFit]:
    """Fit value(k) = slope*k + intercept on the longest arithmetic suffix.

    ``values[0]`` is the value at k = ``start``. Returns None when that
    suffix is shorter than ``min_run``.
    """
    if min_run < 2:
        raise InputError(f"min_run must be at least 2, got {min_run}")
    values = list(values)
    if len(values) < 2:
        return None
    step = values[-1] - values[-2]
    first = len(values) - 2
    while first > 0 and values[first] - values[first - 1] == step:
        first -= 1
    run = len(values) - first
    if run < min_run:
        return None
    onset = start + first
    return LinearFit(step, values[first] - step * onset, onset, run)


def _prime_entry(J: MonomialIdeal, P: MonomialPrime, vals) -> PrimeEntry:
    if P in vals:
        val = vals[P]
        return PrimeEntry(val.v, val.alpha_mod, val.omega_mod)
    mod = module_min_gens(J, P)
    return PrimeEntry(None, mod.alpha, mod.omega)


class _Run:
    """Powers, Ass sets and v-values of one ideal, computed once and shared."""

    def __init__(self, I: MonomialIdeal, k_max: int, window: int, extra_power: bool = False):
        if not isinstance(k_max, int) or k_max < 1:
            raise InputError(f"k_max must be a positive integer, got {k_max!r}")
        I.require_proper()
        self.I = I
        self.k_max = k_max
        self.powers = list(iter_powers(I, k_max + (1 if extra_power else 0)))
        self.ass = [associated_primes(J) for J in self.powers[:k_max]]
        self.profile = profile_from_sets(self.ass, min(window, k_max))
        self.vals = [v_all(J, ass) for J, ass in zip(self.powers, self.ass)]

    def power(self, k: int) -> MonomialIdeal:
        return self.powers[k - 1]

    def table(self) -> VFunctionTable:
        primes = tuple(self.profile.stable_primes())
        rows = []
        for k in range(1, self.k_max + 1):
            J, vals = self.power(k), self.vals[k - 1]
            entries = {P: _prime_entry(J, P, vals) for P in primes}
            rows.append(VRow(k, min(x.v for x in vals.values()), entries))
        alpha, omega = alpha_omega(self.I)
        return VFunctionTable(self.k_max, primes, tuple(rows), alpha, omega)


def v_function(I: MonomialIdeal, k_max: int = DEFAULT_K_MAX, window: int = DEFAULT_WINDOW) -> VFunctionTable:
    return _Run(I, k_max, window).table()


def _eventual(name: str, ks: Sequence[int], holds: Callable[[int], bool], what: str) -> LawResult:
    """Judge a k >> 0 law on the checked range ``ks``."""
    if not ks:
        return LawResult(name, INCONCLUSIVE, None, detail="no k in the stable range to check")
    k_range = (ks[0], ks[-1])
    results = [(k, holds(k)) for k in ks]
    if not results[-1][1]:
        return LawResult(
            name, INCONCLUSIVE, k_range, witness_k=results[-1][0],
            detail=f"{what} still fails at k={results[-1][0]}",
        )
    onset = ks[-1]
    for k, ok in reversed(results):
        if not ok:
            break
        onset = k
    broken = [k for k, ok in results if not ok]
    detail = f"{what} holds for k={onset}..{ks[-1]}"
    if broken:
        detail += f"; fails at k={broken}"
    return LawResult(name, PASS, k_range, onset=onset, detail=detail)


def verify_laws(
    I: MonomialIdeal,
    k_max: int = DEFAULT_K_MAX,
    min_run: int = DEFAULT_MIN_RUN,
    window: int = DEFAULT_WINDOW,
) -> LawReport:
    if not isinstance(k_max, int) or k_max < 3:
        raise InputError(f"verify_laws needs k_max >= 3, got {k_max!r}")
    if min_run < 2:
        raise InputError(f"min_run must be at least 2, got {min_run}")
    run = _Run(I, k_max, window, extra_power=True)
    table = run.table()
    profile = run.profile
    alpha, omega = table.alpha_I, table.omega_I
    stable = table.primes
    rows = table.rows

    def vp(k: int, P: MonomialPrime) -> Optional[int]:
        return rows[k - 1].primes[P].v

    stable_ks = list(range(max(2, profile.onset + 1), k_max + 1)) if profile.confirmed else []
    laws = []

    def monotone(k):
        if rows[k - 1].v <= rows[k - 2].v:
            return False
        return all(vp(k, P) > vp(k - 1, P) for P in stable)

    laws.append(_eventual("monotone", stable_ks, monotone, "strict increase of v and every v_P"))

    def sandwich(k):
        pairs = [(rows[k - 2].v, rows[k - 1].v)] + [(vp(k - 1, P), vp(k, P)) for P in stable]
        return all(prev + alpha <= cur <= prev + omega for prev, cur in pairs)

    laws.append(_eventual("sandwich", stable_ks, sandwich, "v(k-1)+alpha <= v(k) <= v(k-1)+omega"))

    laws.append(_eventual(
        "power_quotient", list(range(1, k_max + 1)),
        lambda k: colon_by_ideal(run.power(k + 1), I) == run.power(k),
        "(I^(k+1) : I) = I^k",
    ))

    def colon_factorization(k):
        return all(
            colon_by_prime(run.power(k), P) == product(I, colon_by_prime(run.power(k - 1), P))
            for P in stable
        )

    cf_ks = list(range(2, k_max + 1)) if profile.confirmed else []
    laws.append(_eventual("colon_factorization", cf_ks, colon_factorization, "(I^k : P) = I (I^(k-1) : P)"))

    laws.append(_module_bounds(run, k_max))

    v_fit = fit_eventual_linear(table.v_values(), min_run)
    prime_fits = {}
    for P in stable:
        col = table.column(P)
        first = next((i for i, x in enumerate(col) if x is not None), None)
        tail = col[first:] if first is not None else []
        if first is None or None in tail:
            prime_fits[P] = None
        else:
            prime_fits[P] = fit_eventual_linear(tail, min_run, start=first + 1)

    if v_fit is None:
        laws.append(LawResult("slope_equals_alpha", INCONCLUSIVE, (1, k_max), detail="no confirmed fit of v(I^k)"))
        laws.append(LawResult("intercept_ge_minus_one", INCONCLUSIVE, (1, k_max), detail="no confirmed fit of v(I^k)"))
    else:
        # both statements concern the eventual line, so a window whose fit
        # disagrees may simply end before the last change of slope
        fit_range = (v_fit.onset, k_max)
        ok = v_fit.slope == alpha
        laws.append(LawResult(
            "slope_equals_alpha", PASS if ok else INCONCLUSIVE, fit_range, onset=v_fit.onset,
            witness_k=None if ok else k_max,
            detail=f"slope {v_fit.slope}, alpha(I) = {alpha}" + ("" if ok else "; more powers needed"),
        ))
        ok = v_fit.intercept >= -1
        laws.append(LawResult(
            "intercept_ge_minus_one", PASS if ok else INCONCLUSIVE, fit_range, onset=v_fit.onset,
            witness_k=None if ok else k_max,
            detail=f"intercept {v_fit.intercept}" + ("" if ok else "; more powers needed"),
        ))

    laws.append(LawResult(
        "ass_stable", PASS if profile.confirmed else INCONCLUSIVE, (1, k_max),
        onset=profile.onset,
        detail=f"Ass(I^k) constant for k={profile.onset}..{k_max}, window {profile.window}",
    ))

    return LawReport(
        k_max, min_run, window, alpha, omega, profile, table, v_fit, prime_fits, tuple(laws)
    )


def _module_bounds(run: _Run, k_max: int) -> LawResult:
    """alpha_mod <= v_P <= omega_mod for every associated prime of every power,
    with equality on the left for primes maximal in Ass(I^k)."""
    for k in range(1, k_max + 1):
        ass = run.ass[k - 1]
        top = max_primes(run.power(k), ass)
        for P, val in run.vals[k - 1].items():
            if not val.alpha_mod <= val.v <= val.omega_mod:
                return LawResult(
                    "module_bounds", FAIL, (1, k_max), witness_k=k,
                    detail=f"v_P = {val.v} outside [{val.alpha_mod}, {val.omega_mod}] for P = {P.vars}",
                )
            if P in top and val.v != val.alpha_mod:
                return LawResult(
                    "module_bounds", FAIL, (1, k_max), witness_k=k,
                    detail=f"P = {P.vars} is maximal but v_P = {val.v} != alpha_mod = {val.alpha_mod}",
                )
    return LawResult("module_bounds", PASS, (1, k_max), onset=1, detail="all k, all associated primes")
