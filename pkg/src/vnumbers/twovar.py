"""Closed forms for monomial ideals of K[x, y].

A monomial ideal of K[x, y] is determined by its staircase: generators
x^a_i y^b_i with a_1 > ... > a_m >= 0 and 0 <= b_1 < ... < b_m. Everything
below is a formula in (a, b) and serves as an independent check on the
general engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from .errors import ConsistencyError, DomainError, InputError
from .ideal import Monomial, MonomialIdeal, MonomialPrime, RingContext

XY = RingContext(("x", "y"))
P_X = MonomialPrime((0,))
P_Y = MonomialPrime((1,))
M_XY = MonomialPrime((0, 1))


@dataclass(frozen=True)
class StaircaseIdeal:
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    def __post_init__(self):
        a, b = tuple(self.a), tuple(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not a or len(a) != len(b):
            raise InputError(f"staircase needs two nonempty sequences of equal length, got {a}, {b}")
        if any(not isinstance(e, int) or e < 0 for e in a + b):
            raise InputError(f"staircase exponents must be non-negative integers: {a}, {b}")
        if any(x <= y for x, y in zip(a, a[1:])):
            raise InputError(f"a must be strictly decreasing: {a}")
        if any(x >= y for x, y in zip(b, b[1:])):
            raise InputError(f"b must be strictly increasing: {b}")

    @property
    def m(self) -> int:
        return len(self.a)

    def gens(self) -> List[Monomial]:
        return list(zip(self.a, self.b))

    def to_ideal(self, ctx: RingContext = XY) -> MonomialIdeal:
        if ctx.n != 2:
            raise DomainError("staircase ideals live in two variables")
        return MonomialIdeal.from_gens(ctx, self.gens())


def from_ideal(I: MonomialIdeal) -> StaircaseIdeal:
    if I.ctx.n != 2:
        raise DomainError(f"expected a ring in two variables, got {I.ctx.n}")
    I.require_proper()
    gens = sorted(I.gens, key=lambda g: -g[0])
    try:
        return StaircaseIdeal(tuple(g[0] for g in gens), tuple(g[1] for g in gens))
    except InputError as exc:
        raise ConsistencyError(f"minimal generators do not form a staircase: {exc}") from None


def ass_closed_form(J: StaircaseIdeal) -> FrozenSet[MonomialPrime]:
    primes = set()
    if J.a[-1] > 0:
        primes.add(P_X)
    if J.b[0] > 0:
        primes.add(P_Y)
    if J.m > 1:
        primes.add(M_XY)
    return frozenset(primes)


def v_power_closed_forms(J: StaircaseIdeal, k: int) -> Dict[MonomialPrime, int]:
    """v_{p_x}(I^k) and v_{p_y}(I^k), for those of the two primes that are associated."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    out = {}
    if J.a[-1] > 0:
        out[P_X] = k * (J.a[-1] + J.b[-1]) - 1
    if J.b[0] > 0:
        out[P_Y] = k * (J.a[0] + J.b[0]) - 1
    return out


def _corner_terms(J: StaircaseIdeal) -> List[int]:
    return [J.a[j] + J.b[j + 1] - 2 for j in range(J.m - 1)]


def v_m_closed_form(J: StaircaseIdeal) -> int:
    if J.m == 1:
        raise DomainError("(x, y) is not associated to a principal ideal")
    return min(_corner_terms(J))


def v_closed_form(J: StaircaseIdeal) -> int:
    terms = _corner_terms(J)
    if J.b[0] != 0:
        terms.append(J.a[0] + J.b[0] - 1)
    if J.a[-1] != 0:
        terms.append(J.a[-1] + J.b[-1] - 1)
    if not terms:
        raise DomainError("the unit ideal has no v-number")
    return min(terms)


def family_ideal(slope: int, intercept: int) -> StaircaseIdeal:
    """The ideal (x^slope, x^(slope-1) y^(intercept+2)), whose v-function is
    exactly slope*k + intercept for every k >= 1."""
    if not isinstance(slope, int) or slope < 1:
        raise InputError(f"slope must be an integer >= 1, got {slope!r}")
    if not isinstance(intercept, int) or intercept < -1:
        raise InputError(f"intercept must be an integer >= -1, got {intercept!r}")
    return StaircaseIdeal((slope, slope - 1), (0, intercept + 2))


def family_power_gens(slope: int, intercept: int, k: int) -> List[Monomial]:
    """G(I^k) for the family ideal: x^(k*slope - i) y^(i*(intercept+2)), i = 0..k."""
    family_ideal(slope, intercept)
    if not isinstance(k, int) or k < 1:
        raise InputError(f"k must be an integer >= 1, got {k!r}")
    return [(k * slope - i, i * (intercept + 2)) for i in range(k + 1)]
