"""Monomials, monomial primes and monomial ideals.

A monomial is a plain tuple of non-negative ints (its exponent vector).
Ideals are immutable and always hold their minimal generating set G(I)
in canonical graded order, so ``==`` on two ideals is ideal equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence, Tuple

from . import kernels
from .errors import DomainError, ExponentOverflowError, InputError

Monomial = Tuple[int, ...]

# exponents are stored as C ints by the compiled kernels
EXP_MAX = 2**31 - 1

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class RingContext:
    """The variables x_1, ..., x_n of the polynomial ring."""

    var_names: Tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise InputError("a ring needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise InputError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise InputError(f"duplicate variable names in {names}")

    @property
    def n(self) -> int:
        return len(self.var_names)

    def index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise InputError(f"unknown variable {name!r}") from None

    def variable(self, i: int) -> Monomial:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def one(self) -> Monomial:
        return (0,) * self.n


def degree(u: Monomial) -> int:
    return sum(u)


def divides(g: Monomial, u: Monomial) -> bool:
    return all(a <= b for a, b in zip(g, u))


def lcm(u: Monomial, w: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, w))


def format_monomial(u: Monomial, ctx: RingContext) -> str:
    """Render ``u`` as ``x^4*y^3``; the constant monomial is ``1``."""
    parts = []
    for name, e in zip(ctx.var_names, u):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def check_monomial(ctx: RingContext, u: Sequence[int]) -> Monomial:
    u = tuple(u)
    if len(u) != ctx.n:
        raise InputError(f"exponent vector {u} has length {len(u)}, expected {ctx.n}")
    for e in u:
        if not isinstance(e, int) or isinstance(e, bool):
            raise InputError(f"exponent {e!r} is not an integer")
        if e < 0:
            raise InputError(f"negative exponent in {u}")
        if e > EXP_MAX:
            raise ExponentOverflowError(f"exponent {e} exceeds {EXP_MAX}")
    return u


@dataclass(frozen=True, order=True)
class MonomialPrime:
    """The prime ideal generated by the variables with the given indices."""

    vars: Tuple[int, ...]

    def __post_init__(self):
        vs = tuple(sorted(set(self.vars)))
        if not vs:
            raise InputError("a monomial prime needs at least one variable")
        if any(not isinstance(i, int) or i < 0 for i in vs):
            raise InputError(f"bad variable indices {self.vars}")
        object.__setattr__(self, "vars", vs)

    @classmethod
    def from_names(cls, ctx: RingContext, names: Iterable[str]) -> "MonomialPrime":
        return cls(tuple(ctx.index(name) for name in names))

    def sort_key(self):
        return (len(self.vars), self.vars)

    def contains_ideal(self, ideal: "MonomialIdeal") -> bool:
        """True iff every generator of ``ideal`` involves a variable of the prime."""
        return all(any(g[i] for i in self.vars) for g in ideal.gens)

    def name(self, ctx: RingContext) -> str:
        return "(" + ",".join(ctx.var_names[i] for i in self.vars) + ")"

    def ideal(self, ctx: RingContext) -> "MonomialIdeal":
        self._check(ctx)
        return MonomialIdeal(ctx, tuple(ctx.variable(i) for i in self.vars))

    def _check(self, ctx: RingContext) -> None:
        if self.vars[-1] >= ctx.n:
            raise InputError(f"prime {self.vars} uses variables outside the ring")


def sorted_primes(primes: Iterable[MonomialPrime]) -> list:
    return sorted(primes, key=MonomialPrime.sort_key)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators in canonical order.

    Build instances with :func:`minimize_generators` (or :meth:`from_gens`);
    the raw constructor trusts its input.
    """

    ctx: RingContext
    gens: Tuple[Monomial, ...]

    @classmethod
    def from_gens(cls, ctx: RingContext, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return minimize_generators(ctx, gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def require_proper(self) -> None:
        if self.is_zero:
            raise DomainError("operation undefined for the zero ideal")
        if self.is_unit:
            raise DomainError("operation undefined for the unit ideal")

    def lcm(self) -> Monomial:
        if not self.gens:
            return self.ctx.one()
        return reduce(lcm, self.gens)

    def __contains__(self, u) -> bool:
        return contains(self, u)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g, self.ctx) for g in self.gens) + ")"


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ctx != J.ctx:
        raise InputError("ideals live in different rings")


def minimize_generators(ctx: RingContext, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    checked = [check_monomial(ctx, g) for g in gens]
    return MonomialIdeal(ctx, tuple(kernels.minimize(checked)))


def zero_ideal(ctx: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, ())


def unit_ideal(ctx: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, (ctx.one(),))


def contains(I: MonomialIdeal, u: Sequence[int]) -> bool:
    return kernels.contains(I.gens, check_monomial(I.ctx, u))


def is_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True iff I ⊆ J."""
    _same_ring(I, J)
    return all(kernels.contains(J.gens, g) for g in I.gens)


def _max_exponents(gens) -> Monomial:
    return reduce(lcm, gens) if gens else ()


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    if I.gens and J.gens:
        top = max(a + b for a, b in zip(_max_exponents(I.gens), _max_exponents(J.gens)))
        if top > EXP_MAX:
            raise ExponentOverflowError(f"product exponent {top} exceeds {EXP_MAX}")
    return MonomialIdeal(I.ctx, tuple(kernels.product(I.gens, J.gens)))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k by iterated multiplication, minimizing after every step.

    ``power(I, 0)`` is the unit ideal.
    """
    if not isinstance(k, int) or k < 0:
        raise InputError(f"power exponent must be a non-negative integer, got {k!r}")
    if k == 0:
        return unit_ideal(I.ctx)
    if I.gens and max(_max_exponents(I.gens)) * k > EXP_MAX:
        raise ExponentOverflowError(f"exponents of I^{k} exceed {EXP_MAX}")
    result = I
    for _ in range(k - 1):
        result = product(result, I)
    return result


def iter_powers(I: MonomialIdeal, k_max: int) -> Iterator[MonomialIdeal]:
    """Yield I, I^2, ..., I^k_max, reusing each power for the next."""
    current = None
    for _ in range(k_max):
        current = I if current is None else product(current, I)
        yield current


def colon_by_monomial(I: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    u = check_monomial(I.ctx, u)
    return MonomialIdeal(I.ctx, tuple(kernels.colon_monomial(I.gens, u)))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ctx, tuple(kernels.intersect(I.gens, J.gens)))


def colon_by_prime(I: MonomialIdeal, P: MonomialPrime) -> MonomialIdeal:
    """(I : P), the intersection of (I : x_i) over the variables of P."""
    if not isinstance(P, MonomialPrime):
        raise InputError(f"expected a MonomialPrime, got {P!r}")
    P._check(I.ctx)
    parts = [colon_by_monomial(I, I.ctx.variable(i)) for i in P.vars]
    return reduce(intersect, parts)


def colon_by_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) as the intersection of (I : g) over the generators g of J."""
    _same_ring(I, J)
    if J.is_zero:
        return unit_ideal(I.ctx)
    return reduce(intersect, (colon_by_monomial(I, g) for g in J.gens))


def alpha_omega(I: MonomialIdeal) -> Tuple[int, int]:
    """Initial degree α(I) and top generator degree ω(I)."""
    I.require_proper()
    degs = [sum(g) for g in I.gens]
    return min(degs), max(degs)
