"""v-numbers of monomial ideals.

For P in Ass(I), v_P(I) is the least degree of a homogeneous f with
(I : f) = P, and v(I) is the minimum of v_P(I) over Ass(I). Both are read
off a minimal generating set of the module (I : P)/I: v_P(I) is the least
degree of a generator g with (I : g) = P.

Only monomial witnesses are examined. This loses nothing: (I : P)/I is
spanned by the classes of monomials in (I : P) outside I, so the monomials
G((I : P)) minus I form a homogeneous minimal generating set, and the rule
above applies to any such set. ``v_p_bruteforce`` checks the claim by
scanning every divisor of lcm(G(I)); larger monomials never help because
capping an exponent at the lcm leaves (I : u) unchanged and lowers deg u.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from . import kernels
from .ass_primes import associated_primes, max_primes
from .errors import ConsistencyError, DomainError
from .ideal import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    colon_by_monomial,
    colon_by_prime,
    sorted_primes,
)


@dataclass(frozen=True)
class ModuleGens:
    """Minimal monomial generators of (I : P)/I and the witnesses among them."""

    prime: MonomialPrime
    gens: Tuple[Monomial, ...]
    witnesses: Tuple[Monomial, ...]

    @property
    def alpha(self) -> Optional[int]:
        return min(map(sum, self.gens)) if self.gens else None

    @property
    def omega(self) -> Optional[int]:
        return max(map(sum, self.gens)) if self.gens else None


@dataclass(frozen=True)
class VValue:
    prime: MonomialPrime
    v: int
    alpha_mod: int
    omega_mod: int
    witness: Monomial


def is_witness(I: MonomialIdeal, g: Monomial, P: MonomialPrime) -> bool:
    """True iff (I : g) is exactly the prime P."""
    return colon_by_monomial(I, g).gens == P.ideal(I.ctx).gens


def module_min_gens(I: MonomialIdeal, P: MonomialPrime) -> ModuleGens:
    I.require_proper()
    colon = colon_by_prime(I, P)
    gens = tuple(g for g in colon.gens if not kernels.contains(I.gens, g))
    witnesses = tuple(g for g in gens if is_witness(I, g, P))
    return ModuleGens(P, gens, witnesses)


def _v_from_module(mod: ModuleGens) -> VValue:
    if not mod.witnesses:
        raise ConsistencyError(
            f"prime {mod.prime.vars} is associated but no module generator is a witness"
        )
    # gens are in canonical order, so min() keeps the first of equal degree
    witness = min(mod.witnesses, key=sum)
    return VValue(mod.prime, sum(witness), mod.alpha, mod.omega, witness)


def v_p(I: MonomialIdeal, P: MonomialPrime, ass=None) -> VValue:
    """v_P(I) together with the degree range of (I : P)/I.

    ``ass`` may pass a precomputed Ass(I) to skip recomputing it.
    """
    if ass is None:
        ass = associated_primes(I)
    if P not in ass:
        raise DomainError(f"prime {P.name(I.ctx)} is not associated to {I}")
    return _v_from_module(module_min_gens(I, P))


def v_all(I: MonomialIdeal, ass=None) -> dict:
    """``{P: VValue}`` for every associated prime of I."""
    if ass is None:
        ass = associated_primes(I)
    return {P: _v_from_module(module_min_gens(I, P)) for P in sorted_primes(ass)}


def v(I: MonomialIdeal) -> int:
    return min(val.v for val in v_all(I).values())


def v_p_bruteforce(I: MonomialIdeal, P: MonomialPrime) -> int:
    """Least degree of a monomial u | lcm(G(I)) with (I : u) = P, by exhaustion."""
    I.require_proper()
    found = kernels.witness_scan(I.gens, I.ctx.n)
    if P.vars not in found:
        raise DomainError(f"prime {P.name(I.ctx)} is not associated to {I}")
    return found[P.vars]


def no_embedded_primes(I: MonomialIdeal) -> bool:
    ass = associated_primes(I)
    return ass == max_primes(I, ass)
