"""Associated primes of monomial ideals and their behaviour under powers.

A monomial prime P = (x_i : i in S) is associated to I exactly when the
maximal ideal of K[x_S] is associated to the localisation I_S, the ideal
obtained by setting every variable outside S to 1. That in turn holds iff
the socle of K[x_S]/I_S is nonzero, i.e. (I_S : P) != I_S. This reduces the
search to 2^n colon computations instead of a walk over the divisor lattice
of lcm(G(I)); the lattice walk survives as the independent oracle
:func:`associated_primes_exhaustive`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Tuple

from . import kernels
from .errors import DomainError, InputError
from .ideal import (
    MonomialIdeal,
    MonomialPrime,
    colon_by_prime,
    iter_powers,
    sorted_primes,
)

MAX_VARS = 6


def _localize(I: MonomialIdeal, support: Tuple[int, ...]) -> MonomialIdeal:
    keep = set(support)
    gens = [tuple(e if i in keep else 0 for i, e in enumerate(g)) for g in I.gens]
    return MonomialIdeal(I.ctx, tuple(kernels.minimize(gens)))


def _socle_nonzero(J: MonomialIdeal, P: MonomialPrime) -> bool:
    colon = colon_by_prime(J, P)
    return any(not kernels.contains(J.gens, g) for g in colon.gens)


def associated_primes(I: MonomialIdeal, max_vars: int = MAX_VARS) -> FrozenSet[MonomialPrime]:
    I.require_proper()
    n = I.ctx.n
    if n > max_vars:
        raise DomainError(f"{n} variables exceeds the configured cap of {max_vars}")
    found = set()
    for size in range(1, n + 1):
        for support in combinations(range(n), size):
            P = MonomialPrime(support)
            if not P.contains_ideal(I):
                continue
            local = _localize(I, support)
            if _socle_nonzero(local, P):
                found.add(P)
    return frozenset(found)


def max_primes(I: MonomialIdeal, ass=None) -> FrozenSet[MonomialPrime]:
    """Associated primes that are maximal under inclusion."""
    if ass is None:
        ass = associated_primes(I)
    return frozenset(
        P for P in ass if not any(set(P.vars) < set(Q.vars) for Q in ass)
    )


def associated_primes_exhaustive(I: MonomialIdeal) -> FrozenSet[MonomialPrime]:
    """Oracle: every prime of the form (I : u) with u dividing lcm(G(I))."""
    I.require_proper()
    return frozenset(MonomialPrime(p) for p in kernels.witness_scan(I.gens, I.ctx.n))


@dataclass(frozen=True)
class AssProfile:
    """Ass(I^k) for k = 1..k_max with the observed stabilisation point.

    ``onset`` is the start of the longest constant suffix of ``per_power``;
    ``confirmed`` says the last ``window`` entries agree. The general theory
    guarantees eventual stability but gives no bound, so an unconfirmed
    profile means the window was too short, not that stability fails.
    """

    per_power: Tuple[FrozenSet[MonomialPrime], ...]
    stable_set: FrozenSet[MonomialPrime]
    onset: int
    confirmed: bool
    window: int

    @property
    def k_max(self) -> int:
        return len(self.per_power)

    def at(self, k: int) -> FrozenSet[MonomialPrime]:
        return self.per_power[k - 1]

    def stable_primes(self) -> List[MonomialPrime]:
        return sorted_primes(self.stable_set)


def profile_from_sets(per_power, window: int) -> AssProfile:
    per_power = tuple(frozenset(s) for s in per_power)
    last = per_power[-1]
    onset = len(per_power)
    while onset > 1 and per_power[onset - 2] == last:
        onset -= 1
    confirmed = len(per_power) - onset + 1 >= window
    return AssProfile(per_power, last, onset, confirmed, window)


def ass_profile(I: MonomialIdeal, k_max: int, window: int = 3, powers=None) -> AssProfile:
    """Compute Ass(I^k) for k = 1..k_max.

    ``powers`` may carry precomputed I, I^2, ..., I^k_max.
    """
    if not (isinstance(k_max, int) and isinstance(window, int)) or not k_max >= window >= 1:
        raise InputError(f"need k_max >= window >= 1, got k_max={k_max}, window={window}")
    I.require_proper()
    if powers is None:
        powers = list(iter_powers(I, k_max))
    return profile_from_sets([associated_primes(J) for J in powers[:k_max]], window)
