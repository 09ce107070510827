"""Pure-Python exponent-vector kernels.

Reference implementation of the hot loops. The Cython module ``_ckernels``
exposes the same five functions with identical results; ``vnumbers.kernels``
picks one at import time.

All inputs are sequences of equal-length tuples of non-negative ints. All
set-valued outputs are minimal (a divisibility antichain) and sorted in the
canonical graded order: ascending degree, ties broken by descending
lexicographic order of the exponent vector.
"""

from itertools import product as _cartesian

BACKEND = "python"


def grlex_key(m):
    return (sum(m), tuple(-e for e in m))


def _divides(g, u):
    for a, b in zip(g, u):
        if a > b:
            return False
    return True


def minimize(gens):
    """Return the minimal generators of the ideal spanned by ``gens``."""
    kept = []
    # after the sort a divisor always precedes its proper multiples
    for u in sorted(set(gens), key=grlex_key):
        for g in kept:
            if _divides(g, u):
                break
        else:
            kept.append(u)
    return kept


def product(A, B):
    return minimize([tuple(x + y for x, y in zip(a, b)) for a in A for b in B])


def contains(gens, u):
    for g in gens:
        if _divides(g, u):
            return True
    return False


def colon_monomial(gens, u):
    return minimize([tuple(x - y if x > y else 0 for x, y in zip(g, u)) for g in gens])


def intersect(A, B):
    """Minimal generators of (A) ∩ (B) for minimal inputs A and B."""
    a_in, a_out, b_in, b_out = [], [], [], []
    for a in A:
        (a_in if contains(B, a) else a_out).append(a)
    for b in B:
        (b_in if contains(A, b) else b_out).append(b)
    cands = a_in + b_in
    cands.extend(tuple(x if x > y else y for x, y in zip(a, b)) for a in a_out for b in b_out)
    return minimize(cands)


def witness_scan(gens, n):
    """Scan every monomial u dividing lcm(gens) and classify (I : u).

    Returns ``{prime: degree}`` where ``prime`` is a sorted tuple of variable
    indices and ``degree`` is the least degree of a u with (I : u) equal to
    the prime generated by those variables.
    """
    if not gens:
        return {}
    bound = [max(g[i] for g in gens) for i in range(n)]
    best = {}
    for u in _cartesian(*(range(b + 1) for b in bound)):
        quotients = [tuple(x - y if x > y else 0 for x, y in zip(g, u)) for g in gens]
        if any(not any(q) for q in quotients):
            continue  # u lies in I
        unit = {i for q in quotients if sum(q) == 1 for i in range(n) if q[i]}
        if not unit:
            continue
        if all(any(q[i] for i in unit) for q in quotients):
            key = tuple(sorted(unit))
            d = sum(u)
            if best.get(key, d + 1) > d:
                best[key] = d
    return best
