"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]

Each workload is timed on both backends by swapping the kernel module that
the library dispatches through. Results are checked for equality.
"""

import argparse
import random
import time

from vnumbers import kernels
from vnumbers.asymptotics import verify_laws
from vnumbers.ideal import RingContext, minimize_generators, power
from vnumbers.vnumber import v_p_bruteforce, v_all

XYZ = RingContext(("x", "y", "z"))
NAMES = ("grlex_key", "minimize", "product", "contains", "colon_monomial", "intersect", "witness_scan")


def sample(seed, count, max_exp=6):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        gens = [tuple(rng.randint(0, max_exp) for _ in range(3)) for _ in range(rng.randint(2, 5))]
        I = minimize_generators(XYZ, gens)
        if not I.is_unit:
            out.append(I)
    return out


def use(backend):
    mod = kernels.BACKENDS[backend]
    for name in NAMES:
        setattr(kernels, name, getattr(mod, name))
    kernels.BACKEND = backend


WORKLOADS = {
    "power I^12": lambda ideals: [power(I, 12).gens for I in ideals],
    "v_all(I^6)": lambda ideals: [sorted((P.vars, x.v) for P, x in v_all(power(I, 6)).items()) for I in ideals],
    "witness scan I^2": lambda ideals: [
        sorted(kernels.witness_scan(power(I, 2).gens, 3).items()) for I in ideals
    ],
    "verify_laws k<=10": lambda ideals: [verify_laws(I, 10).status for I in ideals],
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--count", type=int, default=20)
    args = parser.parse_args()
    backends = sorted(kernels.BACKENDS)
    if len(backends) < 2:
        print("compiled backend not built; only timing the pure-Python kernels")
    ideals = sample(1, args.count)
    print(f"{'workload':20} " + " ".join(f"{b:>10}" for b in backends) + ("    speedup" if len(backends) > 1 else ""))
    for name, work in WORKLOADS.items():
        times, results = {}, {}
        for b in backends:
            use(b)
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                results[b] = work(ideals)
                best = min(best, time.perf_counter() - t0)
            times[b] = best
        assert len({repr(r) for r in results.values()}) == 1, f"backends disagree on {name}"
        line = f"{name:20} " + " ".join(f"{times[b]:9.3f}s" for b in backends)
        if len(backends) > 1:
            line += f"   {times['python'] / times['cython']:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
