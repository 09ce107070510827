import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from vnumbers import kernels  # noqa: E402
from vnumbers.ideal import RingContext, minimize_generators  # noqa: E402

XY = RingContext(("x", "y"))
XYZ = RingContext(("x", "y", "z"))
CTXS = {1: RingContext(("x",)), 2: XY, 3: XYZ}

# criterion id -> (passed, message); filled by test_acceptance
ACCEPTANCE = {}


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return kernels.BACKENDS[request.param]


@pytest.fixture
def xy():
    return XY


@pytest.fixture
def xyz():
    return XYZ


def ideal(ctx, *gens):
    return minimize_generators(ctx, gens)


def random_ideal(rng: random.Random, n: int, max_exp: int, max_gens: int = 5):
    """A random proper nonzero monomial ideal in n variables."""
    ctx = CTXS[n]
    while True:
        gens = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(rng.randint(1, max_gens))]
        I = minimize_generators(ctx, gens)
        if not I.is_unit:
            return I


@st.composite
def ideals(draw, n=None, max_exp=6, max_gens=5):
    n = draw(st.integers(1, 3)) if n is None else n
    vec = st.tuples(*[st.integers(0, max_exp)] * n)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    I = minimize_generators(CTXS[n], gens)
    if I.is_unit:
        I = minimize_generators(CTXS[n], [tuple(max(1, e) for e in gens[0])])
    return I


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, message = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {message}")
