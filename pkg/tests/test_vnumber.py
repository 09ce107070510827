import pytest
from hypothesis import given, settings

from conftest import XY, XYZ, ideal, ideals
from oracles import colon_is_prime, exhaustive_witness_degrees, member, mul
from vnumbers.ass_primes import associated_primes, max_primes
from vnumbers.errors import ConsistencyError, DomainError
from vnumbers.ideal import MonomialPrime, power
from vnumbers.vnumber import (
    ModuleGens,
    _v_from_module,
    module_min_gens,
    no_embedded_primes,
    v,
    v_all,
    v_p,
    v_p_bruteforce,
)

PX, PY, M = MonomialPrime((0,)), MonomialPrime((1,)), MonomialPrime((0, 1))
EXAMPLE = ideal(XY, (5, 0), (4, 3), (2, 4))
MAXIMAL = ideal(XY, (1, 0), (0, 1))


class TestModuleMinGens:
    def test_worked_example_at_maximal_ideal(self):
        mod = module_min_gens(EXAMPLE, M)
        assert set(mod.gens) == {(4, 2), (3, 3)}
        assert set(mod.witnesses) == {(4, 2), (3, 3)}

    def test_worked_example_at_px(self):
        mod = module_min_gens(EXAMPLE, PX)
        assert set(mod.gens) == {(4, 0), (3, 3), (1, 4)}
        assert mod.witnesses == ((1, 4),)

    def test_maximal_ideal(self):
        mod = module_min_gens(MAXIMAL, M)
        assert mod.gens == ((0, 0),) and mod.witnesses == ((0, 0),)

    def test_non_associated_prime_has_no_witness(self):
        assert module_min_gens(EXAMPLE, PY).witnesses == ()

    @settings(max_examples=80)
    @given(ideals())
    def test_generator_properties(self, I):
        n = I.ctx.n
        for P in associated_primes(I):
            mod = module_min_gens(I, P)
            assert mod.witnesses
            for g in mod.gens:
                assert not member(I.gens, g)
                for i in P.vars:
                    assert member(I.gens, mul(g, tuple(int(j == i) for j in range(n))))
            for g in mod.witnesses:
                assert colon_is_prime(I.gens, g, P.vars, n)


class TestVp:
    def test_examples(self):
        assert v_p(EXAMPLE, PX).v == 5
        assert v_p(EXAMPLE, M).v == 6
        assert v_p(MAXIMAL, M).v == 0

    def test_value_fields(self):
        val = v_p(EXAMPLE, PX)
        assert (val.alpha_mod, val.omega_mod, val.witness) == (4, 6, (1, 4))

    def test_not_associated(self):
        with pytest.raises(DomainError):
            v_p(EXAMPLE, PY)

    def test_consistency_error(self):
        with pytest.raises(ConsistencyError):
            _v_from_module(ModuleGens(PX, ((1, 0),), ()))


class TestV:
    def test_examples(self):
        assert v(EXAMPLE) == 5
        assert v(MAXIMAL) == 0
        assert v(ideal(XY, (3, 0), (2, 3))) == 4

    def test_maximal_ideal_powers(self):
        assert [v(power(MAXIMAL, k)) for k in range(1, 5)] == [0, 1, 2, 3]


class TestBruteforce:
    def test_examples(self):
        assert v_p_bruteforce(EXAMPLE, PX) == 5
        assert v_p_bruteforce(MAXIMAL, M) == 0
        assert v_p_bruteforce(ideal(XY, (2, 0), (1, 1)), M) == 1

    def test_not_associated(self):
        with pytest.raises(DomainError):
            v_p_bruteforce(EXAMPLE, PY)

    @settings(max_examples=150)
    @given(ideals(max_exp=6))
    def test_oracle_equivalence(self, I):
        naive = exhaustive_witness_degrees(I.gens, I.ctx.n)
        for P, val in v_all(I).items():
            assert val.v == v_p_bruteforce(I, P) == naive[P.vars]


class TestStructuralFacts:
    @settings(max_examples=100)
    @given(ideals())
    def test_module_bounds_and_max_equality(self, I):
        ass = associated_primes(I)
        top = max_primes(I, ass)
        for P, val in v_all(I, ass).items():
            assert val.alpha_mod <= val.v <= val.omega_mod
            if P in top:
                assert val.v == val.alpha_mod

    @settings(max_examples=100)
    @given(ideals())
    def test_v_is_min_over_primes(self, I):
        vals = v_all(I)
        assert v(I) == min(x.v for x in vals.values())
        if no_embedded_primes(I):
            assert v(I) == min(x.alpha_mod for x in vals.values())

    def test_embedded_prime_can_exceed_initial_degree(self):
        # at (x) the module starts in degree 4 but the witness has degree 5
        val = v_p(EXAMPLE, PX)
        assert val.alpha_mod < val.v

    def test_three_variables(self):
        I = ideal(XYZ, (1, 1, 0), (1, 0, 1), (0, 1, 1))
        assert v(I) == 1
        I2 = power(I, 2)
        assert v_p(I2, MonomialPrime((0, 1, 2))).v == v_p_bruteforce(I2, MonomialPrime((0, 1, 2)))
