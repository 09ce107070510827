import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import XY, XYZ, ideal, ideals
from vnumbers import asymptotics as asym
from vnumbers.asymptotics import (
    LAW_NAMES,
    LinearFit,
    fit_eventual_linear,
    v_function,
    verify_laws,
)
from vnumbers.errors import DomainError, InputError
from vnumbers.ideal import MonomialPrime, unit_ideal

PX, M = MonomialPrime((0,)), MonomialPrime((0, 1))
EXAMPLE = ideal(XY, (5, 0), (4, 3), (2, 4))
FAMILY_3_1 = ideal(XY, (3, 0), (2, 3))
MAXIMAL = ideal(XY, (1, 0), (0, 1))


class TestFit:
    def test_worked_example_column(self):
        assert fit_eventual_linear([5, 11, 17, 23], 3) == LinearFit(6, -1, 1, 4)

    def test_progression(self):
        assert fit_eventual_linear([0, 1, 2, 3], 3) == LinearFit(1, -1, 1, 4)

    def test_late_onset(self):
        # the suffix 4, 7, 10, 13 at k = 2..5 is 3k - 2
        fit = fit_eventual_linear([7, 4, 7, 10, 13], 3)
        assert (fit.slope, fit.intercept, fit.onset) == (3, -2, 2)
        assert [fit(k) for k in range(2, 6)] == [4, 7, 10, 13]

    def test_no_fit(self):
        assert fit_eventual_linear([1, 5, 2, 9], 3) is None
        assert fit_eventual_linear([4], 2) is None

    def test_start_offset(self):
        fit = fit_eventual_linear([10, 13, 16], 2, start=3)
        assert (fit.slope, fit.intercept, fit.onset) == (3, 1, 3)

    def test_min_run(self):
        with pytest.raises(InputError):
            fit_eventual_linear([1, 2, 3], 1)

    @given(st.integers(-5, 5), st.integers(-10, 10), st.integers(2, 12))
    def test_exact_line_reconstructed(self, a, b, length):
        values = [a * k + b for k in range(1, length + 1)]
        fit = fit_eventual_linear(values, 2)
        assert (fit.slope, fit.intercept, fit.onset, fit.run_length) == (a, b, 1, length)


class TestVFunction:
    def test_family(self):
        assert v_function(FAMILY_3_1, 5).v_values() == [4, 7, 10, 13, 16]

    def test_maximal_ideal(self):
        assert v_function(MAXIMAL, 4).v_values() == [0, 1, 2, 3]

    def test_worked_example_px_column(self):
        table = v_function(EXAMPLE, 4)
        assert table.column(PX) == [5, 11, 17, 23]
        assert table.primes == (PX, M)
        assert (table.alpha_I, table.omega_I) == (5, 7)

    def test_rows_complete(self):
        table = v_function(EXAMPLE, 6)
        assert [row.k for row in table.rows] == list(range(1, 7))
        assert all(set(row.primes) == {PX, M} for row in table.rows)

    def test_unstable_prime_column(self):
        I = ideal(XYZ, (1, 1, 0), (1, 0, 1), (0, 1, 1))
        table = v_function(I, 4)
        top = MonomialPrime((0, 1, 2))
        assert table.column(top)[0] is None
        assert all(x is not None for x in table.column(top)[1:])

    def test_domain(self):
        with pytest.raises(DomainError):
            v_function(unit_ideal(XY), 3)


class TestVerifyLaws:
    def test_family(self):
        report = verify_laws(FAMILY_3_1, 8)
        assert report.status == asym.PASS
        assert report.v_fit.slope == 3 == report.alpha
        assert [law.name for law in report.laws] == list(LAW_NAMES)

    def test_maximal_ideal(self):
        report = verify_laws(MAXIMAL, 6)
        assert report.status == asym.PASS
        assert (report.v_fit.slope, report.v_fit.intercept) == (1, -1)

    def test_worked_example_slopes(self):
        report = verify_laws(EXAMPLE, 8)
        assert report.status == asym.PASS
        assert report.v_fit.slope == 5 == report.alpha
        assert report.prime_fits[PX].slope == 6
        assert report.prime_fits[PX].intercept == -1

    def test_prime_slopes_between_alpha_and_omega(self):
        for I in (EXAMPLE, FAMILY_3_1, ideal(XYZ, (2, 1, 0), (0, 2, 3), (1, 0, 4))):
            report = verify_laws(I, 10)
            for fit in report.prime_fits.values():
                assert fit is not None
                assert report.alpha <= fit.slope <= report.omega

    def test_needs_three_powers(self):
        with pytest.raises(InputError):
            verify_laws(EXAMPLE, 2)

    def test_short_window_is_inconclusive(self):
        I = ideal(XYZ, (1, 1, 0), (1, 0, 1), (0, 1, 1))
        report = verify_laws(I, 3, min_run=2, window=3)
        assert report.law("ass_stable").status == asym.INCONCLUSIVE
        assert report.law("monotone").status == asym.INCONCLUSIVE
        assert report.status == asym.INCONCLUSIVE

    def test_late_colon_factorization_is_inconclusive_not_failed(self):
        # (I^k : P) = I (I^(k-1) : P) first holds for every stable P at k = 11
        I = ideal(XYZ, (0, 2, 5), (4, 0, 5), (6, 3, 1), (6, 0, 4), (4, 5, 3))
        law = verify_laws(I, 10).law("colon_factorization")
        assert law.status == asym.INCONCLUSIVE and law.witness_k == 10
        law = verify_laws(I, 12).law("colon_factorization")
        assert law.status == asym.PASS and law.onset == 11

    def test_transient_slope_is_inconclusive(self):
        # v(I^k) = 9k - 1 up to k = 5, then the slope drops to alpha = 8
        I = ideal(XY, (6, 3), (0, 8))
        report = verify_laws(I, 5)
        assert (report.v_fit.slope, report.alpha) == (9, 8)
        assert report.law("slope_equals_alpha").status == asym.INCONCLUSIVE
        assert report.status == asym.INCONCLUSIVE
        report = verify_laws(I, 10)
        assert report.v_fit.slope == 8 and report.status == asym.PASS

    def test_eventual_law_records_onset(self):
        result = asym._eventual("x", [2, 3, 4, 5], lambda k: k != 3, "demo")
        assert result.status == asym.PASS and result.onset == 4
        result = asym._eventual("x", [2, 3, 4], lambda k: k != 4, "demo")
        assert result.status == asym.INCONCLUSIVE and result.witness_k == 4

    @settings(max_examples=30, deadline=None)
    @given(ideals(max_exp=5, max_gens=4))
    def test_random_ideals_never_fail(self, I):
        report = verify_laws(I, 8)
        assert report.status != asym.FAIL, [l for l in report.laws if l.status == asym.FAIL]
        if report.v_fit is not None:
            fitted = report.table.v_values()[report.v_fit.onset - 1:]
            assert fitted == [report.alpha * k + report.v_fit.intercept
                              for k in range(report.v_fit.onset, 9)]

    @settings(max_examples=30, deadline=None)
    @given(ideals(max_exp=5, max_gens=4))
    def test_sandwich_for_v_on_its_range(self, I):
        report = verify_laws(I, 8)
        law = report.law("sandwich")
        if law.status == asym.PASS:
            vs = report.table.v_values()
            for k in range(law.onset, 9):
                assert vs[k - 2] + report.alpha <= vs[k - 1] <= vs[k - 2] + report.omega
