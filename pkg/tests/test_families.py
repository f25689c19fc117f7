import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ALPHAS_17, ETAS_21, reduced_pair_matrix, scs_grid, superposition_grid
from xdiscord.families import (
    SCS,
    CollectiveExpectations,
    Dicke,
    Superposition,
    SymmetricState,
    dicke_expectations,
    dicke_xstate,
    expectation_oracle,
    expectations_to_xstate,
    family_coefficients,
    family_expectations,
    family_xstate,
    ghz_coefficients,
    ghz_expectations,
    scs_coefficients,
    scs_expectations,
    scs_large_n_xstate,
    scs_norm_factor,
    superposition_expectations,
)
from xdiscord.xstate import XState, concurrence_closed, discord_compact, eof_from_concurrence, full_report


def exp_close(a, b, tol):
    assert a.N == b.N
    assert a.jz == pytest.approx(b.jz, abs=tol)
    assert a.jz2 == pytest.approx(b.jz2, abs=tol)
    assert complex(a.jplus2) == pytest.approx(complex(b.jplus2), abs=tol)


def xs_close(a: XState, b: XState, tol):
    assert (a.v_plus, a.v_minus, a.y) == pytest.approx((b.v_plus, b.v_minus, b.y), abs=tol)
    assert a.u == pytest.approx(b.u, abs=tol)


class TestExpectationsToXState:
    def test_w_state(self):
        s = expectations_to_xstate(CollectiveExpectations(3, -0.5, 0.25, 0))
        xs_close(s, XState(0, 1 / 3, 1 / 3, 0), 1e-15)

    def test_all_down(self):
        s = expectations_to_xstate(CollectiveExpectations(2, -1, 1, 0))
        xs_close(s, XState(0, 1, 0, 0), 1e-15)

    def test_dicke_4_2(self):
        s = expectations_to_xstate(CollectiveExpectations(4, 0, 0, 0))
        xs_close(s, XState(1 / 6, 1 / 6, 1 / 3, 0), 1e-15)

    def test_rejects_unphysical(self):
        with pytest.raises(ValueError):
            expectations_to_xstate(CollectiveExpectations(4, 0.0, 0.0, 5.0))
        with pytest.raises(ValueError):
            CollectiveExpectations(4, 3.0, 9.0, 0)

    @pytest.mark.parametrize("p", [Dicke(5, 2), Superposition(5, 1, 0.8, 2.0), SCS(6, 0.4, "odd"),
                                   SCS(5, 0.7, "even"), Superposition(2, 0, 0.3, 1.0)])
    def test_matches_qubit_partial_trace(self, p):
        # builds the 2^N state vector and traces out N - 2 qubits
        m = reduced_pair_matrix(family_coefficients(p).coeffs)
        assert family_xstate(p).matrix() == pytest.approx(m, abs=1e-13)


class TestDicke:
    def test_expectations(self):
        e = dicke_expectations(7, 0)
        assert (e.jz, e.jz2, e.jplus2) == (-3.5, 12.25, 0)
        e = dicke_expectations(3, 1)
        assert (e.jz, e.jz2) == (-0.5, 0.25)

    def test_expectations_match_oracle(self):
        for N in range(2, 21):
            for n in range(N + 1):
                exp_close(dicke_expectations(N, n), expectation_oracle(family_coefficients(Dicke(N, n))), 1e-12)

    def test_xstate_examples(self):
        xs_close(dicke_xstate(3, 1), XState(0, 1 / 3, 1 / 3, 0), 1e-16)
        xs_close(dicke_xstate(9, 0), XState(0, 1, 0, 0), 0)
        xs_close(dicke_xstate(12, 6), XState(30 / 132, 30 / 132, 36 / 132, 0), 1e-16)

    def test_xstate_matches_expectation_route(self):
        for N in range(2, 31):
            for n in range(N + 1):
                xs_close(dicke_xstate(N, n), expectations_to_xstate(dicke_expectations(N, n)), 1e-15)

    def test_product_states_uncorrelated(self):
        for N in (2, 5, 30):
            for n in (0, N):
                rep = full_report(dicke_xstate(N, n))
                assert rep.discord == pytest.approx(0, abs=1e-12)
                assert rep.eof == pytest.approx(0, abs=1e-12)

    @pytest.mark.parametrize("N, n", [(3, 4), (3, -1), (1, 0)])
    def test_range(self, N, n):
        with pytest.raises(ValueError):
            dicke_xstate(N, n)


class TestSuperposition:
    def test_alpha_zero_and_half_pi(self):
        for N, n in [(5, 0), (8, 3), (10, 8)]:
            exp_close(superposition_expectations(N, n, 0.0, 0.4), dicke_expectations(N, n), 1e-15)
            exp_close(superposition_expectations(N, n, math.pi / 2, 0.4), dicke_expectations(N, n + 2), 1e-14)

    def test_oracle_example(self):
        p = Superposition(5, 1, math.pi / 3, 1.1)
        exp_close(superposition_expectations(5, 1, math.pi / 3, 1.1), expectation_oracle(family_coefficients(p)), 1e-13)

    def test_range(self):
        with pytest.raises(ValueError):
            Superposition(5, 4, 0.1)

    def test_symmetry(self):
        for p in superposition_grid(8, deltas=(0.0, 0.9)):
            q = Superposition(p.N, p.N - p.n - 2, math.pi / 2 + p.alpha, p.delta)
            a, b = family_xstate(p), family_xstate(q)
            assert a.v_plus == pytest.approx(b.v_minus, abs=1e-12)
            assert a.v_minus == pytest.approx(b.v_plus, abs=1e-12)
            assert a.u == pytest.approx(-b.u, abs=1e-12)

    def test_n3_relation(self):
        for n in (0, 1):
            for a in ALPHAS_17:
                s = family_xstate(Superposition(3, n, a, 0.7))
                same = s.v_plus if n == 0 else s.v_minus
                assert same == pytest.approx(s.y, abs=1e-12)
                assert s.v_plus * s.v_minus == pytest.approx(abs(s.u) ** 2, abs=1e-12)

    def test_n2_pure(self):
        for a in ALPHAS_17:
            rep = full_report(family_xstate(Superposition(2, 0, a, 0.3)))
            h = -sum(p * math.log2(p) for p in (math.cos(a) ** 2, math.sin(a) ** 2) if p > 0)
            assert rep.joint_entropy == pytest.approx(0, abs=1e-9)
            assert rep.discord == pytest.approx(h, abs=1e-9)
            assert rep.eof == pytest.approx(h, abs=1e-9)

    def test_delta_phase_sets_optimal_phi(self):
        from xdiscord.xstate import optimal_phi
        s = family_xstate(Superposition(6, 1, 0.5, 0.7))
        # u carries exp(-i delta); phi_m is defined modulo pi
        assert optimal_phi(s) == pytest.approx(math.pi - 0.35, abs=1e-12)
        d0 = discord_compact(family_xstate(Superposition(6, 1, 0.5, 0.0))).discord
        assert discord_compact(s).discord == pytest.approx(d0, abs=1e-12)


class TestGHZ:
    @pytest.mark.parametrize("N", [2, 3, 6])
    def test_closed_form_matches_oracle(self, N):
        for a in ALPHAS_17:
            exp_close(ghz_expectations(N, a, 0.4), expectation_oracle(ghz_coefficients(N, a, 0.4)), 1e-12)

    def test_reduced_state_diagonal(self):
        s = expectations_to_xstate(ghz_expectations(5, 0.3))
        assert (s.y, s.u) == (0.0, 0)
        assert s.v_plus == pytest.approx(math.cos(0.3) ** 2)


class TestSCS:
    def test_parity(self):
        for N, e in [(6, 0.3), (7, 0.9)]:
            ce = scs_coefficients(N, e, "even").coeffs
            co = scs_coefficients(N, e, "odd").coeffs
            assert np.all(ce[1::2] == 0) and np.all(co[0::2] == 0)

    def test_n4_example(self):
        c = scs_coefficients(4, 0.5, "even").coeffs.real
        ratio = np.array([1, math.sqrt(6) * 0.25, 0.0625])
        assert c[0::2] == pytest.approx(ratio / np.linalg.norm(ratio), abs=1e-15)

    @pytest.mark.parametrize("parity", ["even", "odd"])
    def test_analytic_normalization(self, parity):
        # (|eta> +- |-eta>) / sqrt(2(1 +- gamma^N)) has amplitudes 2 c_n / sqrt(...)
        N, e = 9, 0.6
        n = np.arange(N + 1)
        binom = np.array([math.comb(N, k) for k in n], dtype=float)
        raw = (1 + e * e) ** (-N / 2) * np.sqrt(binom) * e**n * (1 + (1 if parity == "even" else -1) * (-1.0) ** n)
        c = scs_norm_factor(N, e, parity) * raw
        assert c == pytest.approx(scs_coefficients(N, e, parity).coeffs.real, abs=1e-14)

    def test_large_n_coefficients_finite(self):
        c = scs_coefficients(300, 0.8, "odd").coeffs
        assert np.all(np.isfinite(c))
        assert np.vdot(c, c).real == pytest.approx(1.0, abs=1e-12)

    def test_odd_eta_zero_coefficients_rejected(self):
        with pytest.raises(ValueError, match="limit"):
            scs_coefficients(5, 0.0, "odd")

    def test_eta_zero_limits(self):
        for N in (3, 10):
            exp_close(scs_expectations(N, 0.0, "even"), CollectiveExpectations(N, -N / 2, N * N / 4, 0), 1e-15)
            exp_close(scs_expectations(N, 0.0, "odd"), dicke_expectations(N, 1), 1e-15)

    def test_odd_example_matches_oracle(self):
        exp_close(scs_expectations(6, 0.4, "odd"), expectation_oracle(scs_coefficients(6, 0.4, "odd")), 1e-12)

    def test_closed_form_matches_oracle_dense(self):
        for N in range(2, 31):
            for e in np.linspace(0.01, 1.0, 34):
                for par in ("even", "odd"):
                    exp_close(scs_expectations(N, float(e), par),
                              expectation_oracle(scs_coefficients(N, float(e), par)), 1e-12)

    def test_small_eta_odd_is_stable(self):
        # closed form would lose all digits here
        for e in (1e-5, 1e-7, 1e-9):
            s = family_xstate(SCS(12, e, "odd"))
            xs_close(s, dicke_xstate(12, 1), 1e-8)

    def test_eta_one(self):
        for N in (3, 4, 17):
            for par in ("even", "odd"):
                s = family_xstate(SCS(N, 1.0, par))
                assert discord_compact(s).discord <= 1e-10
        # N = 2 keeps the gamma^N / (1 - eta^2)^2 -> 1/4 term
        exp_close(scs_expectations(2, 1.0, "even"), expectation_oracle(scs_coefficients(2, 1.0, "even")), 1e-12)

    def test_large_n_matrix(self):
        for e in (0.3, 0.6, 0.9):
            for par in ("even", "odd"):
                xs_close(family_xstate(SCS(200, e, par)), scs_large_n_xstate(e), 2e-2)

    def test_range(self):
        with pytest.raises(ValueError):
            SCS(5, 1.2, "even")
        with pytest.raises(ValueError):
            SCS(5, 0.5, "both")


def test_trace_identity_all_families():
    for p in superposition_grid(10) + scs_grid(20):
        s = family_xstate(p)
        assert s.v_plus + s.v_minus + 2 * s.y == pytest.approx(1.0, abs=1e-14)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 40), st.data())
def test_random_coefficient_vectors(N, data):
    # any normalized symmetric state gives a valid X state through the oracle
    # when only n and n+2 components are populated (keeps the X form)
    n = data.draw(st.integers(0, N - 2))
    a = data.draw(st.floats(0, 2 * math.pi))
    d = data.draw(st.floats(0, 2 * math.pi))
    exp_close(superposition_expectations(N, n, a, d),
              expectation_oracle(family_coefficients(Superposition(N, n, a, d))), 1e-12)


def test_symmetric_state_validation():
    with pytest.raises(ValueError, match="normalized"):
        SymmetricState(3, np.ones(4))
    with pytest.raises(ValueError):
        SymmetricState(3, np.ones(3) / math.sqrt(3))


def test_family_expectations_dispatch():
    assert family_expectations(Dicke(4, 2)) == dicke_expectations(4, 2)
    with pytest.raises(TypeError):
        family_expectations("dicke")


def test_concurrence_and_eof_w_family():
    for N in range(3, 20):
        s = dicke_xstate(N, 1)
        assert concurrence_closed(s) == pytest.approx(2 / N, abs=1e-15)
        assert eof_from_concurrence(concurrence_closed(s)) >= 0
