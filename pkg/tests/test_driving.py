"""Tests for the driving schedules and the unitary Bloch propagator."""

import math

import numpy as np
import pytest

from spincarnot import (
    COMPRESSION,
    EXPANSION,
    ConvergenceError,
    DensityMatrix,
    DomainError,
    HamiltonianSchedule,
    PLANCK_PEV_MS,
    QubitOperator,
    commutator_norm,
    evaluate_schedule,
    field_operator,
    gibbs_state,
    pauli_rotation_step,
    propagate,
    propagate_converged,
    relative_entropy,
    trace_distance,
)

import oracles

H = PLANCK_PEV_MS

COMP = HamiltonianSchedule(COMPRESSION, 3.6, 1.44, 0.5)
RHO_B = gibbs_state(field_operator(3.6, "y"), 16.5)
RHO_D = gibbs_state(field_operator(2.0, "x"), 6.6)


class TestSchedule:
    def test_invalid_parameters(self):
        with pytest.raises(DomainError):
            HamiltonianSchedule(COMPRESSION, 3.6, 1.44, 0.0)
        with pytest.raises(DomainError):
            HamiltonianSchedule(COMPRESSION, -3.6, 1.44, 1.0)
        with pytest.raises(DomainError):
            HamiltonianSchedule("squeeze", 3.6, 1.44, 1.0)

    def test_compression_endpoints(self):
        h0 = evaluate_schedule(COMP, 0.0)
        assert (h0.c0, h0.cx, h0.cy, h0.cz) == (0.0, 0.0, -H * 3.6 / 2, 0.0)
        h1 = evaluate_schedule(COMP, COMP.tau)
        assert h1.cx == pytest.approx(-H * 1.44 / 2, abs=1e-15)
        assert abs(h1.cy) < 1e-15 and h1.cz == 0.0 and h1.c0 == 0.0

    def test_expansion_endpoints(self):
        s = HamiltonianSchedule(EXPANSION, 2.0, 5.0, 0.5)
        h0 = evaluate_schedule(s, 0.0)
        assert (h0.cx, h0.cy) == (-H * 2.0 / 2, 0.0)
        h1 = evaluate_schedule(s, s.tau)
        assert h1.cy == pytest.approx(-H * 5.0 / 2, abs=1e-15)
        assert abs(h1.cx) < 1e-15

    def test_midpoint(self):
        h = evaluate_schedule(COMP, COMP.tau / 2)
        nu_mid = 0.5 * (3.6 + 1.44)
        expected = -(H * nu_mid / 2) / math.sqrt(2)
        assert h.cx == pytest.approx(expected, rel=1e-14)
        assert h.cy == pytest.approx(expected, rel=1e-14)

    def test_time_domain_guard(self):
        with pytest.raises(DomainError):
            evaluate_schedule(COMP, -0.01)
        with pytest.raises(DomainError):
            evaluate_schedule(COMP, COMP.tau * 1.001)

    def test_matches_matrix_oracle(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            t = rng.uniform(0.0, COMP.tau)
            h = evaluate_schedule(COMP, t)
            expected = oracles.schedule_hamiltonian(
                "compression", 3.6, 1.44, COMP.tau, t
            )
            assert np.allclose(oracles.op_to_matrix(h), expected, atol=1e-14)

    def test_noncommuting_at_distinct_times(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            t1, t2 = rng.uniform(0.01, COMP.tau * 0.99, size=2)
            if abs(t1 - t2) < 1e-6:
                continue
            h1 = evaluate_schedule(COMP, t1)
            h2 = evaluate_schedule(COMP, t2)
            assert commutator_norm(h1, h2) > 0.0


class TestPauliRotationStep:
    def test_zero_hamiltonian(self):
        rho = DensityMatrix(0.1, 0.2, 0.3)
        assert pauli_rotation_step(QubitOperator(), 0.7, rho) == rho

    def test_stationary_state(self):
        h = field_operator(3.6, "y")
        rho = gibbs_state(h, 16.5)
        out = pauli_rotation_step(h, 1.234, rho)
        assert trace_distance(out, rho) < 1e-15

    def test_half_turn_flip(self):
        # 2*r*dt/hbar = pi  <=>  dt = 1/(2*nu) at nu = 1 kHz
        h = field_operator(1.0, "x")
        rho = DensityMatrix(0.0, 0.5, 0.0)
        out = pauli_rotation_step(h, 0.5, rho)
        assert (out.rx, out.ry, out.rz) == pytest.approx(
            (0.0, -0.5, 0.0), abs=1e-12
        )

    def test_identity_part_is_inert(self):
        h = field_operator(2.0, "x")
        h_shifted = QubitOperator(5.0, h.cx, h.cy, h.cz)
        rho = DensityMatrix(0.1, 0.4, 0.2)
        a = pauli_rotation_step(h, 0.3, rho)
        b = pauli_rotation_step(h_shifted, 0.3, rho)
        assert trace_distance(a, b) < 1e-15

    def test_against_rk4_oracle(self):
        rng = np.random.default_rng(41)
        for _ in range(10):
            c = rng.normal(size=3)
            h = QubitOperator(0.0, *c)
            r0 = rng.normal(size=3)
            r0 *= rng.uniform(0, 0.99) / np.linalg.norm(r0)
            dt = rng.uniform(0.01, 0.2)
            out = pauli_rotation_step(h, dt, DensityMatrix(*r0))
            expected = oracles.rk4_constant_field(c, dt, r0, 4000)
            assert np.allclose([out.rx, out.ry, out.rz], expected, atol=1e-9)

    def test_norm_preserved(self):
        rng = np.random.default_rng(43)
        rho = DensityMatrix(0.2, -0.3, 0.6)
        for _ in range(5):
            h = QubitOperator(0.0, *rng.normal(size=3))
            out = pauli_rotation_step(h, rng.uniform(0.0, 1.0), rho)
            assert out.bloch_norm == pytest.approx(rho.bloch_norm, abs=1e-14)


class TestPropagate:
    def test_step_count_guard(self):
        with pytest.raises(DomainError):
            propagate(COMP, RHO_B, 0)

    def test_second_order_convergence(self):
        d1 = trace_distance(propagate(COMP, RHO_B, 512), propagate(COMP, RHO_B, 1024))
        d2 = trace_distance(propagate(COMP, RHO_B, 1024), propagate(COMP, RHO_B, 2048))
        order = math.log2(d1 / d2)
        assert order >= 1.9

    def test_kernel_matches_python_composition(self):
        # the compiled loop must agree with composing public single steps
        rho = RHO_B
        n = 600
        dt = COMP.tau / n
        for k in range(n):
            h = evaluate_schedule(COMP, (k + 0.5) * dt)
            rho = pauli_rotation_step(h, dt, rho)
        fast = propagate(COMP, RHO_B, n)
        assert trace_distance(fast, rho) < 1e-12

    def test_both_kernel_backends_agree(self):
        try:
            from spincarnot import _kernel
        except ImportError:
            pytest.skip("compiled kernel not built")
        from spincarnot import _kernel_py

        a = _kernel.propagate_bloch(0, 3.6, 1.44, 0.5, 0.0, 0.42, 0.1, 1000)
        b = _kernel_py.propagate_bloch(0, 3.6, 1.44, 0.5, 0.0, 0.42, 0.1, 1000)
        assert np.allclose(a, b, atol=1e-14)
        a = _kernel.propagate_bloch(1, 2.0, 5.0, 0.2, 0.3, 0.0, 0.0, 1000)
        b = _kernel_py.propagate_bloch(1, 2.0, 5.0, 0.2, 0.3, 0.0, 0.0, 1000)
        assert np.allclose(a, b, atol=1e-14)

    def test_quasi_static_reaches_cold_gibbs(self):
        s = HamiltonianSchedule(COMPRESSION, 3.6, 1.44, 100.0)
        final = propagate_converged(s, RHO_B, 1e-8).final_state
        target = gibbs_state(field_operator(1.44, "x"), 6.6)
        assert trace_distance(final, target) < 1e-3

    def test_sudden_quench_freezes_state(self):
        s = HamiltonianSchedule(COMPRESSION, 3.6, 1.44, 1e-4)
        final = propagate(s, RHO_B, 1024)
        assert trace_distance(final, RHO_B) < 1e-3

    def test_purity_preserved(self):
        for tau in (0.01, 0.3, 5.0):
            s = HamiltonianSchedule(COMPRESSION, 3.6, 1.44, tau)
            final = propagate(s, RHO_B, 4096)
            assert abs(final.purity() - RHO_B.purity()) < 1e-11

    def test_matches_matrix_propagation(self):
        final = propagate(COMP, RHO_B, 800)
        expected = oracles.bloch_of(
            oracles.propagate_matrix(
                "compression", 3.6, 1.44, COMP.tau, oracles.to_matrix(RHO_B), 800
            )
        )
        assert np.allclose([final.rx, final.ry, final.rz], expected, atol=1e-11)


class TestPropagateConverged:
    def test_tolerance_guard(self):
        with pytest.raises(DomainError):
            propagate_converged(COMP, RHO_B, 0.0)
        with pytest.raises(DomainError):
            propagate_converged(COMP, RHO_B, 1.5)

    def test_self_consistency(self):
        a = propagate_converged(COMP, RHO_B, 1e-10)
        b = propagate_converged(COMP, RHO_B, 1e-12)
        assert a.convergence_estimate < 1e-10
        assert trace_distance(a.final_state, b.final_state) < 1e-9

    def test_sudden_analytic_limit(self):
        # the frozen-state error scales with the residual rotation angle
        # 2*pi*nu*tau, so the 1e-6 regime needs tau well below 1e-4 ms
        s = HamiltonianSchedule(COMPRESSION, 3.6, 1.44, 1e-7)
        result = propagate_converged(s, RHO_B, 1e-10)
        assert trace_distance(result.final_state, RHO_B) < 1e-6
        s = HamiltonianSchedule(COMPRESSION, 3.6, 1.44, 1e-4)
        result = propagate_converged(s, RHO_B, 1e-10)
        assert trace_distance(result.final_state, RHO_B) < 1e-3

    def test_against_rk4_with_finer_steps(self):
        result = propagate_converged(COMP, RHO_B, 1e-10)
        expected = oracles.rk4_bloch(
            "compression", 3.6, 1.44, COMP.tau,
            [RHO_B.rx, RHO_B.ry, RHO_B.rz], 10 * result.steps_used,
        )
        final = result.final_state
        dist = 0.5 * np.linalg.norm(
            np.array([final.rx, final.ry, final.rz]) - expected
        )
        assert dist < 1e-8


class TestAdiabaticLimit:
    def test_monotone_endpoint_approach(self):
        target = gibbs_state(field_operator(1.44, "x"), 6.6)
        dists = []
        for tau in (1.0, 5.0, 25.0, 100.0):
            s = HamiltonianSchedule(COMPRESSION, 3.6, 1.44, tau)
            final = propagate_converged(s, RHO_B, 1e-9).final_state
            dists.append(relative_entropy(final, target))
        assert all(a > b for a, b in zip(dists, dists[1:]))

    def test_expansion_mirrors_compression(self):
        # relabeling x<->y maps one stroke onto the other
        comp = HamiltonianSchedule(COMPRESSION, 2.0, 5.0, 0.7)
        expn = HamiltonianSchedule(EXPANSION, 2.0, 5.0, 0.7)
        rho0 = gibbs_state(field_operator(2.0, "x"), 6.6)
        rho0_swapped = DensityMatrix(rho0.ry, rho0.rx, rho0.rz)
        a = propagate(expn, rho0, 4096)
        b = propagate(comp, rho0_swapped, 4096)
        assert a.rx == pytest.approx(b.ry, abs=1e-12)
        assert a.ry == pytest.approx(b.rx, abs=1e-12)
        assert a.rz == pytest.approx(-b.rz, abs=1e-12)
