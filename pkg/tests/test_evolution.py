import math

import numpy as np
import pytest

from liarsim import (
    OutOfRange,
    SparseState,
    SupportOutsideSubspace,
    apply_steps,
    build_evolution,
    build_initial_state,
    cycle_states,
    eight_liar,
    fourier_frame,
    hamiltonian,
    one_liar,
    principal_phases,
    probability_trace,
    propagate,
    propagator,
    simple_liar,
    step_matrix,
    time_grid,
    trace_to_csv,
    trace_to_json,
)

TOL = 1e-10


def test_principal_phases_convention():
    assert principal_phases(2) == (0.0, math.pi)
    p4 = principal_phases(4)
    assert p4[0] == 0.0
    assert p4[1] == pytest.approx(-math.pi / 2)
    assert p4[2] == pytest.approx(math.pi)  # -1 branch lands on +pi
    assert p4[3] == pytest.approx(math.pi / 2)
    for size in (2, 6, 16):
        for theta in principal_phases(size):
            assert -math.pi < theta <= math.pi


def test_fourier_frame_is_unitary():
    for size in (2, 4, 16):
        f = fourier_frame(size)
        assert np.abs(f @ f.conj().T - np.eye(size)).max() < 1e-13


def test_build_evolution_layout():
    config = eight_liar()
    ev = build_evolution(config)
    assert ev.basis == cycle_states(config)
    assert ev.size == 16
    assert ev.step_perm == tuple((t + 1) % 16 for t in range(16))
    assert ev.position(ev.basis[3]) == 3
    with pytest.raises(SupportOutsideSubspace):
        ev.position((1,) * 8)


def test_step_matrix_advances_one_position():
    ev = build_evolution(one_liar())
    assert np.array_equal(step_matrix(ev), np.array([[0.0, 1.0], [1.0, 0.0]]))
    ev8 = build_evolution(eight_liar())
    u = step_matrix(ev8)
    for t in range(16):
        e = np.zeros(16)
        e[t] = 1.0
        out = u @ e
        assert out[(t + 1) % 16] == 1.0 and out.sum() == 1.0


def test_propagator_at_integer_times():
    for config in (one_liar(), simple_liar(3), eight_liar()):
        ev = build_evolution(config)
        u_d = step_matrix(ev)
        assert np.abs(propagator(ev, 0.0) - np.eye(ev.size)).max() < TOL
        assert np.abs(propagator(ev, 1.0) - u_d).max() < TOL
        assert np.abs(propagator(ev, 2.0) - u_d @ u_d).max() < TOL
        assert np.abs(propagator(ev, -1.0) - u_d.T).max() < TOL
        assert np.abs(propagator(ev, float(ev.size)) - np.eye(ev.size)).max() < TOL


def test_hamiltonian_generates_the_propagator():
    for config in (one_liar(), simple_liar(2), eight_liar()):
        ev = build_evolution(config)
        h = hamiltonian(ev)
        assert np.abs(h - h.conj().T).max() < 1e-13
        # independent reconstruction: exp(-iHt) through numpy's eigensolver
        vals, vecs = np.linalg.eigh(h)
        for tau in (0.3, 1.0, 2.7, -1.4):
            expm = vecs @ np.diag(np.exp(-1j * vals * tau)) @ vecs.conj().T
            assert np.abs(expm - propagator(ev, tau)).max() < 1e-12


def test_one_liar_spectrum():
    ev = build_evolution(one_liar())
    h = hamiltonian(ev)
    vals = sorted(np.linalg.eigvalsh(h))
    assert vals[0] == pytest.approx(-math.pi, abs=1e-12)
    assert vals[1] == pytest.approx(0.0, abs=1e-12)
    assert np.trace(h).real == pytest.approx(-math.pi, abs=1e-12)


def test_propagate_matches_propagator():
    config = simple_liar(3)
    ev = build_evolution(config)
    state = build_initial_state(config)
    vec = np.array([state.amplitude(idx) for idx in ev.basis])
    for tau in (0.0, 0.5, 1.7, 6.0):
        moved = propagate(ev, state, tau)
        dense = propagator(ev, tau) @ vec
        got = np.array([moved.amplitude(idx) for idx in ev.basis])
        assert np.abs(got - dense).max() < 1e-12


def test_propagate_rejects_foreign_support():
    ev = build_evolution(simple_liar(2))
    foreign = SparseState(2, 4, {(1, 1): 1.0})
    with pytest.raises(SupportOutsideSubspace):
        propagate(ev, foreign, 0.5)
    with pytest.raises(SupportOutsideSubspace):
        apply_steps(ev, foreign, 1)


def test_apply_steps_is_exact_rotation():
    config = eight_liar()
    ev = build_evolution(config)
    start = SparseState(8, 16, {ev.basis[0]: 1.0})
    stepped = apply_steps(ev, start, 3)
    assert stepped.amplitudes == {ev.basis[3]: 1.0}
    assert apply_steps(ev, start, 16).amplitudes == start.amplitudes
    assert apply_steps(ev, start, -1).amplitudes == {ev.basis[15]: 1.0}
    # amplitudes are moved, never recomputed
    odd = SparseState(8, 16, {ev.basis[5]: 0.25 - 0.33j})
    assert apply_steps(ev, odd, 7).amplitude(ev.basis[12]) == 0.25 - 0.33j


def test_unitarity_and_group_law_random():
    rng = np.random.default_rng(7)
    ev = build_evolution(simple_liar(2))
    eye = np.eye(ev.size)
    for _ in range(50):
        tau, sigma = rng.uniform(-10, 10, size=2)
        u = propagator(ev, tau)
        assert np.abs(u @ u.conj().T - eye).max() < TOL
        assert np.abs(u @ propagator(ev, sigma) - propagator(ev, tau + sigma)).max() < TOL


def test_initial_state_is_stationary():
    rng = np.random.default_rng(11)
    for config in (one_liar(), simple_liar(4), eight_liar()):
        ev = build_evolution(config)
        psi0 = build_initial_state(config)
        for _ in range(20):
            tau = float(rng.uniform(-20, 20))
            moved = propagate(ev, psi0, tau)
            drift = max(
                abs(moved.amplitude(idx) - psi0.amplitude(idx)) for idx in ev.basis
            )
            assert drift < TOL


def test_one_liar_trace_values():
    rows = probability_trace(one_liar(), (1, True), (0.0, 0.5, 1.0, 1.5, 2.0))
    by_t = {r.t: r for r in rows}
    assert by_t[0.0].p_true == pytest.approx(1.0, abs=TOL)
    assert by_t[0.5].p_true == pytest.approx(0.5, abs=TOL)
    assert by_t[0.5].p_false == pytest.approx(0.5, abs=TOL)
    assert by_t[1.0].p_false == pytest.approx(1.0, abs=TOL)
    assert by_t[1.5].p_true == pytest.approx(0.5, abs=TOL)
    assert by_t[2.0].p_true == pytest.approx(1.0, abs=TOL)


def test_trace_rows_ordered_time_major_sentence_minor():
    rows = probability_trace(simple_liar(3), (1, True), (0.0, 0.25), sentences=(3, 1))
    assert [(r.t, r.sentence) for r in rows] == [
        (0.0, 1),
        (0.0, 3),
        (0.25, 1),
        (0.25, 3),
    ]


def test_trace_time_scale_stretches_time_axis():
    scale = math.pi / 2
    rows = probability_trace(
        one_liar(), (1, True), (0.0, scale / 2, scale), time_scale=scale
    )
    by_t = {r.t: r for r in rows}
    assert by_t[scale].p_false == pytest.approx(1.0, abs=TOL)
    assert by_t[scale / 2].p_true == pytest.approx(0.5, abs=TOL)


def test_trace_raw_collapse_keeps_measurement_weight():
    m = 8
    rows = probability_trace(
        eight_liar(), (1, True), (0.0, 8.0), renormalize=False
    )
    by = {(r.t, r.sentence): r for r in rows}
    # raw probabilities carry the initial outcome weight 1/(2m)
    assert by[(0.0, 1)].p_true == pytest.approx(1 / (2 * m), abs=TOL)
    assert by[(8.0, 1)].p_false == pytest.approx(1 / (2 * m), abs=TOL)


def test_trace_additivity_of_hypothesis_probabilities():
    rows = probability_trace(simple_liar(2), (1, True), tuple(time_grid(4.0, 0.25)))
    for r in rows:
        assert 0.0 <= r.p_true <= 1.0 + 1e-12
        assert r.p_true + r.p_false <= 1.0 + 1e-12


def test_trace_validation_errors():
    with pytest.raises(OutOfRange):
        probability_trace(one_liar(), (2, True), (0.0,))
    with pytest.raises(OutOfRange):
        probability_trace(one_liar(), (1, True), (0.0,), sentences=(0,))
    with pytest.raises(OutOfRange):
        probability_trace(one_liar(), (1, True), (0.0,), time_scale=0.0)


def test_time_grid():
    grid = time_grid(2.0, 0.5)
    assert grid == (0.0, 0.5, 1.0, 1.5, 2.0)
    assert len(time_grid(2.0, 0.05)) == 41
    assert time_grid(0.0, 0.1) == (0.0,)
    with pytest.raises(OutOfRange):
        time_grid(1.0, 0.0)
    with pytest.raises(OutOfRange):
        time_grid(-1.0, 0.5)


def test_trace_csv_format():
    rows = probability_trace(one_liar(), (1, True), (0.0, 0.5))
    text = trace_to_csv(rows, header_lines=("command=trace", "config=one-liar"))
    lines = text.splitlines()
    assert lines[0] == "# command=trace"
    assert lines[1] == "# config=one-liar"
    assert lines[2] == "t,sentence,p_true,p_false"
    assert len(lines) == 3 + len(rows)
    assert lines[4].startswith("0.5,1,0.5,")


def test_trace_csv_precision():
    rows = probability_trace(one_liar(), (1, True), (0.25,))
    wide = trace_to_csv(rows, precision=15).splitlines()[-1]
    narrow = trace_to_csv(rows, precision=3).splitlines()[-1]
    assert narrow == "0.25,1,0.854,0.146"
    assert len(wide) > len(narrow)


def test_trace_json_round_trips_rows():
    import json

    rows = probability_trace(one_liar(), (1, True), (0.0, 1.0))
    doc = json.loads(trace_to_json(rows))
    assert doc[0] == {
        "t": rows[0].t,
        "sentence": 1,
        "p_true": rows[0].p_true,
        "p_false": rows[0].p_false,
    }
    assert len(doc) == len(rows)
