import numpy as np
import pytest

from colldeph import (BathParams, bath_functions, classify, detect_events,
                      dfs_projector, full_report, named_state,
                      saturation_entropy, time_series)
from colldeph import analysis, measures, channel, pure_density

T0 = BathParams.from_temperature_ratio(0)
TLOW = BathParams.from_temperature_ratio(1 / 60)

# positive roots of tan t = t, where the q1234 concurrence touches zero
TAN_ROOTS = (4.493409457909064, 7.725251836937708)


def test_dfs_projector(fermion, qubit):
    pf = dfs_projector(fermion)
    assert np.array_equal(np.diag(pf), [0, 0, 1, 0, 0, 1])
    pq = dfs_projector(qubit)
    assert np.array_equal(np.diag(pq), [0, 1, 1, 0])
    assert np.trace(pf) == 2 and np.trace(pq) == 2


def test_classify_invariant():
    rep = classify(named_state("dfs_fermion", alpha=0.77))
    assert rep.regime == "invariant"
    assert abs(rep.dfs_overlap - 1) < 1e-12


def test_classify_orthogonal():
    rep = classify(named_state("f24"))
    assert rep.regime == "orthogonal"
    assert rep.dfs_overlap < 1e-12


def test_classify_partial():
    rep = classify(named_state("f1234"))
    assert rep.regime == "partial"
    assert abs(rep.dfs_overlap - 0.25) < 1e-12


def test_time_series_shape_and_times():
    ts = time_series(named_state("q14"), T0, t_max=5.0, n_steps=11)
    assert ts.times.size == ts.concurrence.size == ts.coherence.size == 11
    assert ts.times[0] == 0.0
    assert np.all(np.diff(ts.times) > 0)
    assert abs(ts.times[-1] - 5.0) < 1e-12


def test_time_series_input_validation():
    with pytest.raises(ValueError):
        time_series(named_state("q14"), T0, t_max=1.0, n_steps=1)
    with pytest.raises(ValueError):
        time_series(named_state("q14"), T0, t_max=0.0)


def test_time_series_dimensionless_times():
    p = BathParams(omega_c=4.0, mode="zero-t")
    ts = time_series(named_state("q14"), p, t_max=2.0, n_steps=5)
    assert abs(ts.times[-1] - 8.0) < 1e-12


def test_dfs_series_constant():
    ts = time_series(named_state("dfs_fermion", alpha=0.6), TLOW, t_max=10, n_steps=64)
    assert np.max(np.abs(ts.concurrence - ts.concurrence[0])) < 1e-12
    assert np.max(np.abs(ts.coherence - ts.coherence[0])) < 1e-12
    assert np.max(np.abs(ts.linear_entropy)) < 1e-12


@pytest.mark.parametrize("params", [T0, TLOW])
def test_f24_exponential_series(params):
    ts = time_series(named_state("f24"), params, t_max=10, n_steps=200)
    gam = channel.bath_function_grids(params, ts.times / params.omega_c)[0]
    assert np.max(np.abs(ts.concurrence - np.exp(-4 * gam))) < 1e-8


def test_f15_exponential_series():
    ts = time_series(named_state("f15"), T0, t_max=10, n_steps=200)
    gam = channel.bath_function_grids(T0, ts.times)[0]
    assert np.max(np.abs(ts.concurrence - np.exp(-16 * gam))) < 1e-8


def test_fermion_and_qubit_bell_series_coincide():
    tf = time_series(named_state("f24"), TLOW, t_max=10, n_steps=300)
    tq = time_series(named_state("q14"), TLOW, t_max=10, n_steps=300)
    assert np.max(np.abs(tf.concurrence - tq.concurrence)) < 1e-10


def test_outer_superposition_more_fragile():
    tf24 = time_series(named_state("f24"), T0, t_max=10, n_steps=150)
    tf15 = time_series(named_state("f15"), T0, t_max=10, n_steps=150)
    assert np.all(tf15.concurrence <= tf24.concurrence + 1e-12)


def test_linear_entropy_monotone_and_saturating(rng):
    from conftest import random_pure
    for params in (T0, TLOW):
        for system_name in ("f1234", "q1234"):
            psi = named_state(system_name)
            ts = time_series(psi, params, t_max=10, n_steps=100)
            assert np.all(np.diff(ts.linear_entropy) >= -1e-12)
    psi = named_state("q1234")
    sat = saturation_entropy(psi)
    rho_inf = channel.evolve(pure_density(psi), T0, 1e20)
    assert abs(measures.linear_entropy(rho_inf) - sat) < 1e-6


def test_saturation_entropy_values():
    assert abs(saturation_entropy(named_state("dfs_fermion", alpha=0.4))) < 1e-12
    assert abs(saturation_entropy(named_state("f24")) - 0.5) < 1e-12
    assert abs(saturation_entropy(named_state("q1234")) - 5 / 8) < 1e-12
    assert abs(saturation_entropy(named_state("f1234")) - 3 / 4) < 1e-12


def test_no_events_for_plain_exponential_decay():
    assert detect_events(named_state("f24"), T0, t_max=10.0) == []


# bisection-refined first dead window of the f1234 state, against a 10x finer
# grid than the default scan
F1234_EVENTS_T0 = (4.096807725, 4.936349922, 7.199009928)
F1234_EVENTS_TLOW = (4.094708384, 4.939541015, 7.193214357)


@pytest.mark.parametrize("params,expect", [(T0, F1234_EVENTS_T0),
                                           (TLOW, F1234_EVENTS_TLOW)])
def test_f1234_event_structure_horizon_ten(params, expect):
    events = detect_events(named_state("f1234"), params, t_max=10.0)
    kinds = [e.kind for e in events]
    assert kinds == ["death", "birth", "death", "birth"]
    for ev, t_ref in zip(events, expect):
        assert abs(ev.time - t_ref) < 1e-5


def test_f1234_single_death_inside_first_window():
    events = detect_events(named_state("f1234"), T0, t_max=4.5)
    assert [e.kind for e in events] == ["death"]
    assert abs(events[0].time - F1234_EVENTS_T0[0]) < 1e-5


def test_f1234_revival_is_genuine():
    # after the first dead window the entanglement returns to a large value
    ts = time_series(named_state("f1234"), T0, t_max=10, n_steps=800)
    window = (ts.times > 5.0) & (ts.times < 7.0)
    peak = ts.concurrence[window].max()
    assert abs(peak - 0.2409) < 2e-3


def test_event_times_stable_under_grid_doubling():
    for psi_name, params in [("f1234", T0), ("q123_4", TLOW)]:
        psi = named_state(psi_name)
        base = detect_events(psi, params, t_max=10.0, n_scan=2000)
        fine = detect_events(psi, params, t_max=10.0, n_scan=4000)
        assert len(base) == len(fine)
        for a, b in zip(base, fine):
            assert a.kind == b.kind
            assert abs(a.time - b.time) <= 1e-6 * 10.0


def test_q123_4_death_and_birth():
    events = detect_events(named_state("q123_4"), T0, t_max=10.0)
    kinds = [e.kind for e in events]
    assert kinds == ["death", "birth", "death", "birth"]
    refs = (4.152281107, 4.857804938, 7.305475171, 8.162183251)
    for ev, t_ref in zip(events, refs):
        assert abs(ev.time - t_ref) < 1e-5


def test_q1234_initial_birth_flagged():
    psi = named_state("q1234")
    ts = time_series(psi, T0, t_max=10, n_steps=400)
    assert ts.concurrence[0] <= analysis.EPS_DEAD
    events = detect_events(psi, T0, t_max=0.5, n_scan=400)
    assert events and events[0].kind == "birth"


def test_q1234_touches_zero_at_tan_roots_without_dying():
    # the q1234 concurrence has exact tangent zeros at the roots of
    # tan t = t: it dips to zero there but never stays dead on an interval
    psi = named_state("q1234")
    rho0 = pure_density(psi).matrix
    conv = measures.convention_for(psi.system)
    for root in TAN_ROOTS:
        ts = np.linspace(root - 0.05, root + 0.05, 201)
        rhos = channel.evolve_matrix_grid(rho0, psi.system, T0, ts)
        cs = np.array([measures.concurrence_matrix(rhos[i], conv)
                       for i in range(ts.size)])
        i_min = int(np.argmin(cs))
        assert abs(ts[i_min] - root) < 2e-3
        assert cs[i_min] < 1e-5
        assert cs[0] > 1e-3 and cs[-1] > 1e-3


def test_full_report_combines_classification_and_events():
    rep = full_report(named_state("f1234"), T0, t_max=4.5)
    assert rep.regime == "partial"
    assert abs(rep.dfs_overlap - 0.25) < 1e-12
    assert [e.kind for e in rep.events] == ["death"]
