import numpy as np

import pytest

from hardysim.exceptions import ParameterError
from hardysim.hardy.outcomes import Detections, PhotonAt
from hardysim.interferometer.experiment import BsSetting, \
    CanonicalExperiment, ExperimentConfig, dd_probability_curve, \
    run_experiment
from hardysim.interferometer.optics import Scheme
from hardysim.state.statevec import PairKet, PhotonKet, make_state
from hardysim.utils import PathLabel, SQRT2, Site

C, D = PathLabel.C, PathLabel.D
GP, GQ = PhotonKet(Site.P), PhotonKet(Site.Q)

# Final states of the four canonical experiments.
GOLDEN_STATES = {
    CanonicalExperiment.E_PQ_OUT_OUT: [(GQ, 0.5), (GP, -0.5),
                                       (PairKet(D, C), 0.5j),
                                       (PairKet(C, D), 0.5j)],
    CanonicalExperiment.E_Q_IN_OUT: [(GQ, 0.5),
                                     (PairKet(C, C), -2 / (2 * SQRT2)),
                                     (PairKet(C, D), 1j / (2 * SQRT2)),
                                     (PairKet(D, D), -1 / (2 * SQRT2))],
    CanonicalExperiment.E_Q_OUT_IN: [(GQ, 0.5),
                                     (PairKet(C, C), -2 / (2 * SQRT2)),
                                     (PairKet(D, C), 1j / (2 * SQRT2)),
                                     (PairKet(D, D), -1 / (2 * SQRT2))],
    CanonicalExperiment.E_PQ_IN_IN: [(GQ, 0.5), (GP, -0.5),
                                     (PairKet(C, C), -0.5),
                                     (PairKet(D, D), -0.5)],
}


@pytest.mark.parametrize("experiment", list(CanonicalExperiment))
def test_golden_states(experiment):
    """Test that each canonical experiment ends in its known final state,
    term by term."""
    state = run_experiment(experiment.config)
    expected = make_state(GOLDEN_STATES[experiment])
    assert set(state.kets()) == set(expected.kets()), \
        "Unexpected support {}".format(state)
    assert state.allclose(expected, 1e-12), "{} != {}".format(
        state, expected)
    assert state.lattice_check(2 * SQRT2)
    assert abs(state.norm_squared() - 1.0) < 1e-12


def test_hardy_fraction():
    """Test that both d-detectors fire in a quarter of the trials with both
    splitters in place."""
    dist = run_experiment(
        CanonicalExperiment.E_PQ_IN_IN.config).born_distribution()
    assert abs(dist.detection_probability(D, D) - 0.25) < 1e-12


@pytest.mark.parametrize("experiment, plus, minus", [
    (CanonicalExperiment.E_PQ_OUT_OUT, D, D),
    (CanonicalExperiment.E_Q_IN_OUT, D, C),
    (CanonicalExperiment.E_Q_OUT_IN, C, D),
])
def test_exclusions(experiment, plus, minus):
    dist = run_experiment(experiment.config).born_distribution()
    assert dist.detection_probability(plus, minus) < 1e-12, \
        "{} fires ({}, {})".format(experiment.config.label(), plus, minus)


def test_scheme_b_never_annihilates_at_p():
    for experiment in (CanonicalExperiment.E_Q_IN_OUT,
                       CanonicalExperiment.E_Q_OUT_IN):
        dist = run_experiment(experiment.config).born_distribution()
        assert dist.probability(PhotonAt(Site.P)) == 0.0


def test_full_transmission_matches_removed_splitters():
    """Test that t = 1 reduces BS2-in to passthrough."""
    in_in = run_experiment(
        CanonicalExperiment.E_PQ_IN_IN.config.with_transmissivity(1.0))
    out_out = run_experiment(CanonicalExperiment.E_PQ_OUT_OUT.config)
    assert in_in.allclose(out_out)
    assert in_in.born_distribution().probability(Detections(D, D)) == 0.0


def test_dd_probability_curve():
    """Test P(d+, d-) against t^2 (1 - t^2) on a 101-point grid."""
    t_values = np.linspace(0.0, 1.0, 101)
    for t, p in dd_probability_curve(t_values):
        assert abs(p - t**2 * (1 - t**2)) < 1e-12, "Mismatch at t={}".format(
            t)


def test_dd_probability_curve_rejects_range():
    with pytest.raises(ParameterError):
        dd_probability_curve([0.5, 1.5])


def test_config_label_and_aliases():
    assert CanonicalExperiment.E_PQ_OUT_OUT.config.label() == \
        'E(P,Q; +out,-out)'
    assert CanonicalExperiment.E_Q_IN_OUT.config.label() == 'E(Q; +in,-out)'
    assert CanonicalExperiment.from_alias('eq4') is \
        CanonicalExperiment.E_PQ_IN_IN
    with pytest.raises(ValueError):
        CanonicalExperiment.from_alias('eq9')


def test_config_equality():
    config = ExperimentConfig(Scheme.A, BsSetting.IN, BsSetting.IN)
    assert config == CanonicalExperiment.E_PQ_IN_IN.config
    assert config != config.with_transmissivity(0.5)
    assert np.isclose(config.with_transmissivity(0.6).reflectivity, 0.8)
    with pytest.raises(ParameterError):
        config.with_transmissivity(2.0)
