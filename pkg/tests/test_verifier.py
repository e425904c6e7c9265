import numpy as np

import pytest

from hardysim.exceptions import ParameterError
from hardysim.hardy.outcomes import ALL_OUTCOMES, Detections, \
    OutcomeDistribution, PhotonAt
from hardysim.hardy.verifier import HardyVerdict, check_eq5, check_eq6, \
    check_eq7, target_probability, verify, zero_events
from hardysim.interferometer.experiment import CanonicalExperiment, \
    run_experiment
from hardysim.utils import PathLabel, SQRT1_2, Site

C, D = PathLabel.C, PathLabel.D


def test_default_verdict():
    """Test the 50/50 scheme: every constraint holds, quantum mechanics
    gives 1/4 and local realism 0."""
    verdict = verify()
    assert verdict.eq5_holds and verdict.eq6_holds and verdict.eq7_holds
    assert abs(verdict.target_probability - 0.25) < 1e-12
    assert verdict.lhv_max == 0.0
    assert verdict.contradiction
    assert np.isclose(verdict.gap, 0.25)
    assert list(verdict.distributions) == list(CanonicalExperiment)


@pytest.mark.parametrize("t, target, contradiction", [
    (SQRT1_2, 0.25, True),
    (0.5, 0.1875, True),
    (0.999999, 0.999999**2 * (1 - 0.999999**2), True),
    (1.0, 0.0, False),
    (0.0, 0.0, False),
])
def test_verdict_against_transmissivity(t, target, contradiction):
    verdict = verify(t)
    assert abs(verdict.target_probability - target) < 1e-12, \
        "Target {} at t={}".format(verdict.target_probability, t)
    assert verdict.contradiction == contradiction
    assert verdict.t == t


def test_uniform_splitters_break_constraints():
    """Test that unbalanced splitters in the constraint experiments let
    (d+, c-) and (c+, d-) happen, so no contradiction follows."""
    verdict = verify(0.5, uniform_splitters=True)
    assert verdict.eq5_holds
    assert not verdict.eq6_holds
    assert not verdict.eq7_holds
    assert verdict.lhv_max == 1.0
    assert not verdict.contradiction


def test_uniform_splitters_at_half_power():
    assert verify(SQRT1_2, uniform_splitters=True).contradiction


@pytest.mark.parametrize("t", [-0.5, 1.5])
def test_verify_rejects_transmissivity(t):
    with pytest.raises(ParameterError):
        verify(t)


def test_checks_on_point_masses():
    """Test each check on a distribution that violates only it."""
    dd = OutcomeDistribution.point_mass(Detections(D, D))
    dc = OutcomeDistribution.point_mass(Detections(D, C))
    cd = OutcomeDistribution.point_mass(Detections(C, D))
    assert not check_eq5(dd) and check_eq5(dc)
    assert not check_eq6(dc) and check_eq6(cd)
    assert not check_eq7(cd) and check_eq7(dd)
    assert target_probability(dd) == 1.0


def test_zero_events():
    dist = OutcomeDistribution({PhotonAt(Site.Q): 0.5,
                                Detections(C, C): 0.5})
    assert zero_events(dist) == [
        PhotonAt(Site.P),
        Detections(C, D),
        Detections(D, C),
        Detections(D, D)
    ]
    assert zero_events(OutcomeDistribution.uniform()) == []
    with pytest.raises(ParameterError):
        zero_events(dist, eps=0.0)


def test_outcome_distribution_validation():
    with pytest.raises(ValueError):
        OutcomeDistribution({Detections(C, C): 0.5})
    with pytest.raises(ValueError):
        OutcomeDistribution({Detections(C, C): 1.5, Detections(D, D): -0.5})
    assert len(OutcomeDistribution.uniform().items()) == len(ALL_OUTCOMES)


def test_verdict_requires_every_constraint():
    verdict = HardyVerdict(True, False, True, 0.25, 1.0)
    assert not verdict.contradiction
    assert verdict.constraints().names() == ['eq5', 'eq7']


def test_zero_events_of_canonical_experiments():
    """Test the outcomes that never happen in E(P,Q; +out,-out) and
    E(Q; +in,-out)."""
    out_out = run_experiment(
        CanonicalExperiment.E_PQ_OUT_OUT.config).born_distribution()
    assert zero_events(out_out) == [Detections(C, C), Detections(D, D)]
    in_out = run_experiment(
        CanonicalExperiment.E_Q_IN_OUT.config).born_distribution()
    assert Detections(D, C) in zero_events(in_out)
    assert PhotonAt(Site.P) in zero_events(in_out)


def test_check_eq5_on_photon_and_misuse():
    assert check_eq5(OutcomeDistribution.point_mass(PhotonAt(Site.Q)))
    in_in = run_experiment(
        CanonicalExperiment.E_PQ_IN_IN.config).born_distribution()
    assert not check_eq5(in_in)
