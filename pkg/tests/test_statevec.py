import math

import numpy as np

import pytest

from hardysim.exceptions import InvalidAmplitudeError, NotTerminalError, \
    ParameterError
from hardysim.hardy.outcomes import Detections, PhotonAt
from hardysim.state.statevec import PairKet, PhotonKet, initial_state, \
    make_state, norm_squared, random_state
from hardysim.utils import PathLabel, SQRT1_2, SQRT2, Site

A, B, C, D, S = (PathLabel.A, PathLabel.B, PathLabel.C, PathLabel.D,
                 PathLabel.S)

## Construction Tests


def test_initial_state():
    """Test that the pair starts on the s paths with amplitude 1."""
    state = initial_state()
    assert state.kets() == [PairKet(S, S)], "Initial state is not |s+ s->"
    assert np.isclose(state.amplitude(PairKet(S, S)), 1.0)


def test_make_state_merges_duplicates():
    """Test that repeated kets are summed into a single term."""
    state = make_state([(PairKet(C, D), 0.5), (PairKet(C, D), 0.25j)])
    assert len(state) == 1, "Duplicate kets were not merged"
    assert np.isclose(state.amplitude(PairKet(C, D)), 0.5 + 0.25j)


def test_make_state_prunes_cancellations():
    """Test that amplitudes cancelling to zero leave no term behind."""
    state = make_state([(PairKet(C, C), 0.5), (PairKet(C, C), -0.5),
                        (PhotonKet(Site.Q), 1.0)])
    assert state.kets() == [PhotonKet(Site.Q)], "Zero term was not pruned"


@pytest.mark.parametrize("amplitude", [float('nan'), float('inf'),
                                       complex(0, float('nan'))])
def test_make_state_rejects_non_finite(amplitude):
    """Test that NaN and infinite amplitudes are rejected."""
    with pytest.raises(InvalidAmplitudeError):
        make_state([(PairKet(C, C), amplitude)])


def test_canonical_order():
    """Test that photon kets come first and pairs are ordered by plus then
    minus path."""
    state = make_state([(PairKet(D, C), 0.5), (PairKet(C, D), 0.5),
                        (PhotonKet(Site.Q), 0.5), (PhotonKet(Site.P), 0.5)])
    assert state.kets() == [
        PhotonKet(Site.P),
        PhotonKet(Site.Q),
        PairKet(C, D),
        PairKet(D, C)
    ], "Kets are not in canonical order"


def test_absent_ket_has_zero_amplitude():
    assert initial_state().amplitude(PairKet(D, D)) == 0j


## Norm and Born rule Tests


def test_norm_squared():
    """Test the norm of a hand-built normalized state."""
    state = make_state([(PhotonKet(Site.Q), 0.5), (PairKet(C, D), 0.5j),
                        (PairKet(D, C), -0.5), (PairKet(D, D), 0.5j)])
    assert np.isclose(norm_squared(state), 1.0), "State is not normalized"


def test_random_state_is_normalized():
    rng = np.random.default_rng(7)
    kets = [PairKet(a, b) for a in (A, B) for b in (A, B)]
    for _ in range(100):
        assert abs(random_state(rng, kets).norm_squared() - 1.0) < 1e-12


def test_born_distribution():
    """Test that the Born rule maps kets onto detector outcomes."""
    state = make_state([(PhotonKet(Site.P), -0.5), (PairKet(D, D), 0.5j),
                        (PairKet(C, C), SQRT1_2)])
    dist = state.born_distribution()
    assert np.isclose(dist.probability(PhotonAt(Site.P)), 0.25)
    assert np.isclose(dist.probability(Detections(D, D)), 0.25)
    assert np.isclose(dist.probability(Detections(C, C)), 0.5)
    assert dist.probability(Detections(C, D)) == 0.0


def test_born_distribution_requires_terminal_paths():
    """Test that a state still inside the interferometers cannot be
    measured."""
    state = make_state([(PairKet(A, B), 1.0)])
    with pytest.raises(NotTerminalError):
        state.born_distribution()


## Lattice Tests


@pytest.mark.parametrize("amplitude", [0.5, -0.5j, SQRT1_2,
                                       1 / (2 * SQRT2), 0.5 + 0.5j,
                                       -2 / (2 * SQRT2)])
def test_lattice_check_accepts(amplitude):
    """Test that the amplitudes of the canonical experiments lie on the
    2 sqrt(2) lattice."""
    state = make_state([(PairKet(C, C), amplitude)])
    assert state.lattice_check(2 * SQRT2), "{} is not on the lattice".format(
        amplitude)


@pytest.mark.parametrize("amplitude", [0.3, math.sqrt(0.2) * 1j])
def test_lattice_check_rejects(amplitude):
    state = make_state([(PairKet(C, C), amplitude)])
    assert not state.lattice_check(2 * SQRT2)


def test_lattice_check_rejects_bad_scale():
    with pytest.raises(ParameterError):
        initial_state().lattice_check(0)


def test_allclose():
    first = make_state([(PairKet(C, C), 0.5)])
    second = make_state([(PairKet(C, C), 0.5 + 1e-14)])
    third = make_state([(PairKet(C, D), 0.5)])
    assert first.allclose(second)
    assert not first.allclose(third)


def test_empty_state_has_zero_norm():
    state = make_state([(PairKet(C, C), 0.5), (PairKet(C, C), -0.5)])
    assert norm_squared(state) == 0.0
    assert len(state) == 0


def test_lattice_check_at_scale_two():
    state = make_state([(PhotonKet(Site.Q), 0.5), (PairKet(D, D), -0.5)])
    assert state.lattice_check(2)
    assert make_state([(PairKet(C, C), 1 / 3)]).lattice_check(
        2 * SQRT2) is False
