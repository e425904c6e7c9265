"""Entanglement analysis of the pair that survived annihilation."""
from enum import Enum

from absl import logging

import numpy as np

from hardysim.exceptions import NotTerminalError, NothingSurvivesError
from hardysim.state.statevec import PairKet, StateVector
from hardysim.utils import EQUALITY_TOLERANCE, PRUNE_TOLERANCE, SQRT1_2, \
    TERMINAL_PATHS


class BellLabel(Enum):
    """Bell states recognised in the survivor matrix.

    The value is the 2x2 amplitude pattern indexed by (plus path, minus path)
    with c before d.
    """
    PSI = ((0.0, 1.0), (1.0, 0.0))
    PHI = ((1.0, 0.0), (0.0, 1.0))

    @property
    def pattern(self):
        return np.array(self.value, dtype=complex)

    def __str__(self):
        return 'Psi' if self is BellLabel.PSI else 'Phi'


class SchmidtReport(object):
    """Schmidt decomposition of the post-selected pair.

    Attributes:
        singular_values: The two Schmidt coefficients in descending order.
        entropy_bits (:obj:`float`): Entanglement entropy in bits.
        survival_probability (:obj:`float`): Probability that the pair
            survives annihilation.
        bell_label (:py:class:`.BellLabel`): Bell state matched by the
            survivors, or None.
        bell_coefficient (:obj:`complex`): Coefficient c such that the
            (unnormalized) survivors equal c times the normalized Bell state,
            or None when no label was assigned.
    """
    def __init__(self, singular_values, entropy_bits, survival_probability,
                 bell_label=None, bell_coefficient=None):
        self.singular_values = tuple(float(s) for s in singular_values)
        self.entropy_bits = float(entropy_bits)
        self.survival_probability = float(survival_probability)
        self.bell_label = bell_label
        self.bell_coefficient = bell_coefficient

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return ('SchmidtReport(singular_values={}, entropy_bits={:.12g}, '
                'survival_probability={:.12g}, bell_label={})'.format(
                    self.singular_values, self.entropy_bits,
                    self.survival_probability, self.bell_label))


def survivor_matrix(state: StateVector):
    """Collects the pair amplitudes into a 2x2 matrix indexed by
    (plus path, minus path), c before d. Photon terms are discarded.

    Raises:
        NotTerminalError: If a pair ket is not on the c/d output paths.
    """
    matrix = np.zeros((2, 2), dtype=complex)
    for ket, amplitude in state.pair_terms():
        if not ket.is_terminal():
            raise NotTerminalError(
                '{} is not on the detector paths'.format(ket))
        matrix[TERMINAL_PATHS.index(ket.plus),
               TERMINAL_PATHS.index(ket.minus)] = amplitude
    return matrix


def entanglement_entropy(singular_values) -> float:
    """Von Neumann entropy in bits, using 0 log 0 = 0."""
    weights = np.asarray(singular_values, dtype=float)**2
    weights = weights[weights > PRUNE_TOLERANCE]
    entropy = float(-np.sum(weights * np.log2(weights)))
    return min(max(entropy, 0.0), 1.0)


def match_bell_state(matrix):
    """Matches a normalized survivor matrix against the Bell patterns.

    The matrix is divided by its largest-magnitude entry, which removes any
    global phase, before the comparison.

    Returns:
        The matching :py:class:`.BellLabel` or None.
    """
    pivot = matrix.flat[np.argmax(np.abs(matrix))]
    rephased = matrix / pivot
    for label in BellLabel:
        if np.allclose(rephased,
                       label.pattern,
                       rtol=0,
                       atol=EQUALITY_TOLERANCE):
            return label
    return None


def schmidt_report(state: StateVector) -> SchmidtReport:
    """Post-selects on survival and decomposes the surviving pair.

    Raises:
        NothingSurvivesError: If the pair never survives annihilation.
        NotTerminalError: If the pair has not reached the detectors.
    """
    raw = survivor_matrix(state)
    survival = float(np.sum(np.abs(raw)**2))
    if survival <= PRUNE_TOLERANCE:
        raise NothingSurvivesError(
            'The pair annihilates in every trial; nothing to post-select')
    normalized = raw / np.sqrt(survival)
    singular_values = np.linalg.svd(normalized, compute_uv=False)
    singular_values = np.sort(singular_values)[::-1]
    entropy = entanglement_entropy(singular_values)

    label, coefficient = None, None
    if np.allclose(singular_values, SQRT1_2, rtol=0, atol=EQUALITY_TOLERANCE):
        label = match_bell_state(normalized)
    if label is not None:
        bell_state = label.pattern * SQRT1_2
        coefficient = complex(np.sum(np.conj(bell_state) * raw))
    logging.debug('Survival {:.6g}, singular values {}, label {}'.format(
        survival, singular_values, label))
    return SchmidtReport(singular_values, entropy, survival, label,
                         coefficient)
