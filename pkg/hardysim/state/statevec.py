"""Sparse two-particle state vectors.

A state is a superposition of basis kets: either a pair ket |x+ y-> naming the
path of the positron and of the electron, or a photon ket |γ>^P, |γ>^Q left
behind when the pair annihilated. All states are immutable.
"""
import cmath
from collections import namedtuple

from absl import logging

import numpy as np

from hardysim.exceptions import InvalidAmplitudeError, NotTerminalError, \
    ParameterError
from hardysim.hardy.outcomes import Detections, OutcomeDistribution, PhotonAt
from hardysim.utils import Arm, PRUNE_TOLERANCE, PathLabel, SQRT2, \
    is_near_integer


class PairKet(namedtuple('PairKet', ['plus', 'minus'])):
    """Both particles are in flight: the positron on path `plus` and the
    electron on path `minus`."""
    __slots__ = ()

    def sort_key(self):
        return (1, self.plus.value, self.minus.value)

    def path(self, arm: Arm) -> PathLabel:
        return self.plus if arm is Arm.PLUS else self.minus

    def with_path(self, arm: Arm, path: PathLabel):
        if arm is Arm.PLUS:
            return PairKet(path, self.minus)
        return PairKet(self.plus, path)

    def is_terminal(self) -> bool:
        return self.plus.is_terminal() and self.minus.is_terminal()

    def __str__(self):
        return '|{}+{}->'.format(self.plus, self.minus)


class PhotonKet(namedtuple('PhotonKet', ['site'])):
    """The pair annihilated into a photon at `site`."""
    __slots__ = ()

    def sort_key(self):
        return (0, self.site.value)

    def __str__(self):
        return '|γ>^{}'.format(self.site)


class StateVector(object):
    """A pure state as an association from basis kets to amplitudes.

    Use :py:func:`.make_state` to build states; the constructor expects
    already pruned and merged terms.

    Attributes:
        terms: Tuple of (ket, amplitude) pairs in canonical ket order.
    """
    def __init__(self, terms):
        self.terms = tuple(sorted(terms, key=lambda term: term[0].sort_key()))
        self._amplitudes = dict(self.terms)

    def amplitude(self, ket) -> complex:
        """Returns the amplitude of `ket` (zero if it is not present)."""
        return self._amplitudes.get(ket, 0j)

    def kets(self):
        return [ket for ket, _ in self.terms]

    def pair_terms(self):
        return [(ket, amp) for ket, amp in self.terms
                if isinstance(ket, PairKet)]

    def photon_terms(self):
        return [(ket, amp) for ket, amp in self.terms
                if isinstance(ket, PhotonKet)]

    def transform(self, ket_map):
        """Applies a linear map defined on basis kets.

        Args:
            ket_map: Callable taking a basis ket and returning a list of
                (ket, coefficient) pairs, the image of that ket.

        Returns:
            :py:class:`.StateVector`: The image of the state.
        """
        entries = []
        for ket, amplitude in self.terms:
            for image_ket, coefficient in ket_map(ket):
                entries.append((image_ket, amplitude * coefficient))
        return make_state(entries)

    def norm_squared(self) -> float:
        """Sum of the squared amplitude magnitudes."""
        return float(sum(abs(amplitude)**2 for _, amplitude in self.terms))

    def born_distribution(self) -> OutcomeDistribution:
        """Born-rule distribution over the joint detector outcomes.

        Raises:
            NotTerminalError: If a pair is still on an s, a or b path.
        """
        probabilities = {}
        for ket, amplitude in self.terms:
            if isinstance(ket, PhotonKet):
                outcome = PhotonAt(ket.site)
            elif ket.is_terminal():
                outcome = Detections(ket.plus, ket.minus)
            else:
                raise NotTerminalError(
                    'Cannot measure {}: the pair has not reached the '
                    'detectors'.format(ket))
            probabilities[outcome] = abs(amplitude)**2
        return OutcomeDistribution(probabilities)

    def lattice_check(self, scale: float) -> bool:
        """Checks that every amplitude sits on the lattice spanned by
        1/scale, allowing the √2-scaled sublattice.

        A real or imaginary part x passes when x * scale or x * scale / √2 is
        an integer within 1e-9.
        """
        if scale <= 0:
            raise ParameterError('Lattice scale must be positive')
        for _, amplitude in self.terms:
            for part in (amplitude.real, amplitude.imag):
                scaled = part * scale
                if not (is_near_integer(scaled)
                        or is_near_integer(scaled / SQRT2)):
                    return False
        return True

    def allclose(self, other, tolerance: float = 1e-12) -> bool:
        """Term-by-term comparison of two states."""
        kets = set(self.kets()) | set(other.kets())
        return all(
            abs(self.amplitude(ket) - other.amplitude(ket)) <= tolerance
            for ket in kets)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        if not self.terms:
            return 'StateVector(0)'
        return 'StateVector({})'.format(' + '.join(
            '({:.6g}){}'.format(amplitude, ket)
            for ket, amplitude in self.terms))


def _check_amplitude(ket, amplitude) -> complex:
    amplitude = complex(amplitude)
    if not (cmath.isfinite(amplitude)):
        raise InvalidAmplitudeError('Amplitude {} of {} is not finite'.format(
            amplitude, ket))
    return amplitude


def make_state(entries) -> StateVector:
    """Builds a state from (ket, amplitude) entries.

    Duplicate kets are summed and amplitudes with magnitude at or below
    1e-12 are dropped.

    Raises:
        InvalidAmplitudeError: If an amplitude is NaN or infinite.
    """
    merged = {}
    for ket, amplitude in entries:
        merged[ket] = merged.get(ket, 0j) + _check_amplitude(ket, amplitude)
    terms = [(ket, amplitude) for ket, amplitude in merged.items()
             if abs(amplitude) > PRUNE_TOLERANCE]
    if len(terms) < len(merged):
        logging.debug('Pruned {} vanishing terms'.format(
            len(merged) - len(terms)))
    return StateVector(terms)


def initial_state() -> StateVector:
    """The pair enters the interferometers: |s+ s->."""
    return make_state([(PairKet(PathLabel.S, PathLabel.S), 1.0)])


def norm_squared(state: StateVector) -> float:
    return state.norm_squared()


def random_state(rng, kets) -> StateVector:
    """Draws a normalized state with random complex amplitudes on `kets`.

    Args:
        rng: A :py:class:`numpy.random.Generator`.
        kets: The basis kets to spread the state over.
    """
    amplitudes = rng.normal(size=len(kets)) + 1j * rng.normal(size=len(kets))
    amplitudes /= np.linalg.norm(amplitudes)
    return make_state(zip(kets, amplitudes))
