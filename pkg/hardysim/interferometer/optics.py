"""Optical elements of the two interferometers.

Every element acts on one particle's path and leaves the other particle and
any photon untouched, except annihilation which couples the two arms at the
intersection points P (paths a+ and a-) and Q (paths b+ and b-).
"""
import math
from enum import Enum

from absl import logging

from hardysim.exceptions import ParameterError, WrongStageError
from hardysim.state.statevec import PairKet, PhotonKet, StateVector
from hardysim.utils import Arm, PathLabel, SQRT1_2, Site


class Scheme(Enum):
    """Interferometer geometry.

    Scheme A has two intersection points (P and Q), scheme B only Q.
    """
    A = 'A'
    B = 'B'

    @property
    def sites(self):
        if self is Scheme.A:
            return (Site.P, Site.Q)
        return (Site.Q, )

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return self.value


# Path pair that meets at each intersection site.
INTERSECTIONS = {
    Site.P: PairKet(PathLabel.A, PathLabel.A),
    Site.Q: PairKet(PathLabel.B, PathLabel.B),
}

# |s> -> (|b> + i|a>)/sqrt(2)
BS1_RULE = {
    PathLabel.S: ((PathLabel.B, SQRT1_2), (PathLabel.A, 1j * SQRT1_2)),
}

# A removed BS2 lets a run into c and b run into d.
PASSTHROUGH_RULE = {
    PathLabel.A: ((PathLabel.C, 1.0), ),
    PathLabel.B: ((PathLabel.D, 1.0), ),
}


def check_transmissivity(t: float) -> float:
    if not 0.0 <= t <= 1.0:
        raise ParameterError(
            'Transmissivity {} is outside [0, 1]'.format(t))
    return float(t)


def reflectivity(t: float) -> float:
    """Reflection amplitude r = sqrt(1 - t^2) of a lossless splitter."""
    return math.sqrt(max(0.0, 1.0 - t * t))


def bs2_rule(t: float):
    """Second-stage splitter: a -> t c + i r d, b -> t d + i r c."""
    r = reflectivity(t)
    return {
        PathLabel.A: ((PathLabel.C, t), (PathLabel.D, 1j * r)),
        PathLabel.B: ((PathLabel.D, t), (PathLabel.C, 1j * r)),
    }


def apply_arm_rule(state: StateVector, arm: Arm, rule,
                   element: str) -> StateVector:
    """Applies a single-particle path rule to one arm.

    Args:
        state (:py:class:`~hardysim.state.statevec.StateVector`): Input.
        arm (:py:class:`~hardysim.utils.Arm`): The arm the element sits on.
        rule: Dict from input path to (output path, coefficient) pairs.
        element (:obj:`str`): Element name, used in error messages.

    Raises:
        WrongStageError: If the arm carries a path the rule does not accept.
    """
    def ket_map(ket):
        if isinstance(ket, PhotonKet):
            return [(ket, 1.0)]
        path = ket.path(arm)
        if path not in rule:
            raise WrongStageError(
                '{} on arm {} cannot act on {}: path {} is not one of {}'.
                format(element, arm, ket, path, sorted(rule)))
        return [(ket.with_path(arm, out_path), coefficient)
                for out_path, coefficient in rule[path]]

    return state.transform(ket_map)


def bs1(state: StateVector) -> StateVector:
    """Sends both particles through their first beam splitter.

    Raises:
        WrongStageError: If the state has support outside |s+ s->.
    """
    for ket in state.kets():
        if isinstance(ket, PhotonKet):
            raise WrongStageError(
                'BS1 cannot act on photon ket {}'.format(ket))
    state = apply_arm_rule(state, Arm.PLUS, BS1_RULE, 'BS1')
    return apply_arm_rule(state, Arm.MINUS, BS1_RULE, 'BS1')


def annihilate(state: StateVector, scheme: Scheme) -> StateVector:
    """Converts the pair into a photon wherever both particles meet.

    The amplitude of the meeting path pair is carried over unchanged to the
    photon ket of that site.

    Raises:
        WrongStageError: If the state already holds photons or a particle is
            not between BS1 and BS2.
    """
    sources = {INTERSECTIONS[site]: PhotonKet(site) for site in scheme.sites}
    between_splitters = (PathLabel.A, PathLabel.B)

    def ket_map(ket):
        if isinstance(ket, PhotonKet):
            raise WrongStageError(
                'The pair already annihilated into {}'.format(ket))
        if (ket.plus not in between_splitters
                or ket.minus not in between_splitters):
            raise WrongStageError(
                '{} is not between BS1 and BS2'.format(ket))
        return [(sources.get(ket, ket), 1.0)]

    result = state.transform(ket_map)
    logging.debug('Annihilation with scheme {}: {}'.format(scheme, result))
    return result


def bs2(state: StateVector, arm: Arm, t: float = SQRT1_2) -> StateVector:
    """Sends one particle through its second beam splitter.

    Args:
        state (:py:class:`~hardysim.state.statevec.StateVector`): Input.
        arm (:py:class:`~hardysim.utils.Arm`): Which particle.
        t (:obj:`float`): Transmission amplitude; 1/sqrt(2) is the 50/50
            splitter.

    Raises:
        ParameterError: If t is outside [0, 1].
        WrongStageError: If the particle is not on path a or b.
    """
    t = check_transmissivity(t)
    return apply_arm_rule(state, arm, bs2_rule(t), 'BS2')


def passthrough(state: StateVector, arm: Arm) -> StateVector:
    """Routes one particle past a removed BS2 (a -> c, b -> d)."""
    return apply_arm_rule(state, arm, PASSTHROUGH_RULE, 'passthrough')
