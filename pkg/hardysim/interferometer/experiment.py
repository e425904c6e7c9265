from enum import Enum

from absl import logging

from hardysim.hardy.outcomes import Detections
from hardysim.interferometer.optics import Scheme, annihilate, bs1, bs2, \
    check_transmissivity, passthrough, reflectivity
from hardysim.state.statevec import StateVector, initial_state
from hardysim.utils import Arm, PathLabel, SQRT1_2


class BsSetting(Enum):
    """Whether a removable second-stage beam splitter is in place."""
    IN = 'in'
    OUT = 'out'

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return self.value


class ExperimentConfig(object):
    """One run of the gedanken experiment.

    Args:
        scheme (:py:class:`~hardysim.interferometer.optics.Scheme`): Geometry.
        plus_setting (:py:class:`.BsSetting`): BS2+ in or out.
        minus_setting (:py:class:`.BsSetting`): BS2- in or out.
        transmissivity (:obj:`float`): Transmission amplitude t of the BS2
            splitters that are in place. Defaults to 1/sqrt(2).

    Raises:
        ParameterError: If the transmissivity is outside [0, 1].
    """
    def __init__(self,
                 scheme: Scheme,
                 plus_setting: BsSetting,
                 minus_setting: BsSetting,
                 transmissivity: float = SQRT1_2):
        self.scheme = Scheme(scheme)
        self.plus_setting = BsSetting(plus_setting)
        self.minus_setting = BsSetting(minus_setting)
        self.transmissivity = check_transmissivity(transmissivity)

    @property
    def reflectivity(self) -> float:
        return reflectivity(self.transmissivity)

    def setting(self, arm: Arm) -> BsSetting:
        return self.plus_setting if arm is Arm.PLUS else self.minus_setting

    def with_transmissivity(self, t: float):
        return ExperimentConfig(self.scheme, self.plus_setting,
                                self.minus_setting, t)

    def label(self) -> str:
        """The E(sites; +setting,-setting) notation, e.g.
        E(P,Q; +out,-out)."""
        sites = ','.join(str(site) for site in self.scheme.sites)
        return 'E({}; +{},-{})'.format(sites, self.plus_setting,
                                       self.minus_setting)

    def __eq__(self, other):
        if not isinstance(other, ExperimentConfig):
            return NotImplemented
        return (self.scheme is other.scheme
                and self.plus_setting is other.plus_setting
                and self.minus_setting is other.minus_setting
                and self.transmissivity == other.transmissivity)

    def __hash__(self):
        return hash((self.scheme, self.plus_setting, self.minus_setting,
                     self.transmissivity))

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return 'ExperimentConfig({}, t={})'.format(self.label(),
                                                   self.transmissivity)


class CanonicalExperiment(Enum):
    """The four experiments of the Hardy-type argument.

    Values are the command-line aliases.
    """
    E_PQ_OUT_OUT = 'eq1'
    E_Q_IN_OUT = 'eq2'
    E_Q_OUT_IN = 'eq3'
    E_PQ_IN_IN = 'eq4'

    @property
    def config(self) -> ExperimentConfig:
        scheme, plus_setting, minus_setting = _CANONICAL_SETUPS[self]
        return ExperimentConfig(scheme, plus_setting, minus_setting)

    @classmethod
    def from_alias(cls, alias: str):
        return cls(alias)

    def __str__(self):
        return self.value


_CANONICAL_SETUPS = {
    CanonicalExperiment.E_PQ_OUT_OUT: (Scheme.A, BsSetting.OUT, BsSetting.OUT),
    CanonicalExperiment.E_Q_IN_OUT: (Scheme.B, BsSetting.IN, BsSetting.OUT),
    CanonicalExperiment.E_Q_OUT_IN: (Scheme.B, BsSetting.OUT, BsSetting.IN),
    CanonicalExperiment.E_PQ_IN_IN: (Scheme.A, BsSetting.IN, BsSetting.IN),
}


def run_experiment(config: ExperimentConfig) -> StateVector:
    """Evolves |s+ s-> through BS1, annihilation and the BS2 stage.

    Returns:
        :py:class:`~hardysim.state.statevec.StateVector`: The final state,
        supported on photon kets and c/d pair kets.
    """
    state = bs1(initial_state())
    state = annihilate(state, config.scheme)
    for arm in (Arm.PLUS, Arm.MINUS):
        if config.setting(arm) is BsSetting.IN:
            state = bs2(state, arm, config.transmissivity)
        else:
            state = passthrough(state, arm)
    logging.debug('{} -> {}'.format(config, state))
    return state


def dd_probability_curve(t_values):
    """P(d+, d-) of E(P,Q; +in,-in) as a function of the transmissivity.

    Returns:
        List of (t, probability) pairs; the closed form is t^2 (1 - t^2).

    Raises:
        ParameterError: If any t is outside [0, 1].
    """
    base = CanonicalExperiment.E_PQ_IN_IN.config
    curve = []
    for t in t_values:
        t = check_transmissivity(t)
        distribution = run_experiment(
            base.with_transmissivity(t)).born_distribution()
        curve.append(
            (t, distribution.probability(Detections(PathLabel.D,
                                                    PathLabel.D))))
    return curve
