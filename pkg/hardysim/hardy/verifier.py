"""Quantum predictions against local realism.

The quantum side reads four zero/non-zero facts off the outcome
distributions of the canonical experiments; the classical side asks how often
an LHV model obeying the same zero facts can produce D+(in) D-(in) = 1.
"""
from collections import OrderedDict

from absl import logging

from hardysim.exceptions import ParameterError
from hardysim.hardy.lhv import HardyConstraints, lhv_max_target
from hardysim.hardy.outcomes import ALL_OUTCOMES, OutcomeDistribution
from hardysim.interferometer.experiment import CanonicalExperiment, \
    run_experiment
from hardysim.interferometer.optics import check_transmissivity
from hardysim.utils import EQUALITY_TOLERANCE, PathLabel, SQRT1_2

C, D = PathLabel.C, PathLabel.D


def zero_events(dist: OutcomeDistribution, eps: float = EQUALITY_TOLERANCE):
    """Outcomes with probability below `eps`, in canonical order."""
    if eps <= 0:
        raise ParameterError('eps must be positive')
    return [outcome for outcome in ALL_OUTCOMES
            if dist.probability(outcome) < eps]


def check_eq5(dist_out_out: OutcomeDistribution,
              eps: float = EQUALITY_TOLERANCE) -> bool:
    """D+(out) D-(out) = 0: both d-detectors never fire together."""
    return dist_out_out.detection_probability(D, D) < eps


def check_eq6(dist_in_out: OutcomeDistribution,
              eps: float = EQUALITY_TOLERANCE) -> bool:
    """D+(in) = 1 implies D-(out) = 1: (d+, c-) never happens."""
    return dist_in_out.detection_probability(D, C) < eps


def check_eq7(dist_out_in: OutcomeDistribution,
              eps: float = EQUALITY_TOLERANCE) -> bool:
    """D-(in) = 1 implies D+(out) = 1: (c+, d-) never happens."""
    return dist_out_in.detection_probability(C, D) < eps


def target_probability(dist_in_in: OutcomeDistribution) -> float:
    """Probability of D+(in) D-(in) = 1."""
    return dist_in_in.detection_probability(D, D)


class HardyVerdict(object):
    """Outcome of confronting the quantum predictions with local realism.

    Attributes:
        eq5_holds, eq6_holds, eq7_holds (:obj:`bool`): Whether each zero
            constraint holds quantum mechanically.
        target_probability (:obj:`float`): Quantum probability of
            D+(in) D-(in) = 1.
        lhv_max (:obj:`float`): Best LHV value of that probability under the
            constraints that hold.
        contradiction (:obj:`bool`): All constraints hold and quantum
            mechanics beats every LHV model.
        t (:obj:`float`): Transmissivity used for the target experiment.
        distributions: OrderedDict from
            :py:class:`~hardysim.interferometer.experiment.CanonicalExperiment`
            to its :py:class:`~hardysim.hardy.outcomes.OutcomeDistribution`.
    """
    def __init__(self,
                 eq5_holds,
                 eq6_holds,
                 eq7_holds,
                 target_probability,
                 lhv_max,
                 t=SQRT1_2,
                 distributions=None):
        self.eq5_holds = bool(eq5_holds)
        self.eq6_holds = bool(eq6_holds)
        self.eq7_holds = bool(eq7_holds)
        self.target_probability = float(target_probability)
        self.lhv_max = float(lhv_max)
        self.t = t
        self.distributions = distributions or OrderedDict()
        self.contradiction = (self.eq5_holds and self.eq6_holds
                              and self.eq7_holds and self.target_probability >
                              self.lhv_max + EQUALITY_TOLERANCE)

    @property
    def gap(self) -> float:
        return self.target_probability - self.lhv_max

    def constraints(self) -> HardyConstraints:
        return HardyConstraints(self.eq5_holds, self.eq6_holds,
                                self.eq7_holds)

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return ('HardyVerdict(eq5={}, eq6={}, eq7={}, target={:.12g}, '
                'lhv_max={:.12g}, contradiction={})'.format(
                    self.eq5_holds, self.eq6_holds, self.eq7_holds,
                    self.target_probability, self.lhv_max,
                    self.contradiction))


def canonical_distributions(t: float = SQRT1_2,
                            uniform_splitters: bool = False):
    """Runs the four canonical experiments.

    Args:
        t (:obj:`float`): Transmissivity of the target experiment
            E(P,Q; +in,-in).
        uniform_splitters (:obj:`bool`): If True, every BS2 uses t; otherwise
            the constraint experiments keep their 50/50 splitters.
    """
    distributions = OrderedDict()
    for experiment in CanonicalExperiment:
        config = experiment.config
        if uniform_splitters or experiment is CanonicalExperiment.E_PQ_IN_IN:
            config = config.with_transmissivity(t)
        distributions[experiment] = run_experiment(config).born_distribution()
    return distributions


def verify(t: float = SQRT1_2,
           uniform_splitters: bool = False,
           eps: float = EQUALITY_TOLERANCE) -> HardyVerdict:
    """Runs the four experiments and confronts them with local realism.

    Args:
        t (:obj:`float`): Transmissivity of the target experiment, in [0, 1].
        uniform_splitters (:obj:`bool`): Apply t to every BS2, including the
            ones of the constraint experiments.
        eps (:obj:`float`): Zero threshold for the constraint checks.

    Raises:
        ParameterError: If t is outside [0, 1].
    """
    t = check_transmissivity(t)
    if t in (0.0, 1.0):
        logging.warning('Transmissivity {} is a degenerate splitter'.format(t))
    distributions = canonical_distributions(t, uniform_splitters)
    eq5 = check_eq5(distributions[CanonicalExperiment.E_PQ_OUT_OUT], eps)
    eq6 = check_eq6(distributions[CanonicalExperiment.E_Q_IN_OUT], eps)
    eq7 = check_eq7(distributions[CanonicalExperiment.E_Q_OUT_IN], eps)
    target = target_probability(distributions[CanonicalExperiment.E_PQ_IN_IN])
    lhv_max = lhv_max_target(HardyConstraints(eq5, eq6, eq7))
    verdict = HardyVerdict(eq5, eq6, eq7, target, lhv_max, t, distributions)
    logging.info('t={:.12g}: {}'.format(t, verdict))
    return verdict
