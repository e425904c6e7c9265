from collections import namedtuple

import numpy as np

from hardysim.utils import EQUALITY_TOLERANCE, PathLabel, Site, \
    TERMINAL_PATHS


class Detections(namedtuple('Detections', ['plus', 'minus'])):
    """Both particles survive and fire one detector on each side.

    Args:
        plus (:py:class:`~hardysim.utils.PathLabel`): Output path (c or d)
            of the positron.
        minus (:py:class:`~hardysim.utils.PathLabel`): Output path (c or d)
            of the electron.
    """
    __slots__ = ()

    def sort_key(self):
        return (1, self.plus.value, self.minus.value)

    def __str__(self):
        return '{}+{}-'.format(self.plus, self.minus)


class PhotonAt(namedtuple('PhotonAt', ['site'])):
    """The pair annihilated into a photon at an intersection site."""
    __slots__ = ()

    def sort_key(self):
        return (0, self.site.value)

    def __str__(self):
        return 'γ{}'.format(self.site)


# Every outcome a single trial can produce, in canonical order.
ALL_OUTCOMES = tuple([PhotonAt(Site.P), PhotonAt(Site.Q)] + [
    Detections(plus, minus) for plus in TERMINAL_PATHS
    for minus in TERMINAL_PATHS
])


class OutcomeDistribution(object):
    """Born-rule probabilities over the joint outcomes of one experiment.

    Outcomes that are not listed have probability zero.

    Args:
        probabilities: A dict from :py:class:`.Detections` or
            :py:class:`.PhotonAt` to probabilities.

    Raises:
        ValueError: If a probability is negative or they do not sum to 1.
    """
    def __init__(self, probabilities):
        total = 0.0
        for outcome, probability in probabilities.items():
            if outcome not in ALL_OUTCOMES:
                raise ValueError('Unknown outcome {}'.format(outcome))
            if not np.isfinite(probability) or probability < 0:
                raise ValueError('Invalid probability {} for {}'.format(
                    probability, outcome))
            total += probability
        if abs(total - 1.0) > EQUALITY_TOLERANCE:
            raise ValueError(
                'Probabilities sum to {} instead of 1'.format(total))
        self._probabilities = {
            outcome: float(probabilities.get(outcome, 0.0))
            for outcome in ALL_OUTCOMES
        }

    @classmethod
    def uniform(cls, outcomes=ALL_OUTCOMES):
        return cls({outcome: 1.0 / len(outcomes) for outcome in outcomes})

    @classmethod
    def point_mass(cls, outcome):
        return cls({outcome: 1.0})

    def probability(self, outcome) -> float:
        return self._probabilities[outcome]

    def detection_probability(self, plus: PathLabel,
                              minus: PathLabel) -> float:
        return self._probabilities[Detections(plus, minus)]

    def items(self):
        """Returns (outcome, probability) pairs in canonical order."""
        return [(outcome, self._probabilities[outcome])
                for outcome in ALL_OUTCOMES]

    def __eq__(self, other):
        if not isinstance(other, OutcomeDistribution):
            return NotImplemented
        return all(
            abs(p - other.probability(o)) <= EQUALITY_TOLERANCE
            for o, p in self.items())

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return 'OutcomeDistribution({})'.format(', '.join(
            '{}: {:.6g}'.format(o, p) for o, p in self.items() if p > 0))
