"""Deterministic local hidden variable models.

A hidden variable fixes, for each particle and each BS2 setting, whether the
d-detector fires. With two particles and two settings there are 16 such
strategies; mixtures of them cannot do better on a linear target than the
best pure strategy, so enumeration suffices.
"""
import itertools
from collections import namedtuple

from hardysim.exceptions import ParameterError


class LhvStrategy(
        namedtuple('LhvStrategy',
                   ['d_plus_in', 'd_plus_out', 'd_minus_in',
                    'd_minus_out'])):
    """Predetermined d-detector outcomes D+(in), D+(out), D-(in), D-(out)."""
    __slots__ = ()

    def target(self) -> int:
        """D+(in) D-(in), the event the quantum prediction gives 25% of
        the time."""
        return self.d_plus_in & self.d_minus_in

    def bits(self) -> str:
        return ''.join(str(bit) for bit in self)

    def __str__(self):
        return 'LhvStrategy({})'.format(self.bits())


class HardyConstraints(namedtuple('HardyConstraints', ['eq5', 'eq6',
                                                       'eq7'])):
    """Which zero-probability constraints an LHV model must respect.

    eq5: D+(out) D-(out) = 0.
    eq6: D+(in) = 1 implies D-(out) = 1.
    eq7: D-(in) = 1 implies D+(out) = 1.
    """
    __slots__ = ()

    @classmethod
    def all(cls):
        return cls(True, True, True)

    @classmethod
    def none(cls):
        return cls(False, False, False)

    @classmethod
    def from_names(cls, names):
        """Builds constraints from names such as ['eq5', 'eq7']."""
        names = set(names)
        unknown = names - set(cls._fields)
        if unknown:
            raise ParameterError('Unknown constraints {}'.format(
                sorted(unknown)))
        return cls(*(field in names for field in cls._fields))

    def names(self):
        return [name for name, enabled in zip(self._fields, self) if enabled]


def all_strategies():
    """The 16 deterministic strategies in lexicographic bit order."""
    return [LhvStrategy(*bits) for bits in itertools.product((0, 1), repeat=4)]


def violated_constraints(strategy: LhvStrategy,
                         constraints: HardyConstraints):
    """Names of the enabled constraints that `strategy` breaks."""
    violated = []
    if constraints.eq5 and strategy.d_plus_out and strategy.d_minus_out:
        violated.append('eq5')
    if constraints.eq6 and strategy.d_plus_in and not strategy.d_minus_out:
        violated.append('eq6')
    if constraints.eq7 and strategy.d_minus_in and not strategy.d_plus_out:
        violated.append('eq7')
    return violated


def lhv_admissible(constraints: HardyConstraints):
    """Strategies satisfying every enabled constraint, in enumeration
    order."""
    return [
        strategy for strategy in all_strategies()
        if not violated_constraints(strategy, constraints)
    ]


def lhv_max_target(constraints: HardyConstraints) -> float:
    """Largest probability of D+(in) D-(in) = 1 any LHV model can reach."""
    admissible = lhv_admissible(constraints)
    if not admissible:
        return 0.0
    return float(max(strategy.target() for strategy in admissible))
