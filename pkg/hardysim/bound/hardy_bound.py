"""Hardy probability for the standard two-qubit scenario.

The state is cos(theta)|00> + sin(theta)|11>. Each side measures one of two
real projective bases; in the basis at angle x the outcome "1" projects onto
cos(x)|0> + sin(x)|1> and "not-1" onto the orthogonal vector at x + pi/2.

The Hardy chain asks for

    P(1, 1 | alpha2, beta2) = 0
    P(1, not-1 | alpha1, beta2) = 0
    P(not-1, 1 | alpha2, beta1) = 0

while maximising the target P(1, 1 | alpha1, beta1).
"""
import math

from absl import logging

import numpy as np

from scipy.optimize import minimize_scalar

from hardysim.exceptions import ParameterError

# Weight of the residuals in the penalized objective.
PENALTY_WEIGHT = 1e3
# A point is feasible when every residual is below this value.
FEASIBILITY_TOLERANCE = 1e-6
THETA_MAX = math.pi / 4


class HardyBoundParams(object):
    """Schmidt angle and the four measurement angles, all in radians.

    Raises:
        ParameterError: If theta is outside [0, pi/4] or an angle outside
            [0, pi).
    """
    def __init__(self, theta, alpha1, alpha2, beta1, beta2):
        if not 0.0 <= theta <= THETA_MAX:
            raise ParameterError(
                'theta {} is outside [0, pi/4]'.format(theta))
        for name, angle in (('alpha1', alpha1), ('alpha2', alpha2),
                            ('beta1', beta1), ('beta2', beta2)):
            if not 0.0 <= angle < math.pi:
                raise ParameterError('{} {} is outside [0, pi)'.format(
                    name, angle))
        self.theta = float(theta)
        self.alpha1 = float(alpha1)
        self.alpha2 = float(alpha2)
        self.beta1 = float(beta1)
        self.beta2 = float(beta2)

    def as_numpy_array(self):
        return np.array(
            [self.theta, self.alpha1, self.alpha2, self.beta1, self.beta2])

    def __eq__(self, other):
        if not isinstance(other, HardyBoundParams):
            return NotImplemented
        return np.array_equal(self.as_numpy_array(), other.as_numpy_array())

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return ('HardyBoundParams(theta={:.12g}, alpha1={:.12g}, '
                'alpha2={:.12g}, beta1={:.12g}, beta2={:.12g})'.format(
                    self.theta, self.alpha1, self.alpha2, self.beta1,
                    self.beta2))


class HardyBoundResult(object):
    """Target probability and constraint residuals of one parameter point.

    Attributes:
        target (:obj:`float`): P(1, 1 | alpha1, beta1).
        residuals: The three constraint probabilities.
        params (:py:class:`.HardyBoundParams`): Where they were evaluated.
    """
    def __init__(self, target, residuals, params):
        self.target = float(target)
        self.residuals = tuple(float(r) for r in residuals)
        self.params = params

    @property
    def feasible(self) -> bool:
        return all(r < FEASIBILITY_TOLERANCE for r in self.residuals)

    def __eq__(self, other):
        if not isinstance(other, HardyBoundResult):
            return NotImplemented
        return (self.target == other.target
                and self.residuals == other.residuals
                and self.params == other.params)

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return 'HardyBoundResult(target={:.12g}, residuals={}, {})'.format(
            self.target, self.residuals, self.params)


def wrap_angle(angle: float) -> float:
    """Maps an angle into [0, pi); a basis at x and x + pi is the same."""
    wrapped = float(np.mod(angle, math.pi))
    return 0.0 if wrapped >= math.pi else wrapped


def _amplitude(theta, alpha, beta):
    """<u(alpha) u(beta)|psi(theta)>; broadcasts over numpy arrays."""
    return (np.cos(theta) * np.cos(alpha) * np.cos(beta) +
            np.sin(theta) * np.sin(alpha) * np.sin(beta))


def _probability(theta, alpha, beta, plus_outcome=1, minus_outcome=1):
    alpha = alpha + (0.0 if plus_outcome else math.pi / 2)
    beta = beta + (0.0 if minus_outcome else math.pi / 2)
    return _amplitude(theta, alpha, beta)**2


def joint_distribution(theta: float, alpha: float, beta: float):
    """Outcome distribution of one setting pair.

    Returns:
        A 2x2 numpy array; entry [x, y] is the probability that the plus side
        reports x and the minus side reports y, with index 0 meaning "1" and
        index 1 meaning "not-1".
    """
    return np.array([[
        _probability(theta, alpha, beta, plus_outcome, minus_outcome)
        for minus_outcome in (1, 0)
    ] for plus_outcome in (1, 0)])


def _evaluate(theta, alpha1, alpha2, beta1, beta2):
    target = _probability(theta, alpha1, beta1, 1, 1)
    residuals = (_probability(theta, alpha2, beta2, 1, 1),
                 _probability(theta, alpha1, beta2, 1, 0),
                 _probability(theta, alpha2, beta1, 0, 1))
    return target, residuals


def hardy_probability(params: HardyBoundParams) -> HardyBoundResult:
    """Evaluates the Hardy target and the three constraint residuals."""
    target, residuals = _evaluate(params.theta, params.alpha1, params.alpha2,
                                  params.beta1, params.beta2)
    return HardyBoundResult(target, residuals, params)


def _zero_partner(theta, angle):
    """Angle y with <u(angle)|<u(y)| psi> = 0.

    The amplitude is A cos(y) + B sin(y), which vanishes at y = atan2(-A, B).
    The state is symmetric, so this serves either side.
    """
    a = np.cos(theta) * np.cos(angle)
    b = np.sin(theta) * np.sin(angle)
    return wrap_angle(math.atan2(-a, b))


def project_feasible(theta: float, alpha2: float) -> HardyBoundParams:
    """Solves the three zero constraints exactly for beta2, alpha1, beta1.

    Args:
        theta (:obj:`float`): Schmidt angle.
        alpha2 (:obj:`float`): The free plus-side angle.
    """
    alpha2 = wrap_angle(alpha2)
    # P(1, 1 | alpha2, beta2) = 0.
    beta2 = _zero_partner(theta, alpha2)
    # P(1, not-1 | alpha1, beta2) = 0.
    alpha1 = _zero_partner(theta, beta2 + math.pi / 2)
    # P(not-1, 1 | alpha2, beta1) = 0.
    beta1 = _zero_partner(theta, alpha2 + math.pi / 2)
    return HardyBoundParams(theta, alpha1, alpha2, beta1, beta2)


def _penalized(theta, angles):
    """Negative target plus weighted residuals; `angles` is a 4 x n array
    ordered alpha1, alpha2, beta1, beta2."""
    target, residuals = _evaluate(theta, *angles)
    return -target + PENALTY_WEIGHT * sum(residuals)


def _scan_alpha2(theta, grid_density):
    """Best feasible alpha2 on an even grid over [0, pi)."""
    def target(alpha2):
        return hardy_probability(project_feasible(theta, alpha2)).target

    return max(np.linspace(0.0, math.pi, grid_density, endpoint=False),
               key=target)


def _coordinate_descent(theta, start, grid_density, refinement_rounds):
    """Cyclic coordinate search over the four angles from `start`, with a
    window that starts at one grid spacing and shrinks each round.

    The current value is always a candidate, so the penalized objective
    never increases. Fully deterministic.
    """
    angles = np.array(start, dtype=float)
    half_width = math.pi / grid_density
    offsets = np.append(np.linspace(-1.0, 1.0, grid_density), 0.0)
    for _ in range(refinement_rounds):
        for k in range(4):
            candidates = np.tile(angles[:, None], (1, len(offsets)))
            candidates[k] = angles[k] + half_width * offsets
            values = _penalized(theta, candidates)
            angles[k] = candidates[k, int(np.argmin(values))]
        half_width *= 4.0 / grid_density
    return [wrap_angle(angle) for angle in angles]


def _refine_scalar(fn, center, half_width, lower=None, upper=None):
    lo, hi = center - half_width, center + half_width
    if lower is not None:
        lo = max(lo, lower)
    if upper is not None:
        hi = min(hi, upper)
    if hi <= lo:
        return center
    best = minimize_scalar(fn,
                           bounds=(lo, hi),
                           method='bounded',
                           options={'xatol': 1e-12})
    return best.x if best.fun <= fn(center) else center


def _polish(theta, alpha2, grid_density, refinement_rounds, lock_theta):
    """Projects onto the feasible manifold at `alpha2` and refines alpha2
    (and theta) in windows around it."""
    def negative_target(theta_value, alpha2_value):
        return -hardy_probability(project_feasible(theta_value,
                                                   alpha2_value)).target

    alpha_width = 2.0 * math.pi / grid_density
    theta_width = THETA_MAX / grid_density
    for _ in range(refinement_rounds):
        alpha2 = _refine_scalar(lambda a: negative_target(theta, a), alpha2,
                                alpha_width)
        if not lock_theta:
            theta = _refine_scalar(lambda th: negative_target(th, alpha2),
                                   theta, theta_width, 0.0, THETA_MAX)
        alpha_width /= 2.0
        theta_width /= 2.0
    return hardy_probability(project_feasible(theta, alpha2))


def trivial_result() -> HardyBoundResult:
    """A feasible point with target 0 on the product state."""
    return hardy_probability(
        HardyBoundParams(0.0, 0.0, math.pi / 2, math.pi / 2, 0.0))


def optimize_bound(grid_density: int = 32,
                   refinement_rounds: int = 3,
                   theta: float = None) -> HardyBoundResult:
    """Searches for the largest feasible Hardy probability.

    For each Schmidt angle on a grid over [0, pi/4], the best feasible point
    of a coarse alpha2 scan seeds a penalized cyclic coordinate search over
    the four measurement angles. The polish projects the descended alpha2
    back onto the feasible manifold and refines it locally. The best
    feasible result over the grid is returned, ties going to the smaller
    theta.

    Args:
        grid_density (:obj:`int`): Points per grid axis, at least 8.
        refinement_rounds (:obj:`int`): Rounds of coordinate search and of
            polish, at least 1.
        theta (:obj:`float`): If set, the Schmidt angle is locked to this
            value.

    Raises:
        ParameterError: If the grid or the rounds are too small, or theta is
            outside [0, pi/4].
    """
    if grid_density < 8:
        raise ParameterError(
            'grid_density must be at least 8, got {}'.format(grid_density))
    if refinement_rounds < 1:
        raise ParameterError('refinement_rounds must be at least 1, '
                             'got {}'.format(refinement_rounds))
    if theta is not None:
        if not 0.0 <= theta <= THETA_MAX:
            raise ParameterError(
                'theta {} is outside [0, pi/4]'.format(theta))
        thetas = [float(theta)]
    else:
        thetas = list(np.linspace(0.0, THETA_MAX, grid_density))

    best = trivial_result()
    for theta_value in thetas:
        seed = project_feasible(theta_value,
                                _scan_alpha2(theta_value, grid_density))
        _, alpha2, _, _ = _coordinate_descent(
            theta_value, [seed.alpha1, seed.alpha2, seed.beta1, seed.beta2],
            grid_density, refinement_rounds)
        result = _polish(theta_value, alpha2, grid_density,
                         refinement_rounds, theta is not None)
        logging.debug('theta={:.6f}: {}'.format(theta_value, result))
        if result.feasible and result.target > best.target:
            best = result
    logging.info('Best feasible Hardy probability {:.12g} at {}'.format(
        best.target, best.params))
    return best
