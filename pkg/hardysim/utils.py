import logging as std_logging
import math
from enum import Enum

from absl import logging

# 1/sqrt(2) is always computed, never written out in decimals.
SQRT1_2 = 1.0 / math.sqrt(2.0)
SQRT2 = math.sqrt(2.0)

# Amplitudes with a magnitude at or below this value are not stored.
PRUNE_TOLERANCE = 1e-12
# Absolute tolerance for equality and zero tests on O(1) quantities.
EQUALITY_TOLERANCE = 1e-9


class Arm(Enum):
    """The two interferometer arms: the positron (+) and the electron (-)."""
    PLUS = '+'
    MINUS = '-'

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return self.value


class PathLabel(Enum):
    """Paths a particle can propagate along.

    `S` is the input path before BS1, `A` and `B` connect BS1 to BS2 and `C`
    and `D` are the output paths where the detectors sit.
    """
    A = 'a'
    B = 'b'
    C = 'c'
    D = 'd'
    S = 's'

    def is_terminal(self) -> bool:
        return self in (PathLabel.C, PathLabel.D)

    def __lt__(self, other):
        if not isinstance(other, PathLabel):
            return NotImplemented
        return self.value < other.value

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return self.value


class Site(Enum):
    """Points where the positron and electron paths intersect."""
    P = 'P'
    Q = 'Q'

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return self.value


TERMINAL_PATHS = (PathLabel.C, PathLabel.D)


def is_near_integer(value: float,
                    tolerance: float = EQUALITY_TOLERANCE) -> bool:
    return abs(value - round(value)) <= tolerance


def _format_fraction(numerator: int, denominator: str) -> str:
    if not denominator:
        return str(numerator)
    return '{}/{}'.format(numerator, denominator)


# Denominators tried, in order, when rendering an exact amplitude.
_EXACT_DENOMINATORS = ((1.0, ''), (2.0, '2'), (SQRT2, '√2'),
                       (2.0 * SQRT2, '(2√2)'))


def _exact_parts(value: float):
    for scale, denominator in _EXACT_DENOMINATORS:
        scaled = value * scale
        if is_near_integer(scaled):
            return int(round(scaled)), denominator
    return None


def exact_form(value: complex):
    """Renders a complex amplitude in exact form, e.g. ``i/(2√2)``.

    Returns:
        The rendered string, or None if either part has no exact form.
    """
    re_parts = _exact_parts(value.real)
    im_parts = _exact_parts(value.imag)
    if re_parts is None or im_parts is None:
        return None
    im_numerator, im_denominator = im_parts
    if im_numerator == 0:
        return _format_fraction(*re_parts)
    im_form = 'i' if abs(im_numerator) == 1 else '{}i'.format(
        abs(im_numerator))
    if im_denominator:
        im_form = '{}/{}'.format(im_form, im_denominator)
    sign = '-' if im_numerator < 0 else '+'
    if re_parts[0] == 0:
        return im_form if sign == '+' else '-' + im_form
    return '{} {} {}'.format(_format_fraction(*re_parts), sign, im_form)


def significant(value: float, digits: int = 12) -> float:
    """Rounds a value to the given number of significant digits."""
    return float('{:.{}g}'.format(value, digits))


def setup_logging(log_file_name: str = None, verbosity: int = None):
    """Sets up the absl logger.

    Args:
        log_file_name (:obj:`str`): If set, log records are also appended to
            this file.
        verbosity (:obj:`int`): absl verbosity level (e.g. logging.DEBUG).
    """
    if verbosity is not None:
        logging.set_verbosity(verbosity)
    if log_file_name is not None:
        handler = std_logging.FileHandler(log_file_name)
        handler.setFormatter(logging.PythonFormatter())
        logging.get_absl_logger().addHandler(handler)
    return logging.get_absl_logger()
