"""Plain-text experiment descriptions.

An experiment file is a sequence of ``key=value`` lines::

    # E(P,Q; +out,-out)
    name=eq1
    scheme=A
    bs2_plus=out
    bs2_minus=out
    transmissivity=1/sqrt2

``#`` starts a comment, blank lines are ignored and keys are case-sensitive.
``transmissivity`` is optional and defaults to 1/sqrt(2).
"""
import re
import unicodedata

from absl import logging

from hardysim.exceptions import DuplicateKeyError, MalformedValueError, \
    MissingKeyError, TransmissivityRangeError, UnknownKeyError
from hardysim.interferometer.experiment import BsSetting, ExperimentConfig
from hardysim.interferometer.optics import Scheme
from hardysim.utils import SQRT1_2

REQUIRED_KEYS = ('name', 'scheme', 'bs2_plus', 'bs2_minus')
OPTIONAL_KEYS = ('transmissivity', )
KEY_ORDER = REQUIRED_KEYS + OPTIONAL_KEYS

SQRT1_2_LITERAL = '1/sqrt2'

_DECIMAL = re.compile(r'^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$')


class ExperimentDoc(object):
    """A named experiment configuration.

    Args:
        name (:obj:`str`): Non-empty name without control characters or
            ``#``, and without leading or trailing whitespace.
        config (:py:class:`.ExperimentConfig`): The experiment.
    """
    def __init__(self, name: str, config: ExperimentConfig):
        if not is_valid_name(name):
            raise ValueError('Invalid experiment name {!r}'.format(name))
        self.name = name
        self.config = config

    def __eq__(self, other):
        if not isinstance(other, ExperimentDoc):
            return NotImplemented
        return self.name == other.name and self.config == other.config

    def __repr__(self):
        return self.__str__()

    def __str__(self):
        return 'ExperimentDoc(name={}, config={})'.format(
            self.name, self.config)


def is_valid_name(name) -> bool:
    """Whether a name survives a write and re-read unchanged."""
    if not name or name != name.strip() or '#' in name:
        return False
    return not any(unicodedata.category(ch) == 'Cc' for ch in name)


def _parse_enum(enum_cls, value, line, key, source):
    try:
        return enum_cls(value)
    except ValueError:
        raise MalformedValueError(
            '{!r} is not one of {}'.format(value,
                                           [e.value for e in enum_cls]),
            line, key, source)


def _parse_transmissivity(value, line, key, source) -> float:
    if value == SQRT1_2_LITERAL:
        return SQRT1_2
    if not _DECIMAL.match(value):
        raise MalformedValueError(
            '{!r} is neither a decimal nor {}'.format(value,
                                                      SQRT1_2_LITERAL), line,
            key, source)
    t = float(value)
    if not 0.0 <= t <= 1.0:
        raise TransmissivityRangeError('{} is outside [0, 1]'.format(t),
                                       line, key, source)
    return t


def parse_experiment(text: str, source: str = '<string>') -> ExperimentDoc:
    """Parses an experiment description.

    Args:
        text (:obj:`str`): The document; LF or CRLF line endings.
        source (:obj:`str`): Name used in diagnostics.

    Raises:
        ExperimentFileError: A subclass naming the line and key at fault.
    """
    values = {}
    lines = text.replace('\r\n', '\n').split('\n')
    for line_number, raw_line in enumerate(lines, start=1):
        line = raw_line.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise MalformedValueError('expected key=value, got {!r}'.format(
                line), line_number, None, source)
        key, value = (part.strip() for part in line.split('=', 1))
        if key not in KEY_ORDER:
            raise UnknownKeyError('unknown key', line_number, key, source)
        if key in values:
            raise DuplicateKeyError(
                'already set on line {}'.format(values[key][1]), line_number,
                key, source)
        if not value:
            raise MalformedValueError('empty value', line_number, key, source)
        values[key] = (value, line_number)

    end_line = len(lines)
    for key in REQUIRED_KEYS:
        if key not in values:
            raise MissingKeyError('required key is missing', end_line, key,
                                  source)

    name, name_line = values['name']
    if not is_valid_name(name):
        raise MalformedValueError('name contains control characters',
                                  name_line, 'name', source)
    scheme = _parse_enum(Scheme, values['scheme'][0], values['scheme'][1],
                         'scheme', source)
    plus_setting = _parse_enum(BsSetting, values['bs2_plus'][0],
                               values['bs2_plus'][1], 'bs2_plus', source)
    minus_setting = _parse_enum(BsSetting, values['bs2_minus'][0],
                                values['bs2_minus'][1], 'bs2_minus', source)
    t = SQRT1_2
    if 'transmissivity' in values:
        value, line_number = values['transmissivity']
        t = _parse_transmissivity(value, line_number, 'transmissivity',
                                  source)
    doc = ExperimentDoc(
        name, ExperimentConfig(scheme, plus_setting, minus_setting, t))
    logging.debug('Parsed {} from {}'.format(doc, source))
    return doc


def serialize_experiment(doc: ExperimentDoc) -> str:
    """Writes a document in canonical key order; the default transmissivity
    is left out."""
    config = doc.config
    lines = [
        'name={}'.format(doc.name),
        'scheme={}'.format(config.scheme),
        'bs2_plus={}'.format(config.plus_setting),
        'bs2_minus={}'.format(config.minus_setting),
    ]
    if config.transmissivity != SQRT1_2:
        lines.append('transmissivity={!r}'.format(config.transmissivity))
    return '\n'.join(lines) + '\n'


def read_experiment_file(path: str) -> ExperimentDoc:
    """Reads and parses an experiment file.

    Raises:
        OSError: The file cannot be opened.
        ExperimentFileError: The file is not UTF-8 or does not parse.
    """
    with open(path, 'rb') as f:
        data = f.read()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        line_number = data[:e.start].count(b'\n') + 1
        raise MalformedValueError(
            'byte 0x{:02x} is not valid UTF-8'.format(data[e.start]),
            line_number, None, path)
    return parse_experiment(text, source=path)


def write_experiment_file(doc: ExperimentDoc, path: str):
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(serialize_experiment(doc))
