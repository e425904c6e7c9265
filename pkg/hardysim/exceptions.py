"""Errors raised by hardysim.

All validation errors are ValueErrors. The command-line driver maps the
classes below onto its exit codes.
"""


class HardySimError(Exception):
    """Base class for every error raised by hardysim."""
    pass


class InvalidAmplitudeError(HardySimError, ValueError):
    """An amplitude is NaN or infinite."""
    pass


class ParameterError(HardySimError, ValueError):
    """A numeric parameter lies outside its admissible range."""
    pass


class PipelineError(HardySimError, ValueError):
    """A state was handed to a stage that cannot process it."""
    pass


class WrongStageError(PipelineError):
    """A state has support on paths that the optical element does not
    accept (e.g. BS2 applied to a state that never went through BS1)."""
    pass


class NotTerminalError(PipelineError):
    """A state still has support on non-terminal paths (s, a or b)."""
    pass


class NothingSurvivesError(PipelineError):
    """Post-selection on the surviving pair leaves nothing."""
    pass


class ExperimentFileError(HardySimError, ValueError):
    """Error in an experiment description.

    Args:
        message (:obj:`str`): What went wrong.
        line (:obj:`int`): 1-based line number of the offending line.
        key (:obj:`str`): The offending key, if known.
        source (:obj:`str`): Name of the file or `<string>`.
    """
    def __init__(self, message, line, key=None, source='<string>'):
        self.message = message
        self.line = line
        self.key = key
        self.source = source
        super(ExperimentFileError, self).__init__(str(self))

    def __str__(self):
        if self.key is None:
            return '{}:{}: {}'.format(self.source, self.line, self.message)
        return '{}:{}: {}: {}'.format(self.source, self.line, self.key,
                                      self.message)


class UnknownKeyError(ExperimentFileError):
    pass


class DuplicateKeyError(ExperimentFileError):
    pass


class MissingKeyError(ExperimentFileError):
    pass


class MalformedValueError(ExperimentFileError):
    pass


class TransmissivityRangeError(ExperimentFileError):
    pass
