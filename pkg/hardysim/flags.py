from absl import flags

import hardysim.bound.flags
import hardysim.hardy.flags
import hardysim.interferometer.flags  # noqa: F401

FLAGS = flags.FLAGS

flags.DEFINE_string('log_file_name', None, 'Name of the log file')
flags.DEFINE_bool('json', False,
                  'True to emit JSON lines instead of human-readable tables')
flags.DEFINE_string(
    'out', None, 'File to write the sweep CSV to. Defaults to stdout')
