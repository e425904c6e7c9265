from absl import flags

from hardysim.utils import SQRT1_2

flags.DEFINE_float(
    't', SQRT1_2,
    'Transmission amplitude of the second-stage beam splitters, in [0, 1]. '
    'Defaults to the 50/50 splitter 1/sqrt(2)')
flags.DEFINE_float('t_min', 0.0, 'Smallest transmissivity of a sweep')
flags.DEFINE_float('t_max', 1.0, 'Largest transmissivity of a sweep')
flags.DEFINE_integer('steps', 101, 'Number of grid points of a sweep')
