from absl import flags

flags.DEFINE_integer('grid', 32,
                     'Grid points per axis of the Hardy bound search')
flags.DEFINE_integer('rounds', 3,
                     'Refinement rounds of the Hardy bound search')
flags.DEFINE_float(
    'theta', None,
    'Locks the Schmidt angle of the Hardy bound search (radians, in '
    '[0, pi/4])')
