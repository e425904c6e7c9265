from absl import flags

flags.DEFINE_float('zero_eps', 1e-9,
                   'Probabilities below this value count as zero')
flags.DEFINE_list(
    'constraints', ['eq5', 'eq6', 'eq7'],
    'Zero constraints imposed on local hidden variable models. Use "none" '
    'to impose none')
flags.DEFINE_bool(
    'uniform_splitters', False,
    'True to use --t for every BS2, including the ones of the constraint '
    'experiments')
flags.DEFINE_bool('show_rejected', False,
                  'True to also list the strategies a constraint rules out')
