"""Command implementations behind the hardysim.py subcommands.

Every command writes a human-readable table, or JSON lines carrying the same
numbers, to `out` and returns the process exit code.
"""
import csv
import functools
import json
import sys
from collections import OrderedDict, namedtuple

from absl import logging

import numpy as np

from hardysim.bound.hardy_bound import optimize_bound
from hardysim.exceptions import ExperimentFileError, ParameterError, \
    PipelineError
from hardysim.hardy.lhv import HardyConstraints, all_strategies, \
    lhv_admissible, lhv_max_target, violated_constraints
from hardysim.hardy.verifier import verify
from hardysim.interferometer.experiment import CanonicalExperiment, \
    dd_probability_curve, run_experiment
from hardysim.interferometer.expfile import ExperimentDoc, \
    read_experiment_file
from hardysim.utils import EQUALITY_TOLERANCE, PRUNE_TOLERANCE, SQRT1_2, \
    SQRT2, exact_form, significant

EXIT_OK = 0
EXIT_NO_CONTRADICTION = 1
EXIT_USAGE = 2
EXIT_PIPELINE = 3

COMMANDS = ('evolve', 'distribution', 'verify', 'lhv', 'sweep', 'bound')

SWEEP_HEADER = ('t', 'p_dd', 'contradiction')

# Lattice used to decide whether exact amplitude forms are printed.
EXACT_SCALE = 2 * SQRT2

ReportRow = namedtuple(
    'ReportRow',
    ['experiment', 'outcome', 'probability', 'amplitude_re', 'amplitude_im'])


def handle_errors(command):
    """Maps hardysim errors raised by a command onto exit codes."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        err = kwargs.get('err') or sys.stderr
        try:
            return command(*args, **kwargs)
        except (ParameterError, ExperimentFileError) as e:
            err.write('error: {}\n'.format(e))
            return EXIT_USAGE
        except PipelineError as e:
            logging.error('Pipeline failure: {}'.format(e))
            err.write('pipeline error: {}\n'.format(e))
            return EXIT_PIPELINE

    return wrapper


def _render(value) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return '{:.12g}'.format(value)
    if value is None:
        return '-'
    return str(value)


def _clean(value):
    """Rounds floats to 12 significant digits; round-off noise prints as
    0."""
    if isinstance(value, float):
        if abs(value) <= PRUNE_TOLERANCE:
            return 0.0
        return significant(value)
    return value


def write_report(sections, out, as_json: bool = False):
    """Writes report sections as aligned tables or as JSON lines.

    Args:
        sections: List of (title, records) where records are OrderedDicts
            sharing the same keys.
        out: Text stream.
        as_json (:obj:`bool`): One JSON object per record, tagged with its
            section title.
    """
    for title, records in sections:
        records = [
            OrderedDict((k, _clean(v)) for k, v in record.items())
            for record in records
        ]
        if as_json:
            for record in records:
                tagged = OrderedDict([('section', title)])
                tagged.update(record)
                out.write(json.dumps(tagged, ensure_ascii=False) + '\n')
            continue
        out.write('# {}\n'.format(title))
        if not records:
            out.write('(none)\n\n')
            continue
        columns = list(records[0].keys())
        cells = [columns] + [[_render(record[c]) for c in columns]
                             for record in records]
        widths = [
            max(len(row[i]) for row in cells) for i in range(len(columns))
        ]
        for row in cells:
            out.write('  '.join(cell.ljust(width)
                                for cell, width in zip(row, widths)).rstrip())
            out.write('\n')
        out.write('\n')


def resolve_experiment(source: str) -> ExperimentDoc:
    """Returns the experiment named by a canonical alias (eq1..eq4) or
    stored in a file."""
    try:
        experiment = CanonicalExperiment.from_alias(source)
        return ExperimentDoc(experiment.value, experiment.config)
    except ValueError:
        pass
    try:
        return read_experiment_file(source)
    except OSError as e:
        raise ParameterError('Cannot read experiment {}: {}'.format(
            source, e.strerror or e))


def evolve_rows(doc: ExperimentDoc):
    """Amplitude rows of an experiment, in canonical ket order.

    Returns:
        List of (:py:class:`.ReportRow`, exact form or None) pairs. Exact
        forms are only given when the whole state lies on the 1/(2 sqrt 2)
        lattice.
    """
    state = run_experiment(doc.config)
    exact = state.lattice_check(EXACT_SCALE)
    return [(ReportRow(doc.name, str(ket), float(abs(amplitude)**2),
                       float(amplitude.real), float(amplitude.imag)),
             exact_form(amplitude) if exact else None)
            for ket, amplitude in state]


def row_record(row: ReportRow, exact=None, with_amplitude=True):
    record = OrderedDict([('experiment', row.experiment),
                          ('outcome', row.outcome)])
    if with_amplitude:
        record['exact'] = exact
        record['amplitude_re'] = row.amplitude_re
        record['amplitude_im'] = row.amplitude_im
    record['probability'] = row.probability
    return record


@handle_errors
def cmd_evolve(source: str, out=sys.stdout, as_json=False, err=None):
    """Prints the final state of an experiment."""
    doc = resolve_experiment(source)
    logging.info('Evolving {} ({})'.format(doc.name, doc.config.label()))
    records = [row_record(row, exact) for row, exact in evolve_rows(doc)]
    write_report([(doc.config.label(), records)], out, as_json)
    return EXIT_OK


def distribution_rows(name, distribution):
    return [
        row_record(ReportRow(name, str(outcome), probability, None, None),
                   with_amplitude=False)
        for outcome, probability in distribution.items()
    ]


@handle_errors
def cmd_distribution(source: str, out=sys.stdout, as_json=False, err=None):
    """Prints the Born distribution of an experiment."""
    doc = resolve_experiment(source)
    distribution = run_experiment(doc.config).born_distribution()
    write_report([(doc.config.label(), distribution_rows(doc.name,
                                                          distribution))],
                 out, as_json)
    return EXIT_OK


@handle_errors
def cmd_verify(t: float = SQRT1_2,
               uniform_splitters: bool = False,
               eps: float = EQUALITY_TOLERANCE,
               out=sys.stdout,
               as_json=False,
               err=None):
    """Prints the four distributions and the verdict.

    Returns:
        0 when the contradiction is demonstrated, 1 otherwise.
    """
    verdict = verify(t, uniform_splitters, eps)
    sections = []
    for experiment, distribution in verdict.distributions.items():
        config = experiment.config
        sections.append(
            (config.label(), distribution_rows(experiment.value,
                                               distribution)))
    checks = [
        OrderedDict([('check', 'eq5'), ('experiment', 'eq1'),
                     ('statement', 'D+(out) D-(out) = 0'),
                     ('holds', verdict.eq5_holds)]),
        OrderedDict([('check', 'eq6'), ('experiment', 'eq2'),
                     ('statement', 'D+(in) = 1 => D-(out) = 1'),
                     ('holds', verdict.eq6_holds)]),
        OrderedDict([('check', 'eq7'), ('experiment', 'eq3'),
                     ('statement', 'D-(in) = 1 => D+(out) = 1'),
                     ('holds', verdict.eq7_holds)]),
    ]
    summary = [
        OrderedDict([('t', verdict.t),
                     ('uniform_splitters', uniform_splitters),
                     ('target_probability', verdict.target_probability),
                     ('lhv_max', verdict.lhv_max), ('gap', verdict.gap),
                     ('contradiction', verdict.contradiction)])
    ]
    sections += [('checks', checks), ('verdict', summary)]
    write_report(sections, out, as_json)
    return EXIT_OK if verdict.contradiction else EXIT_NO_CONTRADICTION


def strategy_record(strategy):
    return OrderedDict([('bits', strategy.bits()),
                        ('d_plus_in', strategy.d_plus_in),
                        ('d_plus_out', strategy.d_plus_out),
                        ('d_minus_in', strategy.d_minus_in),
                        ('d_minus_out', strategy.d_minus_out),
                        ('target', strategy.target())])


def parse_constraints(names) -> HardyConstraints:
    """Reads --constraints values; 'none' or an empty list imposes none."""
    names = [name.strip() for name in names if name.strip()]
    if names == ['none']:
        names = []
    return HardyConstraints.from_names(names)


@handle_errors
def cmd_lhv(constraint_names=('eq5', 'eq6', 'eq7'),
            show_rejected: bool = False,
            out=sys.stdout,
            as_json=False,
            err=None):
    """Lists the admissible LHV strategies and their best target value."""
    constraints = parse_constraints(constraint_names)
    admissible = lhv_admissible(constraints)
    sections = [('admissible strategies',
                 [strategy_record(s) for s in admissible])]
    if show_rejected:
        rejected = []
        for strategy in all_strategies():
            violated = violated_constraints(strategy, constraints)
            if violated:
                record = strategy_record(strategy)
                record['violates'] = ','.join(violated)
                rejected.append(record)
        sections.append(('rejected strategies', rejected))
    sections.append(('summary', [
        OrderedDict([('constraints', ','.join(constraints.names()) or 'none'),
                     ('admissible', len(admissible)),
                     ('lhv_max', lhv_max_target(constraints))])
    ]))
    write_report(sections, out, as_json)
    return EXIT_OK


@handle_errors
def cmd_sweep(t_min: float,
              t_max: float,
              steps: int,
              out_path: str = None,
              out=sys.stdout,
              as_json=False,
              err=None):
    """Writes P(d+, d-) of E(P,Q; +in,-in) over a transmissivity grid."""
    if not 0.0 <= t_min <= t_max <= 1.0:
        raise ParameterError(
            'Need 0 <= t_min <= t_max <= 1, got t_min={} t_max={}'.format(
                t_min, t_max))
    if steps < 2:
        raise ParameterError('steps must be at least 2, got {}'.format(steps))
    t_values = [float(t) for t in np.linspace(t_min, t_max, steps)]
    rows = []
    for t, p_dd in dd_probability_curve(t_values):
        rows.append((t, p_dd, verify(t).contradiction))
    logging.info('Swept {} transmissivities in [{}, {}]'.format(
        steps, t_min, t_max))

    stream = out
    if out_path is not None:
        try:
            stream = open(out_path, 'w', newline='')
        except OSError as e:
            raise ParameterError('Cannot write {}: {}'.format(
                out_path, e.strerror or e))
    try:
        if as_json:
            write_report([('sweep', [
                OrderedDict(zip(SWEEP_HEADER, row)) for row in rows
            ])], stream, as_json=True)
        else:
            writer = csv.writer(stream, lineterminator='\n')
            writer.writerow(SWEEP_HEADER)
            for row in rows:
                writer.writerow([_render(_clean(value)) for value in row])
    finally:
        if stream is not out:
            stream.close()
    return EXIT_OK


@handle_errors
def cmd_bound(grid_density: int = 32,
              refinement_rounds: int = 3,
              theta: float = None,
              out=sys.stdout,
              as_json=False,
              err=None):
    """Prints the best feasible Hardy probability of the standard scenario
    next to the 25% of the maximally entangled scheme."""
    result = optimize_bound(grid_density, refinement_rounds, theta)
    scheme_target = verify().target_probability
    ratio = None
    if result.target > PRUNE_TOLERANCE:
        ratio = scheme_target / result.target
    params = result.params
    sections = [
        ('standard two-qubit Hardy bound', [
            OrderedDict([('target', result.target),
                         ('feasible', result.feasible),
                         ('residual_1', result.residuals[0]),
                         ('residual_2', result.residuals[1]),
                         ('residual_3', result.residuals[2])])
        ]),
        ('parameters', [
            OrderedDict([('theta', params.theta), ('alpha1', params.alpha1),
                         ('alpha2', params.alpha2), ('beta1', params.beta1),
                         ('beta2', params.beta2)])
        ]),
        ('comparison', [
            OrderedDict([('scheme_target', scheme_target),
                         ('bound_target', result.target), ('ratio', ratio),
                         ('scheme_exceeds_bound',
                          scheme_target > result.target)])
        ]),
    ]
    write_report(sections, out, as_json)
    return EXIT_OK


def run_command(argv, options, out=sys.stdout, err=sys.stderr) -> int:
    """Dispatches a subcommand.

    Args:
        argv: Positional arguments, argv[0] being the subcommand.
        options: Object with the attributes defined in hardysim.flags
            (usually absl's FLAGS).
    """
    if not argv or argv[0] not in COMMANDS:
        err.write('usage: hardysim.py {{{}}} [args] [--flags]\n'.format(
            '|'.join(COMMANDS)))
        return EXIT_USAGE
    command, args = argv[0], argv[1:]
    as_json = options.json
    if command in ('evolve', 'distribution'):
        if len(args) != 1:
            err.write('usage: hardysim.py {} <eq1..eq4 | file>\n'.format(
                command))
            return EXIT_USAGE
        fn = cmd_evolve if command == 'evolve' else cmd_distribution
        return fn(args[0], out=out, as_json=as_json, err=err)
    if command == 'verify':
        return cmd_verify(options.t,
                          options.uniform_splitters,
                          options.zero_eps,
                          out=out,
                          as_json=as_json,
                          err=err)
    if command == 'lhv':
        return cmd_lhv(options.constraints,
                       options.show_rejected,
                       out=out,
                       as_json=as_json,
                       err=err)
    if command == 'sweep':
        return cmd_sweep(options.t_min,
                         options.t_max,
                         options.steps,
                         options.out,
                         out=out,
                         as_json=as_json,
                         err=err)
    return cmd_bound(options.grid,
                     options.rounds,
                     options.theta,
                     out=out,
                     as_json=as_json,
                     err=err)
