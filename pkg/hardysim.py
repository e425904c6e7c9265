"""Runs the Hardy-type nonlocality simulator.

Usage:
    python3 hardysim.py evolve eq4
    python3 hardysim.py verify --t=0.5
    python3 hardysim.py lhv --constraints=eq5 --show_rejected
    python3 hardysim.py sweep --t_min=0 --t_max=1 --steps=101 --out=dd.csv
    python3 hardysim.py bound --flagfile=configs/bound.conf
"""
import sys

from absl import app, flags

import hardysim.flags  # noqa: F401
import hardysim.utils
from hardysim.commands import run_command

FLAGS = flags.FLAGS


def main(argv):
    hardysim.utils.setup_logging(FLAGS.log_file_name)
    return run_command(argv[1:], FLAGS, out=sys.stdout, err=sys.stderr)


if __name__ == '__main__':
    app.run(main)
