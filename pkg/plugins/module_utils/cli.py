# -*- coding: utf-8 -*-

# Copyright: (c) 2026, realforms contributors

# GNU General Public License v3.0+ (see LICENSE or https://www.gnu.org/licenses/gpl-3.0.txt)

from __future__ import absolute_import, division, print_function

__metaclass__ = type

import argparse
import json
import re
import sys

from ansible_collections.singularities.realforms.plugins.module_utils.classifier import classify
from ansible_collections.singularities.realforms.plugins.module_utils.constants import DEFAULT_MILNOR_DEGREE_CAP, OUTPUT_FORMATS
from ansible_collections.singularities.realforms.plugins.module_utils.errors import ParseError, RealFormsError
from ansible_collections.singularities.realforms.plugins.module_utils.parser import parse_polynomial
from ansible_collections.singularities.realforms.plugins.module_utils.perturb import perturb
from ansible_collections.singularities.realforms.plugins.module_utils.report import OutputReport, build_report

USAGE_EXIT_CODE = 1
NEGATIVE_NUMBER = re.compile(r"^-\d+$|^-\d*\.\d+$")


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("{0}: {1}".format(self.prog, message))


def classify_parser():
    parser = _ArgumentParser(prog="realforms", description="Real normal forms of a corank 2, modality <= 1 plane curve singularity.")
    parser.add_argument("polynomial", help="polynomial in x and y over Q, e.g. 'x^3 + y^8 + 2*x*y^6'")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="text", dest="output_format")
    parser.add_argument("--diagnostics", action="store_true", help="include Milnor number, corank and complex type")
    parser.add_argument("--milnor-degree-cap", type=int, default=DEFAULT_MILNOR_DEGREE_CAP)
    parser.add_argument("--verbose", action="store_true", help="print the classifier log to stderr")
    return parser


def perturb_parser():
    parser = _ArgumentParser(prog="realforms perturb", description="Randomized germ right equivalent to a normal form equation.")
    parser.add_argument("--type", required=True, dest="type_label", help="subtype label such as E14+, X9++, Y5,6+- or Ytilde6+")
    parser.add_argument("--param", required=True, help="rational value of the moduli parameter a")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--degree", type=int, default=None, help="standard degree of the perturbation, above mu + 1")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="text", dest="output_format")
    return parser


def _stderr_logger(stream):
    def queue_message(level, message):
        stream.write("[{0}] {1}\n".format(level, message))

    return queue_message


def run_perturb(argv, stdout, stderr):
    args = perturb_parser().parse_args(argv)
    try:
        result = perturb(args.type_label, args.param, seed=args.seed, degree=args.degree)
    except (RealFormsError, ValueError) as error:
        stderr.write("realforms perturb: {0}\n".format(error))
        return USAGE_EXIT_CODE
    if args.output_format == "json":
        stdout.write(json.dumps(result._asdict(), indent=2) + "\n")
    else:
        stdout.write("{0}\n".format(result.polynomial))
        stderr.write("source: {0} with a = {1}, seed {2}\n".format(result.source["type"], result.source["param"], result.seed))
    return 0


def shield_polynomial(argv):
    """Move a polynomial with a leading minus behind "--" so it is not read as an option."""
    if "--" in argv:
        return argv
    for index, token in enumerate(argv):
        if token.startswith("-") and not token.startswith("--") and token != "-h" and not NEGATIVE_NUMBER.match(token):
            return argv[:index] + argv[index + 1 :] + ["--", token]
    return argv


def run_classify(argv, stdout, stderr):
    args = classify_parser().parse_args(shield_polynomial(argv))
    queue_message = _stderr_logger(stderr) if args.verbose else None
    try:
        parsed = parse_polynomial(args.polynomial)
    except ParseError as error:
        report = OutputReport.from_error(args.polynomial, error)
    else:
        kwargs = dict(milnor_degree_cap=args.milnor_degree_cap)
        if queue_message:
            kwargs["queue_message"] = queue_message
        report = build_report(parsed.source_text, classify, parsed.polynomial, **kwargs)
    stdout.write(report.render(args.output_format, args.diagnostics) + "\n")
    return report.exit_code


def run(argv=None, stdout=None, stderr=None):
    """Entry point of the command line; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        if argv and argv[0] == "perturb":
            return run_perturb(argv[1:], stdout, stderr)
        return run_classify(argv, stdout, stderr)
    except UsageError as error:
        stderr.write("{0}\n".format(error))
        return USAGE_EXIT_CODE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
