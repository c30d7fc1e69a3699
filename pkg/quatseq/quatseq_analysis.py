# Copyright 2022 Google LLC.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command line tool for analyzing quaternary cyclotomic sequences.

Usage:
  quatseq_analysis analyze --p=5 --q=13 [--oracle] [--verify_trace]
  quatseq_analysis batch --pairs=pairs.txt [--output=reports.json]
  quatseq_analysis selftest [--seed=42]

Exit codes: 0 on success, 2 on invalid input, 3 when a cross-check fails.
"""
import os
import sys
import tempfile
from typing import Optional, Sequence

from absl import app
from absl import flags
from absl import logging

from quatseq.algebra import numth
from quatseq.analysis import analysis_report
from quatseq.analysis import analyzer
from quatseq.analysis import batch_pipeline
from quatseq.checks import selftest
from quatseq.checks import util as checks_util
from quatseq.utils import constants
from quatseq.utils import util

FLAGS = flags.FLAGS

flags.DEFINE_integer('p', None, 'First prime of the pair analyzed by analyze.')
flags.DEFINE_integer('q', None, 'Second prime of the pair analyzed by analyze.')
flags.DEFINE_bool('oracle', False,
                  'Also compute the linear complexity from the minimal '
                  'connection polynomial.')
flags.DEFINE_bool('verify_trace', False,
                  'Check the trace representation at every index.')
flags.DEFINE_bool('emit_spectrum', False,
                  'Include the DFT spectrum in the report.')
flags.DEFINE_enum('format', constants.FORMAT_JSON, constants.REPORT_FORMATS,
                  'Report format.')
flags.DEFINE_integer('seed', 0, 'The random seed of the selftest.')
flags.DEFINE_string('pairs', None,
                    'File with one "p q" pair per line, used by batch.')
flags.DEFINE_string('output', None,
                    'Where to write the records, stdout if not set.')
flags.DEFINE_integer('num_random_sequences', 200,
                     'Number of random sequences per period in the selftest.')
flags.DEFINE_integer('max_period', constants.MAX_PERIOD,
                     'Largest accepted modulus pq.')
flags.DEFINE_integer('max_ring_degree', constants.MAX_RING_DEGREE,
                     'Largest accepted ring degree ell.')

_VERBS = ('analyze', 'batch', 'selftest')


def write_lines(lines: Sequence[str], output_path: Optional[str] = None):
  """Writes one record per line to output_path, or to stdout."""
  text = ''.join(line + '\n' for line in lines)
  if output_path is None:
    sys.stdout.write(text)
    sys.stdout.flush()
  else:
    with open(output_path, 'w') as f:
      f.write(text)


def cmd_analyze(p: int, q: int, config: analyzer.AnalysisConfig,
                report_format: str, output_path: Optional[str] = None) -> int:
  """Analyzes one pair and writes its report.

  Returns:
    The exit code: 2 if (p, q) is invalid, 3 if the cross-checks disagree,
    0 otherwise.
  """
  try:
    report = analyzer.analyze_pair(p, q, config)
  except numth.InvalidParametersError as e:
    logging.error('%s', e)
    return constants.EXIT_INVALID_INPUT
  lines = [batch_pipeline.format_report(report, report_format)]
  if report_format == constants.FORMAT_CSV:
    lines.insert(0, analysis_report.csv_header())
  write_lines(lines, output_path)
  try:
    analyzer.verify_report(report)
  except analyzer.VerificationError as e:
    logging.error('Verification failed: %s', e)
    return constants.EXIT_VERIFICATION_FAILED
  return constants.EXIT_OK


def cmd_batch(pairs_path: str, config: analyzer.AnalysisConfig,
              report_format: str, output_path: Optional[str] = None) -> int:
  """Analyzes every pair of a pairs file.

  Invalid lines become error records and do not change the exit code.

  Returns:
    The exit code: 2 if the pairs file cannot be read or is not valid UTF-8,
    3 if any report has disagreeing cross-checks, 0 otherwise.
  """
  try:
    entries = batch_pipeline.read_pairs_file(pairs_path)
  except (OSError, UnicodeError) as e:
    logging.error('Cannot read the pairs file %s: %s', pairs_path, e)
    return constants.EXIT_INVALID_INPUT

  with tempfile.TemporaryDirectory() as temp_dir:
    records_path = output_path or os.path.join(temp_dir, 'records.txt')
    batch = batch_pipeline.BatchAnalysis(
        entries, config, report_format, records_path,
        os.path.join(temp_dir, 'metadata.json'))
    counts = batch.run_pipeline()
    if output_path is None:
      with open(records_path) as f:
        sys.stdout.write(f.read())
        sys.stdout.flush()

  if counts.get(batch_pipeline.STATUS_MISMATCH, 0):
    logging.error('%d reports failed verification.',
                  counts[batch_pipeline.STATUS_MISMATCH])
    return constants.EXIT_VERIFICATION_FAILED
  return constants.EXIT_OK


def cmd_selftest(seed: int, num_random_sequences: int, report_format: str,
                 output_path: Optional[str] = None) -> int:
  """Runs the invariant suites.

  Returns:
    The exit code: 3 if any check fails, 0 otherwise.
  """
  results = selftest.run_selftest(
      seed=seed, num_random_sequences=num_random_sequences)
  if report_format == constants.FORMAT_JSON:
    lines = [util.to_json_line(r.to_dict()) for r in results]
  elif report_format == constants.FORMAT_CSV:
    lines = ['suite,total,failed'] + [
        util.csv_line([r.name, r.total, len(r.failures)]) for r in results
    ]
  else:
    lines = [str(r) for r in results]
  write_lines(lines, output_path)
  if not checks_util.all_passed(results):
    failed = [r.name for r in results if not r.passed]
    logging.error('Failed suites: %s', ', '.join(failed))
    return constants.EXIT_VERIFICATION_FAILED
  return constants.EXIT_OK


def main(argv):
  if len(argv) != 2 or argv[1] not in _VERBS:
    logging.error('Expected one verb out of %s, got %s.', ', '.join(_VERBS),
                  argv[1:])
    return constants.EXIT_INVALID_INPUT
  verb = argv[1]

  try:
    config = analyzer.create_analysis_config(
        oracle=FLAGS.oracle,
        verify_trace=FLAGS.verify_trace,
        emit_spectrum=FLAGS.emit_spectrum,
        max_period=FLAGS.max_period,
        max_ring_degree=FLAGS.max_ring_degree)
  except ValueError as e:
    logging.error('%s', e)
    return constants.EXIT_INVALID_INPUT

  if verb == 'analyze':
    if FLAGS.p is None or FLAGS.q is None:
      logging.error('analyze needs both --p and --q.')
      return constants.EXIT_INVALID_INPUT
    return cmd_analyze(FLAGS.p, FLAGS.q, config, FLAGS.format, FLAGS.output)
  elif verb == 'batch':
    if FLAGS.pairs is None:
      logging.error('batch needs --pairs.')
      return constants.EXIT_INVALID_INPUT
    return cmd_batch(FLAGS.pairs, config, FLAGS.format, FLAGS.output)
  else:
    return cmd_selftest(FLAGS.seed, FLAGS.num_random_sequences, FLAGS.format,
                        FLAGS.output)


def run():
  app.run(main)


if __name__ == '__main__':
  run()
