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

"""Tests for quatseq.quatseq_analysis."""
import json
import os
from unittest import mock

from absl.testing import absltest
from absl.testing import flagsaver
import immutabledict

from quatseq import quatseq_analysis
from quatseq.analysis import analyzer
from quatseq.utils import constants


class AnalyzeCommandTest(absltest.TestCase):

  def _output_path(self):
    return os.path.join(self.create_tempdir().full_path, 'out.txt')

  def test_analyze_with_oracle(self):
    output_path = self._output_path()
    config = analyzer.create_analysis_config(oracle=True)
    exit_code = quatseq_analysis.cmd_analyze(5, 13, config,
                                             constants.FORMAT_JSON,
                                             output_path)
    self.assertEqual(exit_code, constants.EXIT_OK)
    with open(output_path) as f:
      lines = f.read().splitlines()
    self.assertLen(lines, 1)
    report = json.loads(lines[0])
    self.assertIn(report['lc_spectrum'], (53, 41))
    self.assertEqual(report['lc_spectrum'], report['lc_oracle'])

  def test_analyze_invalid_pair(self):
    exit_code = quatseq_analysis.cmd_analyze(
        3, 7, analyzer.create_analysis_config(), constants.FORMAT_JSON,
        self._output_path())
    self.assertEqual(exit_code, constants.EXIT_INVALID_INPUT)

  def test_analyze_verify_trace_csv(self):
    output_path = self._output_path()
    config = analyzer.create_analysis_config(verify_trace=True)
    exit_code = quatseq_analysis.cmd_analyze(5, 13, config,
                                             constants.FORMAT_CSV, output_path)
    self.assertEqual(exit_code, constants.EXIT_OK)
    with open(output_path) as f:
      header, row = f.read().splitlines()
    self.assertEqual(header.split(','), list(constants.REPORT_FIELDS))
    self.assertTrue(row.startswith('5,13,Case55,'))

  def test_analyze_mismatch_exits_with_three(self):
    config = analyzer.create_analysis_config()
    with mock.patch.object(analyzer.spectra, 'lc_by_branch_rule',
                           return_value=1):
      exit_code = quatseq_analysis.cmd_analyze(
          17, 5, config, constants.FORMAT_TEXT, self._output_path())
    self.assertEqual(exit_code, constants.EXIT_VERIFICATION_FAILED)


class BatchCommandTest(absltest.TestCase):

  def test_batch(self):
    pairs_file = self.create_tempfile(content='5 13\n3 7\n17 5\n')
    output_path = os.path.join(self.create_tempdir().full_path, 'out.json')
    exit_code = quatseq_analysis.cmd_batch(
        pairs_file.full_path, analyzer.create_analysis_config(),
        constants.FORMAT_JSON, output_path)
    self.assertEqual(exit_code, constants.EXIT_OK)
    with open(output_path) as f:
      records = [json.loads(line) for line in f.read().splitlines()]
    self.assertLen(records, 3)
    self.assertIn('error', records[1])

  def test_batch_missing_file(self):
    exit_code = quatseq_analysis.cmd_batch(
        os.path.join(self.create_tempdir().full_path, 'missing.txt'),
        analyzer.create_analysis_config(), constants.FORMAT_JSON)
    self.assertEqual(exit_code, constants.EXIT_INVALID_INPUT)

  def test_batch_file_with_invalid_utf8(self):
    pairs_path = os.path.join(self.create_tempdir().full_path, 'pairs.txt')
    with open(pairs_path, 'wb') as f:
      f.write(b'5 13\n\xff\xfe 17\n')
    output_path = os.path.join(self.create_tempdir().full_path, 'out.json')
    exit_code = quatseq_analysis.cmd_batch(
        pairs_path, analyzer.create_analysis_config(), constants.FORMAT_JSON,
        output_path)
    self.assertEqual(exit_code, constants.EXIT_INVALID_INPUT)
    self.assertFalse(os.path.exists(output_path))


class SelftestCommandTest(absltest.TestCase):

  def test_selftest_passes(self):
    output_path = os.path.join(self.create_tempdir().full_path, 'out.json')
    exit_code = quatseq_analysis.cmd_selftest(42, 10, constants.FORMAT_JSON,
                                              output_path)
    self.assertEqual(exit_code, constants.EXIT_OK)
    with open(output_path) as f:
      suites = [json.loads(line) for line in f.read().splitlines()]
    self.assertEqual([s['suite'] for s in suites],
                     list(constants.SUITE_NAMES))
    self.assertTrue(all(s['failed'] == 0 for s in suites))

  def test_selftest_fails_on_corrupted_modulus_table(self):
    table = dict(constants.BINARY_IRREDUCIBLES)
    table[8] = 0b100000001
    output_path = os.path.join(self.create_tempdir().full_path, 'out.txt')
    with mock.patch.object(constants, 'BINARY_IRREDUCIBLES',
                           immutabledict.immutabledict(table)):
      exit_code = quatseq_analysis.cmd_selftest(0, 5, constants.FORMAT_TEXT,
                                                output_path)
    self.assertEqual(exit_code, constants.EXIT_VERIFICATION_FAILED)
    with open(output_path) as f:
      self.assertIn('FAIL', f.read())


class MainTest(absltest.TestCase):

  def setUp(self):
    super().setUp()
    if not quatseq_analysis.FLAGS.is_parsed():
      quatseq_analysis.FLAGS.mark_as_parsed()

  def test_unknown_verb(self):
    self.assertEqual(quatseq_analysis.main(['quatseq_analysis', 'plot']),
                     constants.EXIT_INVALID_INPUT)
    self.assertEqual(quatseq_analysis.main(['quatseq_analysis']),
                     constants.EXIT_INVALID_INPUT)

  @flagsaver.flagsaver(p=None, q=13)
  def test_analyze_needs_both_primes(self):
    self.assertEqual(quatseq_analysis.main(['quatseq_analysis', 'analyze']),
                     constants.EXIT_INVALID_INPUT)

  @flagsaver.flagsaver(p=5, q=17)
  def test_analyze_verb(self):
    output_path = os.path.join(self.create_tempdir().full_path, 'out.json')
    with flagsaver.flagsaver(output=output_path):
      self.assertEqual(quatseq_analysis.main(['quatseq_analysis', 'analyze']),
                       constants.EXIT_OK)
    with open(output_path) as f:
      self.assertEqual(json.loads(f.read())['lc_spectrum'], 65)

  @flagsaver.flagsaver(p=5, q=13, max_period=10)
  def test_max_period(self):
    self.assertEqual(quatseq_analysis.main(['quatseq_analysis', 'analyze']),
                     constants.EXIT_INVALID_INPUT)

  @flagsaver.flagsaver(p=5, q=13, max_ring_degree=8)
  def test_max_ring_degree(self):
    self.assertEqual(quatseq_analysis.main(['quatseq_analysis', 'analyze']),
                     constants.EXIT_INVALID_INPUT)

  def test_num_random_sequences_default(self):
    self.assertEqual(quatseq_analysis.FLAGS['num_random_sequences'].default,
                     200)


if __name__ == '__main__':
  absltest.main()
