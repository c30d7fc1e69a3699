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

"""Tests for quatseq.analysis.analyzer."""
import dataclasses
from unittest import mock

from absl.testing import absltest
from absl.testing import parameterized

from quatseq.algebra import galois_ring
from quatseq.algebra import numth
from quatseq.algebra import spectra
from quatseq.analysis import analyzer


class AnalysisConfigTest(absltest.TestCase):

  def test_defaults(self):
    config = analyzer.create_analysis_config()
    self.assertFalse(config.oracle)
    self.assertFalse(config.verify_trace)
    self.assertFalse(config.emit_spectrum)
    self.assertEqual(config.max_period, 100000)
    self.assertEqual(config.max_ring_degree, 256)
    self.assertEqual(
        [field.name for field in dataclasses.fields(config)],
        ['oracle', 'verify_trace', 'emit_spectrum', 'max_period',
         'max_ring_degree'])

  def test_rejects_non_positive_max_period(self):
    with self.assertRaises(ValueError):
      analyzer.create_analysis_config(max_period=0)

  def test_rejects_non_positive_max_ring_degree(self):
    with self.assertRaises(ValueError):
      analyzer.create_analysis_config(max_ring_degree=0)


class AnalyzePairTest(parameterized.TestCase):

  @parameterized.parameters(
      (5, 13, 'Case55', 41, True),
      (17, 5, 'Case15', 85, False),
      (5, 17, 'Case51', 65, False),
  )
  def test_all_routes_agree(self, p, q, case, expected, has_zero_branch):
    config = analyzer.create_analysis_config(oracle=True, verify_trace=True)
    report = analyzer.analyze_pair(p, q, config)
    data = report.get_data()
    self.assertEqual(data['case'], case)
    self.assertEqual(data['modulus'][-1], 1)
    for field in ('lc_spectrum', 'lc_closed_form', 'lc_oracle',
                  'lc_by_branch_rule'):
      self.assertEqual(data[field], expected, msg=field)
    self.assertEqual('zero_branch' in data, has_zero_branch)
    self.assertTrue(data['trace_verified'])
    self.assertTrue(data['closed_form_matches_dft'])
    self.assertEqual(report.mismatches(), [])
    analyzer.verify_report(report)

  def test_optional_fields_are_omitted(self):
    report = analyzer.analyze_pair(5, 13, analyzer.create_analysis_config())
    data = report.get_data()
    for field in ('lc_oracle', 'trace_verified', 'spectrum'):
      self.assertNotIn(field, data)

  def test_reports_are_deterministic(self):
    config = analyzer.create_analysis_config(emit_spectrum=True)
    first = dict(analyzer.analyze_pair(17, 5, config).get_data())
    second = dict(analyzer.analyze_pair(17, 5, config).get_data())
    first.pop('elapsed_ms')
    second.pop('elapsed_ms')
    self.assertEqual(first, second)

  @parameterized.parameters((3, 7), (5, 5), (4, 13), (7, 11))
  def test_invalid_parameters(self, p, q):
    with self.assertRaises(numth.InvalidParametersError):
      analyzer.analyze_pair(p, q, analyzer.create_analysis_config())

  def test_period_limit(self):
    config = analyzer.create_analysis_config(max_period=64)
    with self.assertRaises(numth.InvalidParametersError) as context:
      analyzer.analyze_pair(5, 13, config)
    self.assertIn('exceeds', context.exception.reason)

  def test_ring_degree_limit(self):
    # ell = 12 for (5, 13).
    config = analyzer.create_analysis_config(max_ring_degree=11)
    with mock.patch.object(galois_ring, 'build_ring') as build_mock:
      with self.assertRaises(numth.InvalidParametersError) as context:
        analyzer.analyze_pair(5, 13, config)
    self.assertIn('ell = 12', context.exception.reason)
    build_mock.assert_not_called()

  def test_two_in_the_second_class(self):
    config = analyzer.create_analysis_config(verify_trace=True)
    data = analyzer.analyze_pair(5, 157, config).get_data()
    self.assertEqual(data['case'], 'Case55')
    self.assertEqual(data['two_class_index'], 2)
    self.assertEqual(data['ell'], 52)
    for field in ('lc_spectrum', 'lc_closed_form', 'lc_by_branch_rule'):
      self.assertEqual(data[field], 629, msg=field)
    self.assertTrue(data['trace_verified'])
    self.assertTrue(data['closed_form_matches_dft'])

  def test_mismatch_is_reported(self):
    config = analyzer.create_analysis_config()
    with mock.patch.object(spectra, 'lc_by_branch_rule', return_value=53):
      report = analyzer.analyze_pair(5, 13, config)
    self.assertLen(report.mismatches(), 1)
    with self.assertRaises(analyzer.VerificationError):
      analyzer.verify_report(report)


if __name__ == '__main__':
  absltest.main()
