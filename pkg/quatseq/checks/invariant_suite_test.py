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

"""Tests for the invariant suites."""
from unittest import mock

from absl.testing import absltest
from absl.testing import parameterized
import immutabledict

from quatseq.checks import invariant_suite
from quatseq.checks import selftest
from quatseq.checks.class_evaluation_suite import ClassEvaluationSuite
from quatseq.checks.inner_product_suite import InnerProductSuite
from quatseq.checks.opposite_count_suite import OppositeCountSuite
from quatseq.checks.oracle_spectrum_suite import OracleSpectrumSuite
from quatseq.checks.root_of_unity_sums_suite import RootOfUnitySumsSuite
from quatseq.checks.two_class_suite import EllDivisibilitySuite
from quatseq.checks.two_class_suite import TwoClassSuite
from quatseq.utils import constants


def _corrupted_table(degree, poly):
  table = dict(constants.BINARY_IRREDUCIBLES)
  table[degree] = poly
  return immutabledict.immutabledict(table)


class SuiteTest(parameterized.TestCase):

  @parameterized.named_parameters(
      ('root_of_unity_sums', RootOfUnitySumsSuite, 9),
      ('class_evaluations', ClassEvaluationSuite,
       4 * 3 + 4 * (4 + 12) + 4 * (16 + 4) + 4 * (4 + 16)),
      ('inner_product', InnerProductSuite, 16 * 3),
      ('two_in_class', TwoClassSuite, 6),
      ('ell_divisibility', EllDivisibilitySuite, 5),
  )
  def test_suite_passes(self, suite_class, expected_total):
    results = suite_class().evaluate()
    self.assertEqual(results.failures, [])
    self.assertTrue(results.passed)
    self.assertEqual(results.total, expected_total)

  def test_opposite_count_suite_passes(self):
    results = OppositeCountSuite().evaluate()
    self.assertTrue(results.passed, msg=results.failures)
    self.assertGreaterEqual(results.total, 3 * 4 * 3)

  def test_oracle_spectrum_suite(self):
    results = OracleSpectrumSuite(seed=3, num_sequences=20).evaluate()
    self.assertTrue(results.passed, msg=results.failures)
    self.assertEqual(results.total, 40)

  def test_oracle_spectrum_suite_is_seeded(self):
    first = OracleSpectrumSuite(seed=42, num_sequences=2)
    second = OracleSpectrumSuite(seed=42, num_sequences=2)
    parameters = (7, 3)
    self.assertEqual(
        first.build_context(parameters).sequences,
        second.build_context(parameters).sequences)

  def test_corrupted_modulus_table_fails(self):
    # x^8 + 1 is reducible; both pairs with ell = 8 lose their ring.
    with mock.patch.object(constants, 'BINARY_IRREDUCIBLES',
                           _corrupted_table(8, 0b100000001)):
      results = RootOfUnitySumsSuite().evaluate()
    self.assertFalse(results.passed)
    self.assertLen(results.failures, 2)
    self.assertIn('NotIrreducibleError', results.failures[0])
    self.assertTrue(results.failures[0].startswith('p=17 q=5'))

  def test_shared_context_builder(self):
    calls = []

    def builder(p, q):
      calls.append((p, q))
      return invariant_suite.build_context(p, q)

    TwoClassSuite(parameter_sets=((5, 13),), context_builder=builder).evaluate()
    self.assertEqual(calls, [(5, 13)])


class SelftestTest(absltest.TestCase):

  def test_all_suites_pass(self):
    results = selftest.run_selftest(seed=42, num_random_sequences=10)
    self.assertEqual([r.name for r in results], list(constants.SUITE_NAMES))
    for r in results:
      self.assertTrue(r.passed, msg=str(r))

  def test_corrupted_degree_three_modulus(self):
    with mock.patch.object(constants, 'BINARY_IRREDUCIBLES',
                           _corrupted_table(3, 0b1001)):
      results = selftest.run_selftest(
          num_random_sequences=5, suite_names=('oracle_spectrum',))
    self.assertLen(results, 1)
    self.assertFalse(results[0].passed)
    self.assertIn('period=7 r=3', results[0].failures[0])

  def test_unknown_suite(self):
    with self.assertRaises(ValueError):
      selftest.get_suite_class('no_such_suite')


if __name__ == '__main__':
  absltest.main()
