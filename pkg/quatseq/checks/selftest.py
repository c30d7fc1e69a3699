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

"""Runs the invariant suites."""
import functools
from typing import List, Optional, Sequence

from absl import logging

from quatseq.checks import invariant_suite
from quatseq.checks import util as checks_util
from quatseq.checks.class_evaluation_suite import ClassEvaluationSuite
from quatseq.checks.inner_product_suite import InnerProductSuite
from quatseq.checks.opposite_count_suite import OppositeCountSuite
from quatseq.checks.oracle_spectrum_suite import OracleSpectrumSuite
from quatseq.checks.root_of_unity_sums_suite import RootOfUnitySumsSuite
from quatseq.checks.two_class_suite import EllDivisibilitySuite
from quatseq.checks.two_class_suite import TwoClassSuite
from quatseq.utils import constants


def get_suite_class(suite_name):
  """Get the suite class based on suite_name."""
  if suite_name == 'root_of_unity_sums':
    return RootOfUnitySumsSuite
  elif suite_name == 'class_evaluations':
    return ClassEvaluationSuite
  elif suite_name == 'opposite_counts':
    return OppositeCountSuite
  elif suite_name == 'inner_product':
    return InnerProductSuite
  elif suite_name == 'two_in_class':
    return TwoClassSuite
  elif suite_name == 'ell_divisibility':
    return EllDivisibilitySuite
  elif suite_name == 'oracle_spectrum':
    return OracleSpectrumSuite
  else:
    raise ValueError('{} is not supported.'.format(suite_name))


def run_selftest(
    seed: int = 0,
    num_random_sequences: int = 200,
    suite_names: Optional[Sequence[str]] = None,
    parameter_sets=constants.BUILTIN_PARAMETER_SETS
) -> List[checks_util.Results]:
  """Runs the invariant suites and returns their results.

  Args:
    seed: Seed of the random sequences of the oracle suite.
    num_random_sequences: Number of random sequences per period.
    suite_names: The suites to run, all of constants.SUITE_NAMES by default.
    parameter_sets: The pairs (p, q) checked by the other suites.

  Returns:
    One Results per suite, in order.
  """
  if suite_names is None:
    suite_names = constants.SUITE_NAMES
  # Built once per run and shared by the suites.
  context_builder = functools.lru_cache(maxsize=None)(
      invariant_suite.build_context)
  results = []
  for suite_name in suite_names:
    suite_class = get_suite_class(suite_name)
    if suite_class is OracleSpectrumSuite:
      suite = suite_class(seed=seed, num_sequences=num_random_sequences)
    else:
      suite = suite_class(parameter_sets=parameter_sets,
                          context_builder=context_builder)
    logging.info('Running suite %s.', suite_name)
    results.append(suite.evaluate())
  return results
