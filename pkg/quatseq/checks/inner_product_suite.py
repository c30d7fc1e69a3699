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

"""The table of inner products of the shifted class polynomial tuples."""

from quatseq.algebra import numth
from quatseq.algebra import spectra
from quatseq.checks import invariant_suite
from quatseq.utils import constants


class InnerProductSuite(invariant_suite.InvariantSuite):
  """Checks sum_k D_{i+k}(beta) D_{j+k}(beta) for all 16 pairs (i, j).

  After adding (q-1)/4 + (p-1)/4 the product is 1 when i = j in Case55 and
  when i - j = 2 (mod 4) in Case15 and Case51, and 0 otherwise.
  """

  name = 'inner_product'

  def check_pair(self, context):
    system, ring, beta = context.system, context.ring, context.beta
    shift = (system.q - 1) // 4 + (system.p - 1) // 4
    for i in range(constants.NUM_CLASSES):
      for j in range(constants.NUM_CLASSES):
        if system.case == numth.CaseTag.CASE_55:
          expected = 1 if i == j else 0
        else:
          expected = 1 if (i - j) % constants.NUM_CLASSES == 2 else 0
        value = spectra.tuple_inner_product(system, beta, i, j) + shift
        yield 'C_{} . C_{} = {}'.format(i, j, expected), (
            value == ring.scalar(expected))
