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

"""Which class holds 2, and what that says about ell."""

from quatseq.algebra import cyclotomy
from quatseq.algebra import numth
from quatseq.checks import invariant_suite


class TwoClassSuite(invariant_suite.InvariantSuite):
  """Checks that 2 lies in D_0 or D_2 exactly in Case55."""

  name = 'two_in_class'

  def check_pair(self, context):
    system = context.system
    two_class = cyclotomy.two_class(system)
    n = system.modulus
    yield '2 is in D_{}'.format(two_class), (
        2 in cyclotomy.class_residues(system, two_class) and
        system.labels[2 % n] == two_class)
    is_case_55 = system.case == numth.CaseTag.CASE_55
    yield '2 in D_{} matches {}'.format(two_class, system.case.value), (
        (two_class % 2 == 0) == is_case_55)


class EllDivisibilitySuite(invariant_suite.InvariantSuite):
  """Checks 2 | ell when 2 is in D_2 and 4 | ell when 2 is in D_1 or D_3."""

  name = 'ell_divisibility'

  def check_pair(self, context):
    system = context.system
    two_class = cyclotomy.two_class(system)
    yield 'ell = lcm(ell_p, ell_q)', (
        system.ell == numth.lcm(system.ell_p, system.ell_q))
    if two_class == 2:
      yield '2 divides ell = {}'.format(system.ell), system.ell % 2 == 0
    elif two_class in (1, 3):
      yield '4 divides ell = {}'.format(system.ell), system.ell % 4 == 0
