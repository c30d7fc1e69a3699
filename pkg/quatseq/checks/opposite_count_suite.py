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

"""Counts of w in D_0 that are opposite to h^a modulo p, q and pq."""

from quatseq.algebra import cyclotomy
from quatseq.checks import invariant_suite
from quatseq.utils import constants


class OppositeCountSuite(invariant_suite.InvariantSuite):
  """Checks the number of w in D_0 with h^a + w = 0, for a in 0..3.

  Modulo p there are (q-1)/4 of them and modulo q there are (p-1)/4. Modulo
  pq there is one exactly when (p-1)/2 + a - (q-1)/2 = 0 (mod 4).
  """

  name = 'opposite_counts'

  def check_pair(self, context):
    system = context.system
    p, q, n = system.p, system.q, system.modulus
    for a in range(constants.NUM_CLASSES):
      yield ('{} opposites of h^{} modulo p'.format((q - 1) // 4, a),
             cyclotomy.count_opposites(system, a, p) == (q - 1) // 4)
      yield ('{} opposites of h^{} modulo q'.format((p - 1) // 4, a),
             cyclotomy.count_opposites(system, a, q) == (p - 1) // 4)

      expected = ((p - 1) // 2 + a - (q - 1) // 2) % 4 == 0
      w = cyclotomy.simultaneous_opposite(system, a)
      yield ('h^{} has {} opposite modulo pq'.format(a, 'an' if expected
                                                      else 'no'),
             (w is not None) == expected and
             cyclotomy.count_opposites(system, a, n) == int(expected))
      if w is not None:
        yield 'h^{} + {} = 0 modulo pq'.format(a, w), (
            (pow(system.h, a, n) + w) % n == 0)
