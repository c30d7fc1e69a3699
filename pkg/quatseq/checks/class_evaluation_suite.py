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

"""Values of the class polynomials D_i(X) at 1, beta^(kq) and beta^(kp)."""

from quatseq.algebra import galois_ring
from quatseq.algebra import spectra
from quatseq.checks import invariant_suite
from quatseq.utils import constants


class ClassEvaluationSuite(invariant_suite.InvariantSuite):
  """Checks D_i(1) = 0, D_i(beta^(kq)) = 3(q-1)/4, D_i(beta^(kp)) = 3(p-1)/4.

  The last two hold for every i and every k not divisible by p, respectively
  q.
  """

  name = 'class_evaluations'

  def check_pair(self, context):
    system, ring, beta = context.system, context.ring, context.beta
    p, q = system.p, system.q
    for i in range(constants.NUM_CLASSES):
      yield ('D_{}(1) = 0'.format(i),
             spectra.class_poly_eval(system, i, ring.one()).is_zero())

    at_q = ring.scalar(3 * (q - 1) // 4)
    for k in range(1, p):
      values = spectra.class_poly_values(
          system, galois_ring.power(beta, k * q))
      for i, value in enumerate(values):
        yield 'D_{}(beta^({}q)) = {}'.format(i, k, at_q.coeffs[0]), (
            value == at_q)

    at_p = ring.scalar(3 * (p - 1) // 4)
    for k in range(1, q):
      values = spectra.class_poly_values(
          system, galois_ring.power(beta, k * p))
      for i, value in enumerate(values):
        yield 'D_{}(beta^({}p)) = {}'.format(i, k, at_p.coeffs[0]), (
            value == at_p)
