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

"""Sums of the pth and qth roots of unity, and of the class polynomials."""

from quatseq.algebra import galois_ring
from quatseq.algebra import spectra
from quatseq.checks import invariant_suite


class RootOfUnitySumsSuite(invariant_suite.InvariantSuite):
  """Checks sum_j beta^(jp) = 0, sum_j beta^(jq) = 0, sum_i D_i(beta) = 1."""

  name = 'root_of_unity_sums'

  def check_pair(self, context):
    system, ring, beta = context.system, context.ring, context.beta
    p, q = system.p, system.q
    table = galois_ring.power_table(beta, system.modulus)
    p_sum = ring.from_array(table[[j * p for j in range(q)]].sum(axis=0))
    yield 'sum_j beta^(jp) = 0', p_sum.is_zero()
    q_sum = ring.from_array(table[[j * q for j in range(p)]].sum(axis=0))
    yield 'sum_j beta^(jq) = 0', q_sum.is_zero()

    total = ring.zero()
    for value in spectra.class_poly_values(system, beta):
      total = total + value
    yield 'sum_i D_i(beta) = 1', total == ring.one()
