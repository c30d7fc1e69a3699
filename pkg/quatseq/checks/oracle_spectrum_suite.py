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

"""Agreement of the minimal connection degree with the spectrum count.

For random sequences of a short period T, the degree of the minimal connection
polynomial over Z_4 must equal the number of nonzero DFT coefficients of the
sequence, computed with an element of order T in GR(4, 4^r).
"""
import dataclasses
import random

import tqdm

from quatseq.algebra import cyclotomy
from quatseq.algebra import galois_ring
from quatseq.algebra import lc_oracle
from quatseq.algebra import spectra
from quatseq.checks import invariant_suite
from quatseq.utils import constants


@dataclasses.dataclass(frozen=True)
class RandomSequenceContext:
  period: int
  beta: galois_ring.GrElement
  sequences: tuple


class OracleSpectrumSuite(invariant_suite.InvariantSuite):
  """Checks minimal_connection against the spectrum on random sequences."""

  name = 'oracle_spectrum'

  def __init__(self, periods=constants.RANDOM_SEQUENCE_PERIODS, seed=0,
               num_sequences=200):
    """Constructor function.

    Args:
      periods: Mapping from period T to the degree r of the ring used for it.
      seed: Seed of the random sequences.
      num_sequences: Number of random sequences per period.
    """
    super().__init__(parameter_sets=tuple(sorted(periods.items())))
    self.seed = seed
    self.num_sequences = num_sequences

  def build_context(self, parameters):
    period, r = parameters
    ring = galois_ring.build_ring(r)
    beta = galois_ring.primitive_nth_root(ring, period)
    rng = random.Random(self.seed * 1000003 + period)
    sequences = tuple(
        cyclotomy.QuatSequence(tuple(
            rng.randrange(constants.ALPHABET_SIZE) for _ in range(period)))
        for _ in range(self.num_sequences))
    return RandomSequenceContext(period, beta, sequences)

  def describe(self, parameters):
    period, r = parameters
    return 'period={} r={}'.format(period, r)

  def check_pair(self, context):
    for sequence in tqdm.tqdm(
        context.sequences,
        desc='Random sequences of period {}'.format(context.period),
        disable=len(context.sequences) < 50):
      length, _ = lc_oracle.minimal_connection(sequence)
      count = spectra.dft(sequence, context.beta).nonzero_count
      yield 'L = {} vs {} nonzero coefficients for {}'.format(
          length, count, sequence.values), length == count
