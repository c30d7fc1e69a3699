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

"""The abstract class for implementing invariant suites.

An invariant suite checks one family of identities of the construction on a
list of parameter pairs (p, q). For each pair it receives a SuiteContext, the
cyclotomic system together with the ring GR(4, 4^ell) and an element beta of
order pq, and yields (description, passed) for every individual check.

The inherited class must implement check_pair and set name. See
root_of_unity_sums_suite.py as an example on how it is implemented.

Building the context may itself fail, for instance when the table of binary
irreducible polynomials is corrupted. Such a failure counts as one failed
check of the pair instead of aborting the suite.
"""
import abc
import dataclasses
from typing import Callable, Iterable, Sequence, Tuple

from absl import logging

from quatseq.algebra import cyclotomy
from quatseq.algebra import galois_ring
from quatseq.checks import util as checks_util
from quatseq.utils import constants


@dataclasses.dataclass(frozen=True)
class SuiteContext:
  system: cyclotomy.CyclotomicSystem
  ring: galois_ring.GaloisRing
  beta: galois_ring.GrElement


def build_context(p: int, q: int) -> SuiteContext:
  system = cyclotomy.build_system(p, q)
  ring = galois_ring.build_ring(system.ell)
  beta = galois_ring.primitive_nth_root(ring, system.modulus)
  return SuiteContext(system, ring, beta)


class InvariantSuite(abc.ABC):
  """The abstract class for implementing invariant suites."""

  name = None

  def __init__(
      self,
      parameter_sets: Sequence[Tuple[int, int]] = (
          constants.BUILTIN_PARAMETER_SETS),
      context_builder: Callable[[int, int], SuiteContext] = build_context):
    """Constructor function.

    Args:
      parameter_sets: The pairs (p, q) to check.
      context_builder: Builds the SuiteContext of a pair, so that several
        suites can share one cache of contexts.
    """
    self.parameter_sets = tuple(parameter_sets)
    self.context_builder = context_builder

  def build_context(self, parameters: Tuple[int, ...]):
    return self.context_builder(*parameters)

  def describe(self, parameters: Tuple[int, ...]) -> str:
    p, q = parameters
    return 'p={} q={}'.format(p, q)

  @abc.abstractmethod
  def check_pair(self, context: SuiteContext) -> Iterable[Tuple[str, bool]]:
    """Yields (description, passed) for each check on one pair."""
    pass

  def evaluate(self) -> checks_util.Results:
    """Runs the checks on every parameter pair.

    Returns:
      The Results of the suite. Every failed check is also logged.
    """
    results = checks_util.Results(name=self.name, total=0)
    for parameters in self.parameter_sets:
      prefix = self.describe(parameters)
      try:
        context = self.build_context(parameters)
        for description, passed in self.check_pair(context):
          results.total += 1
          if not passed:
            results.failures.append('{}: {}'.format(prefix, description))
      except (ArithmeticError, AssertionError, ValueError) as e:
        results.total += 1
        results.failures.append('{}: {}: {}'.format(prefix,
                                                    type(e).__name__, e))
    for failure in results.failures:
      logging.error('%s failed: %s', self.name, failure)
    logging.info('%s: %d checks, %d failed.', self.name, results.total,
                 len(results.failures))
    return results
