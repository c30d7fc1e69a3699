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

"""Discrete Fourier transform of quaternary sequences over Galois rings.

For a sequence (s_u) of odd period T and beta of order T in GR(4, 4^r), the
spectrum is

  rho_i = T^-1 * sum_u s_u beta^(-iu),

and the Mattson-Solomon polynomial G(X) = sum_i rho_i X^i recovers the
sequence as s_u = G(beta^u). The linear complexity of (s_u) over Z_4 is the
number of nonzero rho_i.

For the cyclotomic sequence of period pq the spectrum has a closed form in
terms of rho = D_1(beta) + 2 D_2(beta) + 3 D_3(beta), which also yields a
closed form for the linear complexity and a representation of the sequence
as a sum of traces.
"""
import dataclasses
import functools
from typing import List, Optional, Tuple

import numpy as np

from quatseq.algebra import cyclotomy
from quatseq.algebra import galois_ring
from quatseq.algebra import numth
from quatseq.utils import constants

_MODULUS = 4


class OrderMismatchError(ValueError):
  """Raised when a root of unity does not have the required order."""
  pass


class NotScalarError(ValueError):
  """Raised when a value expected in Z_4 has non-constant coefficients."""
  pass


@dataclasses.dataclass(frozen=True)
class Spectrum:
  """DFT coefficients rho_0, ..., rho_{T-1} with respect to beta.

  Attributes:
    period: The period T.
    ring: The Galois ring holding beta and the coefficients.
    beta: The primitive T-th root of unity used.
    coeffs: The coefficients, rho_i being the coefficient of X^i in G(X).
  """
  period: int
  ring: galois_ring.GaloisRing
  beta: galois_ring.GrElement
  coeffs: Tuple[galois_ring.GrElement, ...]

  @property
  def nonzero_count(self) -> int:
    return sum(1 for rho in self.coeffs if not rho.is_zero())

  @functools.cached_property
  def powers(self) -> np.ndarray:
    """Row k holds beta^k, 0 <= k < T."""
    return galois_ring.power_table(self.beta, self.period)

  def to_array(self) -> np.ndarray:
    return np.array([rho.coeffs for rho in self.coeffs], dtype=np.int64)

  def to_lists(self) -> List[List[int]]:
    return [rho.to_list() for rho in self.coeffs]


@dataclasses.dataclass(frozen=True)
class ClosedFormReport:
  """Linear complexity predicted from rho.

  Attributes:
    rho: D_1(beta) + 2 D_2(beta) + 3 D_3(beta).
    zero_branch: The k in {0, 1, 2, 3} with rho - k = 0, if any.
    lc_full: The linear complexity when no such k exists.
    lc_predicted: lc_full, reduced by e when zero_branch is set.
    case: The case of (p, q).
  """
  rho: galois_ring.GrElement
  zero_branch: Optional[int]
  lc_full: int
  lc_predicted: int
  case: numth.CaseTag


def _check_order(beta: galois_ring.GrElement, n: int):
  if not galois_ring.has_order(beta, n):
    raise OrderMismatchError(
        'Root of unity {} does not have order {}.'.format(beta, n))


def _as_scalar(value: np.ndarray, what: str) -> int:
  value = np.asarray(value) % _MODULUS
  if value[1:].any():
    raise NotScalarError('{} = {} is not in Z_4.'.format(what, value.tolist()))
  return int(value[0])


def _class_sums(system: cyclotomy.CyclotomicSystem,
                table: np.ndarray) -> np.ndarray:
  """Returns a (4, r) array whose row i is the sum of table rows over D_i."""
  return np.stack([
      table[list(members)].sum(axis=0) % _MODULUS
      for members in system.classes
  ])


def class_poly_values(
    system: cyclotomy.CyclotomicSystem,
    a: galois_ring.GrElement) -> List[galois_ring.GrElement]:
  """Returns [D_0(a), D_1(a), D_2(a), D_3(a)]."""
  table = galois_ring.power_table(a, system.modulus)
  return [a.ring.from_array(row) for row in _class_sums(system, table)]


def class_poly_eval(system: cyclotomy.CyclotomicSystem, i: int,
                    a: galois_ring.GrElement) -> galois_ring.GrElement:
  """Returns D_i(a), the sum of a^u over u in D_i."""
  table = galois_ring.power_table(a, system.modulus)
  members = list(cyclotomy.class_residues(system, i))
  return a.ring.from_array(table[members].sum(axis=0))


def dft(sequence: cyclotomy.QuatSequence,
        beta: galois_ring.GrElement) -> Spectrum:
  """Computes the spectrum of a sequence.

  Args:
    sequence: A sequence of odd period T.
    beta: An element of order exactly T.

  Returns:
    The Spectrum, normalized by T^-1 mod 4 so that reconstruct inverts it for
    every odd T.

  Raises:
    OrderMismatchError: If beta does not have order T.
  """
  period = sequence.period
  if period % 2 == 0:
    raise OrderMismatchError('Period {} is even.'.format(period))
  _check_order(beta, period)
  ring = beta.ring
  table = galois_ring.power_table(beta, period)
  values = np.array(sequence.values, dtype=np.int64)
  exponents = np.arange(period)
  # T^2 = 1 mod 4 for odd T.
  normalization = period % _MODULUS
  coeffs = []
  for i in range(period):
    rows = table[(-i * exponents) % period]
    rho = normalization * (values @ rows)
    coeffs.append(ring.from_array(rho))
  return Spectrum(period, ring, beta, tuple(coeffs))


def _evaluate(spectrum: Spectrum, table: np.ndarray,
              exponents: np.ndarray) -> np.ndarray:
  products = spectrum.ring.multiply_arrays(spectrum.to_array(),
                                           table[exponents])
  return products.sum(axis=0) % _MODULUS


def reconstruct(spectrum: Spectrum, u: int) -> int:
  """Returns G(beta^u), which must lie in Z_4.

  Raises:
    NotScalarError: If G(beta^u) has nonzero non-constant coefficients.
  """
  period = spectrum.period
  exponents = np.arange(period) * u % period
  return _as_scalar(
      _evaluate(spectrum, spectrum.powers, exponents), 'G(beta^{})'.format(u))


def reconstruct_sequence(spectrum: Spectrum) -> cyclotomy.QuatSequence:
  return cyclotomy.QuatSequence(
      tuple(reconstruct(spectrum, u) for u in range(spectrum.period)))


def ms_evaluate(spectrum: Spectrum,
                x: galois_ring.GrElement) -> galois_ring.GrElement:
  """Evaluates the Mattson-Solomon polynomial G at an arbitrary element."""
  if x.ring != spectrum.ring:
    raise galois_ring.RingMismatchError('Cannot evaluate G at {}.'.format(x))
  table = galois_ring.power_table(x, spectrum.period)
  return spectrum.ring.from_array(
      _evaluate(spectrum, table, np.arange(spectrum.period)))


def linear_complexity_from_spectrum(spectrum: Spectrum) -> int:
  return spectrum.nonzero_count


def rho_parameter(system: cyclotomy.CyclotomicSystem,
                  beta: galois_ring.GrElement) -> galois_ring.GrElement:
  """Returns rho = D_1(beta) + 2 D_2(beta) + 3 D_3(beta).

  Raises:
    OrderMismatchError: If beta does not have order pq.
  """
  return shifted_rho(system, beta, 0)


def shifted_rho(system: cyclotomy.CyclotomicSystem,
                beta: galois_ring.GrElement, m: int) -> galois_ring.GrElement:
  """Returns sum_i i D_{i+m}(beta), which equals rho - m."""
  _check_order(beta, system.modulus)
  values = class_poly_values(system, beta)
  total = beta.ring.zero()
  for i in range(1, constants.NUM_CLASSES):
    total = total + i * values[(i + m) % constants.NUM_CLASSES]
  return total


def _class_coefficient_offset(case: numth.CaseTag) -> int:
  """The D_k coefficient of G is rho + offset - k."""
  if case == numth.CaseTag.CASE_55:
    return 0
  elif case in (numth.CaseTag.CASE_15, numth.CaseTag.CASE_51):
    return 2
  raise ValueError('Unknown case {}.'.format(case))


def ms_closed_form(system: cyclotomy.CyclotomicSystem,
                   beta: galois_ring.GrElement) -> Spectrum:
  """Assembles the spectrum of the cyclotomic sequence from rho.

  Case55: G(X) = 2 sum_{j<p} X^(jq) + sum_k (rho - k) D_k(X).
  Case15: G(X) = 2 sum_{j<p} X^(jq) + 2 sum_{0<j<q} X^(jp)
                 + sum_k (rho + 2 - k) D_k(X).
  Case51: G(X) = 2 + sum_k (rho + 2 - k) D_k(X).

  Args:
    system: The cyclotomic system.
    beta: An element of order pq.

  Returns:
    The Spectrum with the coefficients placed by index.

  Raises:
    OrderMismatchError: If beta does not have order pq.
  """
  n = system.modulus
  _check_order(beta, n)
  ring = beta.ring
  rho = rho_parameter(system, beta)
  offset = _class_coefficient_offset(system.case)

  two = ring.scalar(2)
  zero = ring.zero()
  coeffs = [zero] * n
  coeffs[0] = two
  if system.case in (numth.CaseTag.CASE_55, numth.CaseTag.CASE_15):
    for index in system.set_q:
      coeffs[index] = two
  if system.case == numth.CaseTag.CASE_15:
    for index in system.set_p:
      coeffs[index] = two
  for k, members in enumerate(system.classes):
    coefficient = rho + (offset - k)
    for index in members:
      coeffs[index] = coefficient
  return Spectrum(n, ring, beta, tuple(coeffs))


def full_linear_complexity(system: cyclotomy.CyclotomicSystem) -> int:
  """Returns the linear complexity when no D_k coefficient vanishes."""
  p, q = system.p, system.q
  if system.case == numth.CaseTag.CASE_55:
    return p + (p - 1) * (q - 1)
  elif system.case == numth.CaseTag.CASE_15:
    return p + q - 1 + (p - 1) * (q - 1)
  elif system.case == numth.CaseTag.CASE_51:
    return 1 + (p - 1) * (q - 1)
  raise ValueError('Unknown case {}.'.format(system.case))


def lc_closed_form(system: cyclotomy.CyclotomicSystem,
                   beta: galois_ring.GrElement) -> ClosedFormReport:
  """Predicts the linear complexity from rho.

  Raises:
    OrderMismatchError: If beta does not have order pq.
  """
  rho = rho_parameter(system, beta)
  zero_branches = [
      k for k in range(constants.NUM_CLASSES) if (rho - k).is_zero()]
  if len(zero_branches) > 1:
    raise AssertionError('rho - k vanishes for several k: {}.'.format(
        zero_branches))
  zero_branch = zero_branches[0] if zero_branches else None
  lc_full = full_linear_complexity(system)
  lc_predicted = lc_full - (system.e if zero_branch is not None else 0)
  return ClosedFormReport(rho, zero_branch, lc_full, lc_predicted,
                          system.case)


def lc_by_branch_rule(system: cyclotomy.CyclotomicSystem) -> int:
  """Predicts the linear complexity from the class of 2 alone.

  The Frobenius map sends D_i(beta) to D_{i+t}(beta) with 2 in D_t, so it
  sends rho to rho - t. rho lies in Z_4, and one D_k coefficient vanishes,
  exactly when t = 0.
  """
  lc_full = full_linear_complexity(system)
  if cyclotomy.two_class(system) == 0:
    return lc_full - system.e
  return lc_full


def tuple_inner_product(system: cyclotomy.CyclotomicSystem,
                        beta: galois_ring.GrElement, i: int,
                        j: int) -> galois_ring.GrElement:
  """Returns sum_k D_{i+k}(beta) D_{j+k}(beta).

  Raises:
    OrderMismatchError: If beta does not have order pq.
  """
  _check_order(beta, system.modulus)
  values = class_poly_values(system, beta)
  total = beta.ring.zero()
  for k in range(constants.NUM_CLASSES):
    total = total + (values[(i + k) % constants.NUM_CLASSES] *
                     values[(j + k) % constants.NUM_CLASSES])
  return total


@dataclasses.dataclass(frozen=True)
class _TracePlan:
  """Which traces represent D_k(X) for a given system.

  D_0 splits into cosets g^i <2^step> and D_k(beta^u) is the sum over the
  coset representatives of TR_step^ell(beta^(u g^i h^k)).
  """
  step: int
  class_representatives: Tuple[int, ...]
  q_representatives: Tuple[int, ...]
  p_representatives: Tuple[int, ...]


def _trace_plan(system: cyclotomy.CyclotomicSystem) -> _TracePlan:
  """Selects the trace degree from the case and the class of 2."""
  two_class = cyclotomy.two_class(system)
  if system.case == numth.CaseTag.CASE_55 and two_class == 0:
    step = 1
  elif system.case == numth.CaseTag.CASE_55 and two_class == 2:
    step = 2
  elif system.case in (numth.CaseTag.CASE_15, numth.CaseTag.CASE_51):
    step = 4
  else:
    raise AssertionError('2 in D_{} is impossible in {}.'.format(
        two_class, system.case.value))
  cosets = cyclotomy.power_cosets(system, 2**step)
  if len(cosets) != step * system.e // system.ell:
    raise AssertionError('D_0 splits into {} cosets, expected {}.'.format(
        len(cosets), step * system.e // system.ell))
  class_representatives = tuple(coset[0] for coset in cosets)

  q_representatives = ()
  p_representatives = ()
  if system.case in (numth.CaseTag.CASE_55, numth.CaseTag.CASE_15):
    q_representatives = tuple(
        coset[0] for coset in cyclotomy.residue_cosets(system.p, system.g))
  if system.case == numth.CaseTag.CASE_15:
    p_representatives = tuple(
        coset[0] for coset in cyclotomy.residue_cosets(system.q, system.g))
  return _TracePlan(step, class_representatives, q_representatives,
                    p_representatives)


def _table_trace(table: np.ndarray, exponent: int, s: int,
                 degree: int) -> np.ndarray:
  """TR_s^degree(beta^exponent) for Teichmuller beta, read off a power table.

  Row k of table holds beta^k for 0 <= k < n, n the order of beta.
  """
  n = table.shape[0]
  exponents = [exponent * pow(2, s * k, n) % n for k in range(degree // s)]
  return table[exponents].sum(axis=0) % _MODULUS


def _trace_value(system: cyclotomy.CyclotomicSystem, plan: _TracePlan,
                 table: np.ndarray, coefficients: List[np.ndarray],
                 ring: galois_ring.GaloisRing, u: int) -> int:
  n = system.modulus
  total = np.zeros(ring.r, dtype=np.int64)
  total[0] = 2
  for representative in plan.q_representatives:
    total += 2 * _table_trace(table, u * representative * system.q % n, 1,
                              system.ell_p)
  for representative in plan.p_representatives:
    total += 2 * _table_trace(table, u * representative * system.p % n, 1,
                              system.ell_q)
  for k in range(constants.NUM_CLASSES):
    shift = pow(system.h, k, n)
    inner = np.zeros(ring.r, dtype=np.int64)
    for representative in plan.class_representatives:
      inner += _table_trace(table, u * representative * shift % n, plan.step,
                            system.ell)
    total += ring.multiply_arrays(coefficients[k], inner % _MODULUS)
  return _as_scalar(total, 'trace representation at u={}'.format(u))


def _trace_coefficients(system: cyclotomy.CyclotomicSystem,
                        beta: galois_ring.GrElement) -> List[np.ndarray]:
  rho = rho_parameter(system, beta)
  offset = _class_coefficient_offset(system.case)
  return [(rho + (offset - k)).to_array()
          for k in range(constants.NUM_CLASSES)]


def trace_representation(system: cyclotomy.CyclotomicSystem,
                         beta: galois_ring.GrElement, u: int) -> int:
  """Evaluates e_u through its trace representation.

  Case55 uses TR_1^ell when 2 is in D_0 and TR_2^ell when 2 is in D_2,
  Case15 and Case51 use TR_4^ell. The sums over P and Q use TR_1^ell_q and
  TR_1^ell_p, evaluated inside the full ring.

  Args:
    system: The cyclotomic system.
    beta: An element of order pq in GR(4, 4^ell).
    u: The sequence index.

  Returns:
    The value in Z_4, which equals e_u.

  Raises:
    OrderMismatchError: If beta does not have order pq.
    NotScalarError: If the trace sum is not in Z_4.
  """
  n = system.modulus
  _check_order(beta, n)
  table = galois_ring.power_table(beta, n)
  return _trace_value(system, _trace_plan(system), table,
                      _trace_coefficients(system, beta), beta.ring, u % n)


def trace_sequence(system: cyclotomy.CyclotomicSystem,
                   beta: galois_ring.GrElement) -> cyclotomy.QuatSequence:
  """Evaluates the trace representation at every index of one period."""
  n = system.modulus
  _check_order(beta, n)
  table = galois_ring.power_table(beta, n)
  plan = _trace_plan(system)
  coefficients = _trace_coefficients(system, beta)
  return cyclotomy.QuatSequence(tuple(
      _trace_value(system, plan, table, coefficients, beta.ring, u)
      for u in range(n)))
