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

"""Linear complexity over Z_4 from the connection polynomial definition.

A polynomial C(X) = 1 + c_1 X + ... + c_L X^L generates a sequence of period
T iff S(X) C(X) = 0 (mod X^T - 1), S(X) being the generating polynomial of one
period. The linear complexity is the least L for which such a C exists. Each L
is tested by solving the T linear equations in c_1, ..., c_L over Z_4 through
the Howell form, and L is located by bisection since feasibility is monotone
in L.
"""
import dataclasses
from typing import List, Optional, Tuple

from absl import logging
import numpy as np

from quatseq.algebra import cyclotomy

_MODULUS = 4


class DimensionMismatchError(ValueError):
  """Raised when a linear system has inconsistent shapes."""
  pass


@dataclasses.dataclass(frozen=True)
class ConnectionPoly:
  """C(X) = 1 + c_1 X + ... + c_L X^L, constant term first."""
  coeffs: Tuple[int, ...]

  def __post_init__(self):
    coeffs = tuple(int(c) % _MODULUS for c in self.coeffs)
    if not coeffs or coeffs[0] != 1:
      raise ValueError(
          'A connection polynomial needs constant term 1, got {}.'.format(
              coeffs))
    object.__setattr__(self, 'coeffs', coeffs)

  @property
  def degree(self) -> int:
    nonzero = [i for i, c in enumerate(self.coeffs) if c]
    return nonzero[-1]

  def to_list(self) -> List[int]:
    return list(self.coeffs)


@dataclasses.dataclass(frozen=True)
class GeneratingPoly:
  """S(X) = s_0 + s_1 X + ... + s_{T-1} X^(T-1)."""
  coeffs: Tuple[int, ...]

  @property
  def period(self) -> int:
    return len(self.coeffs)

  def multiply_mod_period(self, c: ConnectionPoly) -> np.ndarray:
    """Returns the coefficients of S(X) C(X) mod X^T - 1."""
    period = self.period
    folded = np.zeros(period, dtype=np.int64)
    for j, coefficient in enumerate(c.coeffs):
      folded[j % period] += coefficient
    s = np.array(self.coeffs, dtype=np.int64)
    u = np.arange(period)
    circulant = s[(u[:, None] - u[None, :]) % period]
    return circulant @ folded % _MODULUS


def generating_polynomial(sequence: cyclotomy.QuatSequence) -> GeneratingPoly:
  return GeneratingPoly(sequence.values)


def check_connection(sequence: cyclotomy.QuatSequence,
                     c: ConnectionPoly) -> bool:
  """Checks S(X) C(X) = 0 (mod X^T - 1) over Z_4."""
  product = generating_polynomial(sequence).multiply_mod_period(c)
  return not product.any()


def _reduce(matrix: np.ndarray,
            num_columns: int) -> Tuple[List[np.ndarray], List[Tuple[int, int]]]:
  """Row reduces over Z_4, pivoting only on the first num_columns columns.

  A unit pivot is normalized to 1 and cleared from every other row. A pivot 2
  clears the 2s below it, reduces the entries above it to {0, 1}, and its
  annihilator row 2 * row is appended so that no relation is lost.

  Args:
    matrix: The matrix, entries taken mod 4.
    num_columns: Number of leading columns that may hold pivots.

  Returns:
    The reduced rows and, for each pivot row in order, (column, pivot value).
    Rows past the pivot rows are zero on the first num_columns columns.
  """
  rows = [row % _MODULUS for row in np.array(matrix, dtype=np.int64)]
  pivots = []
  r = 0
  for column in range(num_columns):
    unit = next((i for i in range(r, len(rows)) if rows[i][column] % 2), None)
    if unit is not None:
      rows[r], rows[unit] = rows[unit], rows[r]
      # Units of Z_4 are their own inverses.
      rows[r] = rows[r] * rows[r][column] % _MODULUS
      for i in range(len(rows)):
        if i != r and rows[i][column]:
          rows[i] = (rows[i] - rows[i][column] * rows[r]) % _MODULUS
      pivots.append((column, 1))
      r += 1
      continue
    two = next((i for i in range(r, len(rows)) if rows[i][column]), None)
    if two is None:
      continue
    rows[r], rows[two] = rows[two], rows[r]
    for i in range(len(rows)):
      if i > r and rows[i][column]:
        rows[i] = (rows[i] - rows[r]) % _MODULUS
      elif i < r and rows[i][column] >= 2:
        rows[i] = (rows[i] - rows[r]) % _MODULUS
    annihilator = 2 * rows[r] % _MODULUS
    if annihilator.any():
      rows.append(annihilator)
    pivots.append((column, 2))
    r += 1
  return rows, pivots


def howell_form(matrix: np.ndarray) -> np.ndarray:
  """Returns the nonzero rows of the Howell form of a matrix over Z_4.

  Args:
    matrix: A 2-dimensional array of integers.

  Returns:
    An array with one row per pivot, in echelon order. Pivots are 1 or 2,
    entries above a pivot are reduced modulo the pivot.
  """
  matrix = np.asarray(matrix)
  if matrix.ndim != 2:
    raise DimensionMismatchError('Expected a matrix, got shape {}.'.format(
        matrix.shape))
  rows, pivots = _reduce(matrix, matrix.shape[1])
  if not pivots:
    return np.zeros((0, matrix.shape[1]), dtype=np.int64)
  return np.stack(rows[:len(pivots)])


def solve_mod4(a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
  """Solves a x = b over Z_4.

  Args:
    a: An (m, n) matrix.
    b: A vector of length m.

  Returns:
    A solution with free variables set to 0, or None if there is none.

  Raises:
    DimensionMismatchError: If the shapes of a and b disagree.
  """
  a = np.asarray(a, dtype=np.int64)
  b = np.asarray(b, dtype=np.int64)
  if a.ndim != 2 or b.ndim != 1 or a.shape[0] != b.shape[0]:
    raise DimensionMismatchError(
        'Cannot solve a system with matrix {} and right-hand side {}.'.format(
            a.shape, b.shape))
  num_unknowns = a.shape[1]
  augmented = np.concatenate([a, b[:, None]], axis=1) % _MODULUS
  rows, pivots = _reduce(augmented, num_unknowns)
  if any(row[num_unknowns] for row in rows[len(pivots):]):
    return None

  x = np.zeros(num_unknowns, dtype=np.int64)
  for k in reversed(range(len(pivots))):
    column, pivot = pivots[k]
    row = rows[k]
    residual = (row[num_unknowns] -
                row[column + 1:num_unknowns] @ x[column + 1:]) % _MODULUS
    if pivot == 1:
      x[column] = residual
    elif residual % 2:
      raise AssertionError('Odd residual {} against pivot 2 in column {}.'
                           .format(residual, column))
    else:
      x[column] = residual // 2
  if ((a @ x - b) % _MODULUS).any():
    raise AssertionError('Back substitution produced a non-solution.')
  return x


def _recurrence_system(values: np.ndarray,
                       degree: int) -> Tuple[np.ndarray, np.ndarray]:
  """Equations sum_{j=1}^{degree} c_j s_{u-j} = -s_u for 0 <= u < T."""
  period = len(values)
  u = np.arange(period)
  j = np.arange(1, degree + 1)
  a = values[(u[:, None] - j[None, :]) % period]
  return a, -values % _MODULUS


def connection_of_degree(sequence: cyclotomy.QuatSequence,
                         degree: int) -> Optional[ConnectionPoly]:
  """Returns a connection polynomial of degree at most degree, if any."""
  values = np.array(sequence.values, dtype=np.int64)
  if degree == 0:
    return ConnectionPoly((1,)) if not values.any() else None
  a, b = _recurrence_system(values, degree)
  solution = solve_mod4(a, b)
  if solution is None:
    return None
  return ConnectionPoly((1,) + tuple(int(c) for c in solution))


def minimal_connection(
    sequence: cyclotomy.QuatSequence) -> Tuple[int, ConnectionPoly]:
  """Returns the linear complexity L and a connection polynomial witnessing it.

  Args:
    sequence: One period of the sequence.

  Returns:
    (L, C) with C of degree L, C(0) = 1 and S(X) C(X) = 0 mod X^T - 1. No
    connection polynomial of degree L - 1 exists.
  """
  if sequence.is_zero():
    return 0, ConnectionPoly((1,))
  period = sequence.period
  # 1 - X^T = 0 mod X^T - 1, so degree T always works.
  best = ConnectionPoly((1,) + (0,) * (period - 1) + (_MODULUS - 1,))
  infeasible, feasible = 0, period
  while feasible - infeasible > 1:
    middle = (infeasible + feasible) // 2
    witness = connection_of_degree(sequence, middle)
    if witness is None:
      infeasible = middle
    else:
      feasible, best = middle, witness
  logging.debug('Linear complexity %d at period %d.', feasible, period)
  return feasible, ConnectionPoly(best.coeffs[:feasible + 1])
