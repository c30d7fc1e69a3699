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

"""Tests for quatseq.algebra.lc_oracle."""
import itertools
import random

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from quatseq.algebra import cyclotomy
from quatseq.algebra import galois_ring
from quatseq.algebra import lc_oracle
from quatseq.algebra import spectra


def _sequence(values):
  return cyclotomy.QuatSequence(tuple(values))


class SolveTest(parameterized.TestCase):

  def test_examples(self):
    np.testing.assert_array_equal(lc_oracle.solve_mod4([[2]], [2]), [1])
    self.assertIsNone(lc_oracle.solve_mod4([[2]], [1]))
    b = np.array([3, 0, 2])
    np.testing.assert_array_equal(lc_oracle.solve_mod4(np.eye(3, dtype=int), b),
                                  b)

  def test_dimension_mismatch(self):
    with self.assertRaises(lc_oracle.DimensionMismatchError):
      lc_oracle.solve_mod4([[1, 2]], [1, 2])
    with self.assertRaises(lc_oracle.DimensionMismatchError):
      lc_oracle.solve_mod4([1, 2], [1, 2])

  def test_howell_form(self):
    np.testing.assert_array_equal(lc_oracle.howell_form([[2], [2]]), [[2]])
    np.testing.assert_array_equal(
        lc_oracle.howell_form([[1, 2], [3, 1]]), [[1, 0], [0, 1]])
    np.testing.assert_array_equal(
        lc_oracle.howell_form([[2, 1]]), [[2, 1], [0, 2]])
    self.assertEqual(lc_oracle.howell_form([[0, 0]]).shape, (0, 2))

  @parameterized.parameters((2, 2), (3, 2), (3, 3), (2, 3))
  def test_agrees_with_exhaustive_search(self, rows, columns):
    rng = random.Random(rows * 10 + columns)
    candidates = [np.array(x) for x in itertools.product(range(4),
                                                         repeat=columns)]
    for _ in range(60):
      a = np.array([[rng.choice((0, 1, 2, 2, 3)) for _ in range(columns)]
                    for _ in range(rows)])
      b = np.array([rng.randrange(4) for _ in range(rows)])
      solvable = any(not ((a @ x - b) % 4).any() for x in candidates)
      solution = lc_oracle.solve_mod4(a, b)
      self.assertEqual(solution is not None, solvable, msg=(a, b))
      if solution is not None:
        np.testing.assert_array_equal((a @ solution - b) % 4, 0)


class ConnectionTest(parameterized.TestCase):

  def test_connection_poly_needs_unit_constant(self):
    with self.assertRaises(ValueError):
      lc_oracle.ConnectionPoly((2, 1))
    self.assertEqual(lc_oracle.ConnectionPoly((1, 3, 0)).degree, 1)

  def test_check_connection(self):
    ones = _sequence((1, 1, 1))
    self.assertTrue(
        lc_oracle.check_connection(ones, lc_oracle.ConnectionPoly((1, 3))))
    self.assertFalse(
        lc_oracle.check_connection(ones, lc_oracle.ConnectionPoly((1,))))
    self.assertTrue(
        lc_oracle.check_connection(_sequence((0, 0, 0)),
                                   lc_oracle.ConnectionPoly((1,))))

  def test_generating_polynomial(self):
    poly = lc_oracle.generating_polynomial(_sequence((2, 0, 3)))
    self.assertEqual(poly.coeffs, (2, 0, 3))
    self.assertEqual(poly.period, 3)

  def test_minimal_connection_examples(self):
    length, c = lc_oracle.minimal_connection(_sequence((1, 1, 1)))
    self.assertEqual((length, c.coeffs), (1, (1, 3)))
    length, c = lc_oracle.minimal_connection(_sequence((0, 0, 0)))
    self.assertEqual((length, c.coeffs), (0, (1,)))
    impulse = _sequence((2, 0, 0))
    length, c = lc_oracle.minimal_connection(impulse)
    self.assertEqual(length, 3)
    self.assertTrue(lc_oracle.check_connection(impulse, c))
    self.assertIsNone(lc_oracle.connection_of_degree(impulse, 2))

  def test_witness_and_minimality(self):
    rng = random.Random(5)
    for period in (1, 2, 5, 6, 9):
      for _ in range(10):
        sequence = _sequence(rng.randrange(4) for _ in range(period))
        length, c = lc_oracle.minimal_connection(sequence)
        self.assertEqual(c.degree, length)
        self.assertTrue(lc_oracle.check_connection(sequence, c))
        if length:
          self.assertIsNone(
              lc_oracle.connection_of_degree(sequence, length - 1))

  def test_shift_and_scale_invariance(self):
    rng = random.Random(6)
    for _ in range(20):
      sequence = _sequence(rng.randrange(4) for _ in range(9))
      length, _ = lc_oracle.minimal_connection(sequence)
      for k in (1, 4):
        self.assertEqual(
            lc_oracle.minimal_connection(sequence.cyclic_shift(k))[0], length)
      self.assertEqual(
          lc_oracle.minimal_connection(sequence.scale(3))[0], length)
      self.assertLessEqual(
          lc_oracle.minimal_connection(sequence.scale(2))[0], length)


class OracleSpectrumTest(parameterized.TestCase):

  @parameterized.parameters((3, 7), (4, 15))
  def test_oracle_matches_spectrum(self, r, period):
    ring = galois_ring.build_ring(r)
    beta = galois_ring.primitive_nth_root(ring, period)
    rng = random.Random(period)
    for _ in range(100):
      sequence = _sequence(rng.randrange(4) for _ in range(period))
      length, _ = lc_oracle.minimal_connection(sequence)
      self.assertEqual(length, spectra.dft(sequence, beta).nonzero_count,
                       msg=sequence.values)

  @parameterized.parameters(
      (5, 13, 41),
      (17, 5, 85),
      (5, 17, 65),
  )
  def test_cyclotomic_sequences(self, p, q, expected):
    sequence = cyclotomy.build_sequence(cyclotomy.build_system(p, q))
    length, c = lc_oracle.minimal_connection(sequence)
    self.assertEqual(length, expected)
    self.assertTrue(lc_oracle.check_connection(sequence, c))


if __name__ == '__main__':
  absltest.main()
