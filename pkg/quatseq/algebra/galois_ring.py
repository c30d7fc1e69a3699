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

"""Exact arithmetic in the Galois ring GR(4, 4^r).

The ring is Z_4[X]/(f(X)) where f is a basic irreducible polynomial of degree
r, obtained by lifting a binary irreducible polynomial with the Graeffe
construction f(X^2) = +-b(X)b(-X). Elements are stored as r coefficients in
{0, 1, 2, 3}, constant term first.

Every element a has a unique 2-adic expansion a = a1 + 2 a2 with a1, a2 in the
Teichmuller set T = {0} U <xi>, the solutions of t^(2^r) = t. The Frobenius
automorphism maps a1 + 2 a2 to a1^2 + 2 a2^2, and the trace TR_s^r sums the
orbit of an element under the s-th power of the Frobenius map.

Binary polynomials are encoded as Python integers whose bit i is the
coefficient of x^i.
"""
import dataclasses
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from absl import logging
import numpy as np

from quatseq.algebra import numth
from quatseq.utils import constants

_MODULUS = 4


class NotIrreducibleError(ValueError):
  """Raised when a binary polynomial expected to be irreducible is not."""
  pass


class RingMismatchError(ValueError):
  """Raised when the operands of a ring operation live in different rings."""
  pass


class NotADivisorError(ValueError):
  """Raised when a Frobenius power or trace degree does not divide r."""
  pass


class OrderUnavailableError(ValueError):
  """Raised when the ring has no element of the requested order."""
  pass


class NotInvertibleError(ValueError):
  """Raised when inverting an element that is not a unit."""
  pass


def _gf2_mod(a: int, f: int) -> int:
  degree = f.bit_length()
  while a.bit_length() >= degree:
    a ^= f << (a.bit_length() - degree)
  return a


def _gf2_mulmod(a: int, b: int, f: int) -> int:
  product = 0
  while b:
    if b & 1:
      product ^= a
    a <<= 1
    b >>= 1
  return _gf2_mod(product, f)


def _gf2_gcd(a: int, b: int) -> int:
  while b:
    a, b = b, _gf2_mod(a, b)
  return a


def is_binary_irreducible(poly: int) -> bool:
  """Checks irreducibility over the 2-element field.

  A polynomial of degree d is irreducible iff gcd(x^(2^i) - x, poly) = 1 for
  1 <= i <= d/2.

  Args:
    poly: The polynomial, bit i being the coefficient of x^i.

  Returns:
    True iff poly has degree at least 1 and no nontrivial factor.
  """
  degree = poly.bit_length() - 1
  if degree < 1:
    return False
  x = 0b10
  power = x
  for _ in range(degree // 2):
    power = _gf2_mulmod(power, power, poly)
    if _gf2_gcd(poly, power ^ x) != 1:
      return False
  return True


def binary_irreducible(r: int) -> int:
  """Returns the lexicographically smallest irreducible of degree r.

  Small degrees come from constants.BINARY_IRREDUCIBLES. Other degrees are
  found by walking the odd polynomials of degree r upwards.

  Args:
    r: The degree, at least 1.

  Returns:
    The polynomial encoded as an integer.
  """
  if r < 1:
    raise ValueError('Degree must be at least 1, got {}.'.format(r))
  if r in constants.BINARY_IRREDUCIBLES:
    poly = constants.BINARY_IRREDUCIBLES[r]
    if poly.bit_length() - 1 != r:
      raise ValueError('Table entry {:b} does not have degree {}.'.format(
          poly, r))
    return poly
  logging.info('Searching for a binary irreducible polynomial of degree %d.',
               r)
  for poly in range((1 << r) | 1, 1 << (r + 1), 2):
    if is_binary_irreducible(poly):
      return poly
  raise AssertionError('No irreducible polynomial of degree {}.'.format(r))


@dataclasses.dataclass(frozen=True)
class GaloisRing:
  """GR(4, 4^r) presented as Z_4[X]/(modulus).

  Attributes:
    r: The degree of the ring over Z_4.
    modulus: r + 1 coefficients of the monic basic irreducible polynomial,
      constant term first.
  """
  r: int
  modulus: Tuple[int, ...]
  # _products[i, j] holds the coefficients of X^(i+j) reduced modulo the
  # modulus.
  _products: np.ndarray = dataclasses.field(
      init=False, repr=False, compare=False)

  def __post_init__(self):
    modulus = tuple(int(c) % _MODULUS for c in self.modulus)
    if len(modulus) != self.r + 1 or modulus[-1] != 1:
      raise ValueError('Modulus {} is not monic of degree {}.'.format(
          modulus, self.r))
    object.__setattr__(self, 'modulus', modulus)

    r = self.r
    reduced_powers = np.zeros((2 * r - 1, r), dtype=np.int64)
    top = (-np.array(modulus[:r], dtype=np.int64)) % _MODULUS
    for k in range(r):
      reduced_powers[k, k] = 1
    for k in range(r, 2 * r - 1):
      previous = reduced_powers[k - 1]
      shifted = np.concatenate(([0], previous[:-1]))
      reduced_powers[k] = (shifted + previous[-1] * top) % _MODULUS
    index = np.add.outer(np.arange(r), np.arange(r))
    object.__setattr__(self, '_products', reduced_powers[index])

  @property
  def size(self) -> int:
    return _MODULUS**self.r

  @property
  def unit_group_order(self) -> int:
    return 2**self.r * (2**self.r - 1)

  def element(self, coeffs: Sequence[int]) -> 'GrElement':
    """Builds an element from r coefficients in {0, 1, 2, 3}."""
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) != self.r:
      raise ValueError('Expected {} coefficients, got {}.'.format(
          self.r, len(coeffs)))
    if any(not 0 <= c < _MODULUS for c in coeffs):
      raise ValueError('Coefficients {} are not in Z_4.'.format(coeffs))
    return GrElement(self, coeffs)

  def from_array(self, array: np.ndarray) -> 'GrElement':
    return GrElement(self, tuple(int(c) for c in np.asarray(array) % _MODULUS))

  def scalar(self, c: int) -> 'GrElement':
    return GrElement(self, (c % _MODULUS,) + (0,) * (self.r - 1))

  def zero(self) -> 'GrElement':
    return self.scalar(0)

  def one(self) -> 'GrElement':
    return self.scalar(1)

  def generator(self) -> 'GrElement':
    """Returns the class of X."""
    if self.r == 1:
      return self.scalar(-self.modulus[0])
    return GrElement(self, (0, 1) + (0,) * (self.r - 2))

  def multiply_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Multiplies coefficient arrays of shape (..., r) elementwise."""
    return np.einsum('...i,...j,ijk->...k', a, b, self._products) % _MODULUS


def lift_binary_irreducible(binary: int) -> GaloisRing:
  """Lifts a binary irreducible polynomial to a basic irreducible over Z_4.

  Args:
    binary: The binary polynomial b of degree r, encoded as an integer.

  Returns:
    The ring whose modulus f satisfies f(X^2) = (-1)^r b(X) b(-X) mod 4.

  Raises:
    NotIrreducibleError: If binary is reducible.
  """
  if not is_binary_irreducible(binary):
    raise NotIrreducibleError(
        'Polynomial {:b} is not irreducible over GF(2).'.format(binary))
  r = binary.bit_length() - 1
  b = np.array([(binary >> i) & 1 for i in range(r + 1)], dtype=np.int64)
  signs = np.array([(-1)**i for i in range(r + 1)], dtype=np.int64)
  product = np.convolve(b, b * signs)
  modulus = ((-1)**r * product[::2]) % _MODULUS
  return GaloisRing(r, tuple(int(c) for c in modulus))


def build_ring(r: int) -> GaloisRing:
  """Returns GR(4, 4^r) built from the table of binary irreducibles."""
  return lift_binary_irreducible(binary_irreducible(r))


@dataclasses.dataclass(frozen=True)
class GrElement:
  """An element of a GaloisRing in canonical reduced form."""
  ring: GaloisRing
  coeffs: Tuple[int, ...]

  def to_list(self) -> List[int]:
    return list(self.coeffs)

  def to_array(self) -> np.ndarray:
    return np.array(self.coeffs, dtype=np.int64)

  def is_zero(self) -> bool:
    return not any(self.coeffs)

  def is_scalar(self) -> bool:
    return not any(self.coeffs[1:])

  def _coerce(self, other: Union['GrElement', int]) -> 'GrElement':
    if isinstance(other, int):
      return self.ring.scalar(other)
    if other.ring != self.ring:
      raise RingMismatchError('Operands live in {} and {}.'.format(
          self.ring, other.ring))
    return other

  def __add__(self, other):
    return add(self, self._coerce(other))

  __radd__ = __add__

  def __sub__(self, other):
    return sub(self, self._coerce(other))

  def __rsub__(self, other):
    return sub(self._coerce(other), self)

  def __neg__(self):
    return GrElement(self.ring, tuple(-c % _MODULUS for c in self.coeffs))

  def __mul__(self, other):
    return mul(self, self._coerce(other))

  __rmul__ = __mul__

  def __pow__(self, n):
    return power(self, n)

  def __str__(self):
    return str(self.to_list())


def _check_same_ring(a: GrElement, b: GrElement):
  if a.ring != b.ring:
    raise RingMismatchError('Operands live in {} and {}.'.format(
        a.ring, b.ring))


def add(a: GrElement, b: GrElement) -> GrElement:
  _check_same_ring(a, b)
  return GrElement(a.ring, tuple(
      (x + y) % _MODULUS for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: GrElement, b: GrElement) -> GrElement:
  _check_same_ring(a, b)
  return GrElement(a.ring, tuple(
      (x - y) % _MODULUS for x, y in zip(a.coeffs, b.coeffs)))


def mul(a: GrElement, b: GrElement) -> GrElement:
  _check_same_ring(a, b)
  return a.ring.from_array(a.ring.multiply_arrays(a.to_array(), b.to_array()))


def power(a: GrElement, n: int) -> GrElement:
  """Returns a^n for n >= 0 by square and multiply."""
  if n < 0:
    raise ValueError('Exponent must be nonnegative, got {}.'.format(n))
  result = a.ring.one()
  base = a
  while n:
    if n & 1:
      result = mul(result, base)
    base = mul(base, base)
    n >>= 1
  return result


def power_table(a: GrElement, n: int) -> np.ndarray:
  """Returns an (n, r) array whose row k holds a^k."""
  ring = a.ring
  table = np.zeros((n, ring.r), dtype=np.int64)
  if n == 0:
    return table
  table[0] = ring.one().to_array()
  base = a.to_array()
  for k in range(1, n):
    table[k] = ring.multiply_arrays(table[k - 1], base)
  return table


def is_unit(a: GrElement) -> bool:
  """An element is a unit iff its reduction modulo 2 is nonzero."""
  return any(c % 2 for c in a.coeffs)


def inverse(a: GrElement) -> GrElement:
  """Returns a^-1 = a^(|units| - 1).

  Raises:
    NotInvertibleError: If a is not a unit.
  """
  if not is_unit(a):
    raise NotInvertibleError('{} is not a unit.'.format(a))
  return power(a, a.ring.unit_group_order - 1)


def teichmuller_decompose(a: GrElement) -> Tuple[GrElement, GrElement]:
  """Returns (a1, a2) in the Teichmuller set with a = a1 + 2 a2.

  a1 = a^(2^r) because squaring kills the 2-part. The difference a - a1 has
  even coefficients; halving it is only defined modulo 2, and raising to the
  2^r-th power picks the Teichmuller representative.
  """
  exponent = 2**a.ring.r
  a1 = power(a, exponent)
  difference = sub(a, a1)
  if any(c % 2 for c in difference.coeffs):
    raise AssertionError('a - a^(2^r) = {} is not divisible by 2.'.format(
        difference))
  half = GrElement(a.ring, tuple(c // 2 for c in difference.coeffs))
  return a1, power(half, exponent)


def frobenius(a: GrElement) -> GrElement:
  a1, a2 = teichmuller_decompose(a)
  return add(mul(a1, a1), mul(a.ring.scalar(2), mul(a2, a2)))


def generalized_frobenius(a: GrElement, s: int) -> GrElement:
  """Applies the Frobenius map s times.

  Raises:
    NotADivisorError: If s does not divide the ring degree.
  """
  if s < 1 or a.ring.r % s:
    raise NotADivisorError('{} does not divide r = {}.'.format(s, a.ring.r))
  for _ in range(s):
    a = frobenius(a)
  return a


def _check_trace_degrees(ring: GaloisRing, s: int, r: int):
  if s < 1 or r < 1 or r % s or ring.r % r:
    raise NotADivisorError(
        'Trace from degree {} to {} is undefined in a ring of degree {}.'
        .format(r, s, ring.r))


def trace(a: GrElement, s: int, r: Optional[int] = None) -> GrElement:
  """Returns TR_s^r(a), the sum of the orbit of a under Frobenius^s.

  Args:
    a: An element of GR(4, 4^r), or of a ring containing it.
    s: Degree of the target subring. Must divide r.
    r: Degree of the source subring, defaults to the ring degree. Must divide
      the ring degree.

  Returns:
    a + F(a) + ... + F^(r/s - 1)(a) with F the s-th Frobenius power.

  Raises:
    NotADivisorError: If s does not divide r or r does not divide the ring
      degree.
  """
  if r is None:
    r = a.ring.r
  _check_trace_degrees(a.ring, s, r)
  total = a.ring.zero()
  term = a
  for _ in range(r // s):
    total = add(total, term)
    for _ in range(s):
      term = frobenius(term)
  return total


def teichmuller_power_trace(a: GrElement, s: int,
                            r: Optional[int] = None) -> GrElement:
  """Returns a + a^(2^s) + ... + a^(2^(s(r/s - 1))).

  Equals trace(a, s, r) whenever a is in the Teichmuller set.
  """
  if r is None:
    r = a.ring.r
  _check_trace_degrees(a.ring, s, r)
  total = a.ring.zero()
  term = a
  for _ in range(r // s):
    total = add(total, term)
    term = power(term, 2**s)
  return total


def is_teichmuller(a: GrElement) -> bool:
  return power(a, 2**a.ring.r) == a


def has_order(a: GrElement, n: int) -> bool:
  """Checks that the multiplicative order of a is exactly n."""
  one = a.ring.one()
  if n < 1 or power(a, n) != one:
    return False
  return all(
      power(a, n // factor) != one for factor in numth.prime_factors(n))


def _binary_candidates(ring: GaloisRing) -> Iterator[GrElement]:
  """Yields the nonzero 0/1 polynomials in increasing order of bit pattern."""
  for pattern in range(1, 2**ring.r):
    yield ring.element([(pattern >> i) & 1 for i in range(ring.r)])


def find_group_generator(ring: GaloisRing) -> GrElement:
  """Returns xi of multiplicative order 2^r - 1.

  Candidates c are the nonzero polynomials with 0/1 coefficients in increasing
  order of their bit patterns; the Teichmuller lift c^(2^r) of the first
  primitive one is returned. This factors 2^r - 1, so callers that only need
  an element of a given order should use primitive_nth_root.
  """
  group_order = 2**ring.r - 1
  for candidate in _binary_candidates(ring):
    xi = power(candidate, 2**ring.r)
    if has_order(xi, group_order):
      return xi
  raise AssertionError('No generator found in {}.'.format(ring))


def primitive_nth_root(ring: GaloisRing, n: int,
                       generator: Optional[GrElement] = None) -> GrElement:
  """Returns a Teichmuller element of multiplicative order exactly n.

  Without a generator, candidates c run over the same bit patterns as in
  find_group_generator and the first beta = c^(2^r (2^r - 1) / n) with
  has_order(beta, n) is returned. Only n gets factored.

  Args:
    ring: The ring.
    n: The requested order, odd and dividing 2^r - 1.
    generator: Optional precomputed result of find_group_generator(ring).

  Returns:
    An element beta of order n, equal to xi^((2^r - 1) / n) when a generator
    xi is given.

  Raises:
    OrderUnavailableError: If n does not divide 2^r - 1.
  """
  group_order = 2**ring.r - 1
  if n < 1 or group_order % n:
    raise OrderUnavailableError(
        'No element of order {} in a ring of degree {}.'.format(n, ring.r))
  cofactor = group_order // n
  if generator is not None:
    return power(generator, cofactor)
  for candidate in _binary_candidates(ring):
    beta = power(candidate, 2**ring.r * cofactor)
    if has_order(beta, n):
      return beta
  raise AssertionError('No element of order {} in {}.'.format(n, ring))


def teichmuller_set(ring: GaloisRing) -> List[GrElement]:
  """Returns {0} followed by xi^0, ..., xi^(2^r - 2)."""
  xi = find_group_generator(ring)
  table = power_table(xi, 2**ring.r - 1)
  return [ring.zero()] + [ring.from_array(row) for row in table]
