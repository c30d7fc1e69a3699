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

"""Integer number theory for the cyclotomic construction.

Orders, primitive roots, the Chinese Remainder Theorem and validation of the
parameters (p, q). Primality of p and q is checked by trial division. Orders,
factorizations and primitive root tests go through sympy.ntheory, which also
handles the ring orders 2^ell - 1.
"""
import enum
import math
from typing import List

from sympy import ntheory

from quatseq.utils import constants


class CaseTag(enum.Enum):
  """Residues of (p, q) modulo 8 under gcd(p - 1, q - 1) = 4."""
  CASE_15 = constants.CASE_15
  CASE_51 = constants.CASE_51
  CASE_55 = constants.CASE_55


class NotCoprimeError(ValueError):
  """Raised when arguments that must be coprime share a factor."""
  pass


class NoParametersError(ValueError):
  """Raised when no common primitive root can be defined."""
  pass


class InvalidParametersError(ValueError):
  """Raised when (p, q) is not a valid parameter pair."""

  def __init__(self, p, q, reason):
    super().__init__('Invalid parameters p={}, q={}: {}'.format(p, q, reason))
    self.p = p
    self.q = q
    self.reason = reason


def is_prime(n: int) -> bool:
  if n < 2:
    return False
  if n % 2 == 0:
    return n == 2
  divisor = 3
  while divisor * divisor <= n:
    if n % divisor == 0:
      return False
    divisor += 2
  return True


def prime_factors(n: int) -> List[int]:
  """Returns the distinct prime factors of n >= 1 in increasing order."""
  if n < 1:
    raise ValueError('Cannot factor {}.'.format(n))
  return [int(factor) for factor in ntheory.primefactors(n)]


def lcm(a: int, b: int) -> int:
  return a * b // math.gcd(a, b)


def mul_order(a: int, m: int) -> int:
  """Returns the multiplicative order of a modulo m.

  Args:
    a: An integer coprime to m.
    m: The modulus, at least 2.

  Returns:
    The least n >= 1 with a^n = 1 (mod m).

  Raises:
    NotCoprimeError: If gcd(a, m) != 1.
  """
  if m < 2:
    raise ValueError('Modulus must be at least 2, got {}.'.format(m))
  if math.gcd(a, m) != 1:
    raise NotCoprimeError('{} is not a unit modulo {}.'.format(a, m))
  return int(ntheory.n_order(a % m, m))


def is_primitive_root(g: int, prime: int) -> bool:
  """Returns whether g generates the multiplicative group modulo prime."""
  if g % prime == 0:
    return False
  return bool(ntheory.is_primitive_root(g % prime, prime))


def common_primitive_root(p: int, q: int) -> int:
  """Returns the smallest g >= 2 that is a primitive root of both p and q.

  Args:
    p: An odd prime.
    q: An odd prime distinct from p.

  Returns:
    The smallest common primitive root. By the Chinese Remainder Theorem one
    always exists below pq.

  Raises:
    NoParametersError: If p == q or one of them is not prime.
  """
  if p == q:
    raise NoParametersError('p and q must be distinct, got {} twice.'.format(p))
  if not (is_prime(p) and is_prime(q)):
    raise NoParametersError('p={} and q={} must both be prime.'.format(p, q))
  for g in range(2, p * q):
    if is_primitive_root(g, p) and is_primitive_root(g, q):
      return g
  raise NoParametersError(
      'No common primitive root of {} and {} found.'.format(p, q))


def crt_pair(a: int, b: int, p: int, q: int) -> int:
  """Returns the unique x in [0, pq) with x = a (mod p) and x = b (mod q)."""
  if math.gcd(p, q) != 1:
    raise NotCoprimeError('{} and {} are not coprime.'.format(p, q))
  # q * (q^-1 mod p) is 1 mod p and 0 mod q, and symmetrically for p.
  return (a * q * pow(q, -1, p) + b * p * pow(p, -1, q)) % (p * q)


def validate_params(p: int, q: int) -> CaseTag:
  """Validates (p, q) and returns its case.

  Args:
    p: Candidate first prime.
    q: Candidate second prime.

  Returns:
    The CaseTag given by (p mod 8, q mod 8).

  Raises:
    InvalidParametersError: If p, q are not distinct odd primes with
      gcd(p - 1, q - 1) = 4.
  """
  if not is_prime(p):
    raise InvalidParametersError(p, q, '{} is not prime'.format(p))
  if not is_prime(q):
    raise InvalidParametersError(p, q, '{} is not prime'.format(q))
  if p == q:
    raise InvalidParametersError(p, q, 'p and q are not distinct')
  if math.gcd(p - 1, q - 1) != 4:
    raise InvalidParametersError(
        p, q, 'gcd(p - 1, q - 1) = {} != 4'.format(math.gcd(p - 1, q - 1)))
  # gcd = 4 forces p, q = 1 mod 4 and excludes p = q = 1 mod 8.
  return CaseTag(constants.CASE_BY_RESIDUES[(p % 8, q % 8)])


def case_name(case: CaseTag) -> str:
  return case.value
