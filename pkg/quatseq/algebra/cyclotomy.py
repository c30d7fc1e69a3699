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

"""Generalized cyclotomic classes of order 4 modulo pq and their sequence.

With g a common primitive root of p and q, and h = g (mod p), h = 1 (mod q),
the classes are

  D_i = {g^s h^i mod pq : 0 <= s < e},  e = (p - 1)(q - 1) / 4,  0 <= i < 4,

and together with P = {p, ..., (q-1)p}, Q = {q, ..., (p-1)q} and R = {0} they
partition Z_pq. The quaternary sequence takes the value 2 on Q and R, 0 on P
and i on D_i. Class subscripts are always taken modulo 4.
"""
import dataclasses
import enum
import math
from typing import Optional, Sequence, Tuple

from quatseq.algebra import numth
from quatseq.utils import constants

# Codes used in CyclotomicSystem.labels for the non-unit residues. Codes 0..3
# are the classes D_0..D_3.
_CODE_P = 4
_CODE_Q = 5
_CODE_R = 6


class LabelKind(enum.Enum):
  D = 'D'
  P = 'P'
  Q = 'Q'
  R = 'R'


@dataclasses.dataclass(frozen=True)
class ClassLabel:
  """The part of the partition of Z_pq a residue belongs to."""
  kind: LabelKind
  # Class index for kind D, None otherwise.
  index: Optional[int] = None

  def __str__(self):
    if self.kind == LabelKind.D:
      return 'D{}'.format(self.index)
    return self.kind.value


class NotAUnitError(ValueError):
  """Raised when a residue that must be a unit modulo pq is not."""
  pass


@dataclasses.dataclass(frozen=True)
class QuatSequence:
  """One period of a sequence over Z_4."""
  values: Tuple[int, ...]

  def __post_init__(self):
    values = tuple(int(v) for v in self.values)
    if not values:
      raise ValueError('A sequence needs a period of at least 1.')
    for value in values:
      if not 0 <= value < constants.ALPHABET_SIZE:
        raise ValueError('Sequence value {} is not in Z_4.'.format(value))
    object.__setattr__(self, 'values', values)

  @property
  def period(self) -> int:
    return len(self.values)

  def __len__(self):
    return len(self.values)

  def __getitem__(self, u):
    return self.values[u % self.period]

  def cyclic_shift(self, k: int) -> 'QuatSequence':
    """Returns the sequence (s_{u+k})."""
    return QuatSequence(tuple(self[u + k] for u in range(self.period)))

  def scale(self, c: int) -> 'QuatSequence':
    return QuatSequence(tuple(c * v % constants.ALPHABET_SIZE
                              for v in self.values))

  def is_zero(self) -> bool:
    return not any(self.values)


@dataclasses.dataclass(frozen=True)
class CyclotomicSystem:
  """The arithmetic context of the construction for one pair (p, q).

  Attributes:
    p: First odd prime.
    q: Second odd prime.
    g: The smallest common primitive root of p and q.
    h: The residue with h = g (mod p) and h = 1 (mod q).
    e: (p - 1)(q - 1) / 4, the size of each class.
    classes: Sorted residues of D_0, ..., D_3.
    set_p: Sorted residues of P.
    set_q: Sorted residues of Q.
    case: The CaseTag of (p, q).
    ell: The order of 2 modulo pq.
    ell_p: The order of 2 modulo p.
    ell_q: The order of 2 modulo q.
    labels: One code per residue modulo pq, 0..3 for D_i, then P, Q, R.
  """
  p: int
  q: int
  g: int
  h: int
  e: int
  classes: Tuple[Tuple[int, ...], ...]
  set_p: Tuple[int, ...]
  set_q: Tuple[int, ...]
  case: numth.CaseTag
  ell: int
  ell_p: int
  ell_q: int
  labels: Tuple[int, ...] = dataclasses.field(repr=False)

  @property
  def modulus(self) -> int:
    return self.p * self.q


def build_system(p: int, q: int) -> CyclotomicSystem:
  """Builds the cyclotomic classes and the auxiliary sets for (p, q).

  Args:
    p: First prime.
    q: Second prime.

  Returns:
    The CyclotomicSystem, with the classes enumerated explicitly.

  Raises:
    numth.InvalidParametersError: If (p, q) is not a valid pair.
  """
  case = numth.validate_params(p, q)
  g = numth.common_primitive_root(p, q)
  h = numth.crt_pair(g % p, 1, p, q)
  n = p * q
  e = (p - 1) * (q - 1) // 4

  class_zero = []
  power = 1
  for _ in range(e):
    class_zero.append(power)
    power = power * g % n

  labels = [_CODE_R] + [None] * (n - 1)
  classes = []
  for i in range(constants.NUM_CLASSES):
    shift = pow(h, i, n)
    members = sorted(d * shift % n for d in class_zero)
    for u in members:
      labels[u] = i
    classes.append(tuple(members))
  set_p = tuple(k * p for k in range(1, q))
  set_q = tuple(k * q for k in range(1, p))
  for u in set_p:
    labels[u] = _CODE_P
  for u in set_q:
    labels[u] = _CODE_Q

  ell_p = numth.mul_order(2, p)
  ell_q = numth.mul_order(2, q)
  system = CyclotomicSystem(
      p=p, q=q, g=g, h=h, e=e, classes=tuple(classes), set_p=set_p,
      set_q=set_q, case=case, ell=numth.mul_order(2, n), ell_p=ell_p,
      ell_q=ell_q, labels=tuple(labels))
  _check_system(system)
  return system


def _check_system(system: CyclotomicSystem):
  """Asserts the partition and the structural facts the construction uses."""
  n = system.modulus
  units = {u for u in range(1, n) if math.gcd(u, n) == 1}
  seen = set()
  for members in system.classes:
    if len(members) != system.e:
      raise AssertionError('Class of size {} != e = {}.'.format(
          len(members), system.e))
    seen.update(members)
  if seen != units:
    raise AssertionError('Classes do not partition the units modulo {}.'.format(
        n))
  if None in system.labels:
    raise AssertionError('Some residue modulo {} has no label.'.format(n))
  if system.labels[pow(system.h, 4, n)] != 0:
    raise AssertionError('h^4 is not in D_0.')
  if system.ell != numth.lcm(system.ell_p, system.ell_q):
    raise AssertionError('ell != lcm(ell_p, ell_q).')


def class_of(system: CyclotomicSystem, u: int) -> ClassLabel:
  """Returns the label of the residue u modulo pq."""
  code = system.labels[u % system.modulus]
  if code == _CODE_P:
    return ClassLabel(LabelKind.P)
  elif code == _CODE_Q:
    return ClassLabel(LabelKind.Q)
  elif code == _CODE_R:
    return ClassLabel(LabelKind.R)
  return ClassLabel(LabelKind.D, code)


def build_sequence(system: CyclotomicSystem) -> QuatSequence:
  """Returns one period of (e_u): 2 on Q and R, 0 on P, i on D_i."""
  values = []
  for code in system.labels:
    if code in (_CODE_Q, _CODE_R):
      values.append(2)
    elif code == _CODE_P:
      values.append(0)
    else:
      values.append(code)
  return QuatSequence(tuple(values))


def class_shift(system: CyclotomicSystem, u: int) -> int:
  """Returns j with u in D_j, so that u * D_i = D_{i+j}.

  Raises:
    NotAUnitError: If u is not a unit modulo pq.
  """
  n = system.modulus
  if math.gcd(u, n) != 1:
    raise NotAUnitError('{} is not a unit modulo {}.'.format(u, n))
  return system.labels[u % n]


def two_class(system: CyclotomicSystem) -> int:
  """Returns i with 2 in D_i; even exactly in Case55."""
  return class_shift(system, 2)


def minus_one_class(system: CyclotomicSystem) -> int:
  """Returns c with -1 in D_c; 0 in Case55 and 2 otherwise."""
  return class_shift(system, system.modulus - 1)


def class_residues(system: CyclotomicSystem, i: int) -> Tuple[int, ...]:
  return system.classes[i % constants.NUM_CLASSES]


def count_opposites(system: CyclotomicSystem, a: int, modulus: int) -> int:
  """Counts w in D_0 with h^a + w = 0 (mod modulus)."""
  ha = pow(system.h, a, system.modulus)
  return sum(1 for w in system.classes[0] if (ha + w) % modulus == 0)


def simultaneous_opposite(system: CyclotomicSystem, a: int) -> Optional[int]:
  """Returns the w in D_0 with h^a + w = 0 (mod pq), or None."""
  w = -pow(system.h, a, system.modulus) % system.modulus
  if system.labels[w] == 0:
    return w
  return None


def power_cosets(system: CyclotomicSystem,
                 base: int) -> Tuple[Tuple[int, ...], ...]:
  """Splits D_0 into the cosets g^i <base>, 0 <= i < e / ord(base).

  Args:
    system: The cyclotomic system.
    base: An element of D_0, in practice 2, 4 or 16.

  Returns:
    The cosets, each listed as g^i * base^j for increasing j.

  Raises:
    ValueError: If base is not in D_0.
  """
  n = system.modulus
  if math.gcd(base, n) != 1 or system.labels[base % n] != 0:
    raise ValueError('{} is not in D_0 modulo {}.'.format(base, n))
  order = numth.mul_order(base, n)
  cosets = []
  for i in range(system.e // order):
    representative = pow(system.g, i, n)
    cosets.append(tuple(representative * pow(base, j, n) % n
                        for j in range(order)))
  _check_partition(cosets, system.classes[0])
  return tuple(cosets)


def residue_cosets(prime: int, g: int) -> Tuple[Tuple[int, ...], ...]:
  """Splits Z_prime^* into the cosets g^i <2>, g a primitive root of prime."""
  order = numth.mul_order(2, prime)
  cosets = []
  for i in range((prime - 1) // order):
    representative = pow(g, i, prime)
    cosets.append(tuple(representative * pow(2, j, prime) % prime
                        for j in range(order)))
  _check_partition(cosets, range(1, prime))
  return tuple(cosets)


def _check_partition(cosets: Sequence[Sequence[int]], universe):
  flattened = [u for coset in cosets for u in coset]
  if len(flattened) != len(set(flattened)) or set(flattened) != set(universe):
    raise AssertionError('Cosets do not partition the expected set.')
