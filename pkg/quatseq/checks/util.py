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

"""Util files for the invariant checks."""

import dataclasses
from typing import List


@dataclasses.dataclass
class Results():
  """Container for the results of one invariant suite."""
  name: str
  total: int
  failures: List[str] = dataclasses.field(default_factory=list)

  @property
  def passed(self) -> bool:
    return not self.failures

  def __str__(self):
    results_str_list = ['{}: {} ({:d} checks, {:d} failed)'.format(
        self.name, 'PASS' if self.passed else 'FAIL', self.total,
        len(self.failures))]
    for failure in self.failures:
      results_str_list.append('  failed: {}'.format(failure))
    return '\n'.join(results_str_list)

  def to_dict(self):
    return {
        'suite': self.name,
        'total': self.total,
        'failed': len(self.failures),
        'failures': list(self.failures),
    }


def all_passed(results: List[Results]) -> bool:
  return all(r.passed for r in results)
