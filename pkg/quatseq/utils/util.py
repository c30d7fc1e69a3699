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

"""quatseq utility functions."""

import json
from typing import Any, Mapping, Sequence

import apache_beam as beam


def escaped_str(s: str):
  """Escape all special characters in the string.

  Input lines are echoed back in error records, and a stray newline or tab in
  them would break the one record per line output.

  Args:
    s: A string.

  Returns:
    A string where all the special characters are escaped.
  """
  # We use [1:-1] to remove the quote added by repr()
  return repr(s)[1:-1]


def to_json_line(record: Mapping[str, Any]) -> str:
  """Serializes a record as one line of JSON, keys in insertion order."""
  return json.dumps(record, sort_keys=False)


def from_json_line(line: str):
  return json.loads(line)


def csv_cell(value) -> str:
  """Formats one CSV cell.

  Lists (Galois ring elements, spectra) are written as quoted JSON lists so the
  commas inside them do not split the cell. Booleans are lower case, missing
  values are empty.

  Args:
    value: An int, bool, str, list or None.

  Returns:
    The cell text.
  """
  if value is None:
    return ''
  elif isinstance(value, bool):
    return 'true' if value else 'false'
  elif isinstance(value, (list, tuple)):
    return '"{}"'.format(json.dumps(value))
  return str(value)


def csv_line(values: Sequence[Any]) -> str:
  return ','.join(csv_cell(value) for value in values)


class JsonCoder(beam.coders.Coder):

  def encode(self, x):
    return json.dumps(x).encode('utf-8')

  def decode(self, x):
    return json.loads(x.decode('utf-8'))

  def is_deterministic(self):
    return True
