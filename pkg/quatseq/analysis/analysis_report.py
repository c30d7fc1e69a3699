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

"""Definition of AnalysisReport, the record produced for one pair (p, q).

AnalysisReport is a dictionary with one field per entry of
constants.REPORT_FIELDS, filled in by the analyzer through the set_* methods.
All values are JSON types: Galois ring elements (the ring modulus, rho and the
spectrum coefficients) are lists of integers with the constant term first.

The optional fields 'lc_oracle', 'zero_branch', 'trace_verified' and
'spectrum' are omitted from the serialized forms when they are not computed.
The field order of the JSON and CSV forms is the order of REPORT_FIELDS, so
that parsing a JSON report and serializing it again gives the same bytes.
"""
from typing import List, Optional, Sequence

from quatseq.algebra import cyclotomy
from quatseq.algebra import galois_ring
from quatseq.algebra import numth
from quatseq.algebra import spectra
from quatseq.utils import constants
from quatseq.utils import util
import typing_extensions

_INT_FIELDS = ('p', 'q', 'g', 'h', 'e', 'ell', 'ell_p', 'ell_q',
               'two_class_index', 'lc_spectrum', 'lc_closed_form',
               'lc_by_branch_rule')
_LC_FIELDS = ('lc_spectrum', 'lc_closed_form', 'lc_by_branch_rule',
              'lc_oracle')


class ReportDict(typing_extensions.TypedDict, total=False):
  p: int
  q: int
  case: str
  g: int
  h: int
  e: int
  ell: int
  ell_p: int
  ell_q: int
  two_class_index: int
  modulus: List[int]
  lc_spectrum: int
  lc_closed_form: int
  lc_oracle: int
  lc_by_branch_rule: int
  zero_branch: int
  rho: List[int]
  trace_verified: bool
  closed_form_matches_dft: bool
  spectrum: List[List[int]]
  elapsed_ms: float


class AnalysisReportNotValidError(Exception):
  """Exception to be thrown if check_if_valid fails."""
  pass


class AnalysisReport():
  """The analysis record of one pair, see above for more information."""

  def __init__(self):
    self._data = ReportDict()

  def __repr__(self) -> str:
    return 'AnalysisReport({})'.format(self.get_data())

  def __eq__(self, other) -> bool:
    if not isinstance(other, AnalysisReport):
      return NotImplemented
    return self.get_data() == other.get_data()

  def set_system(self, system: cyclotomy.CyclotomicSystem,
                 ring: galois_ring.GaloisRing):
    """Records the parameters of the pair and the ring modulus."""
    self._data['p'] = system.p
    self._data['q'] = system.q
    self._data['case'] = numth.case_name(system.case)
    self._data['g'] = system.g
    self._data['h'] = system.h
    self._data['e'] = system.e
    self._data['ell'] = system.ell
    self._data['ell_p'] = system.ell_p
    self._data['ell_q'] = system.ell_q
    self._data['two_class_index'] = cyclotomy.two_class(system)
    self._data['modulus'] = list(ring.modulus)

  def set_linear_complexities(self,
                              lc_spectrum: int,
                              lc_closed_form: int,
                              lc_by_branch_rule: int,
                              lc_oracle: Optional[int] = None):
    self._data['lc_spectrum'] = int(lc_spectrum)
    self._data['lc_closed_form'] = int(lc_closed_form)
    self._data['lc_by_branch_rule'] = int(lc_by_branch_rule)
    if lc_oracle is not None:
      self._data['lc_oracle'] = int(lc_oracle)

  def set_closed_form(self, closed_form: spectra.ClosedFormReport,
                      matches_dft: bool):
    """Records rho, the zero branch and the closed form/DFT comparison."""
    self._data['rho'] = closed_form.rho.to_list()
    if closed_form.zero_branch is not None:
      self._data['zero_branch'] = closed_form.zero_branch
    self._data['closed_form_matches_dft'] = bool(matches_dft)

  def set_trace_verified(self, trace_verified: bool):
    self._data['trace_verified'] = bool(trace_verified)

  def set_spectrum(self, spectrum: spectra.Spectrum):
    self._data['spectrum'] = spectrum.to_lists()

  def set_elapsed_ms(self, elapsed_ms: float):
    self._data['elapsed_ms'] = round(float(elapsed_ms), 3)

  def set_data(self, data: ReportDict):
    self._data = ReportDict(**data)

  def get_data(self) -> ReportDict:
    """Returns the fields in constants.REPORT_FIELDS order."""
    return ReportDict(**{
        field: self._data[field]
        for field in constants.REPORT_FIELDS
        if field in self._data
    })

  def get_lc_values(self) -> List[int]:
    return [self._data[field] for field in _LC_FIELDS if field in self._data]

  def mismatches(self) -> List[str]:
    """Lists the cross-checks that disagree.

    Returns:
      One message per failed check: linear complexity routes that differ,
      a closed form spectrum that differs from the DFT, and a trace
      representation that differs from the sequence.
    """
    messages = []
    values = {
        field: self._data[field] for field in _LC_FIELDS if field in self._data
    }
    if len(set(values.values())) > 1:
      messages.append('Linear complexities disagree: {}.'.format(', '.join(
          '{}={}'.format(field, value) for field, value in values.items())))
    if not self._data.get('closed_form_matches_dft', True):
      messages.append('Closed form spectrum differs from the DFT.')
    if not self._data.get('trace_verified', True):
      messages.append('Trace representation differs from the sequence.')
    return messages

  def check_if_valid(self) -> bool:
    """Check if self is a valid AnalysisReport.

    All mandatory fields must be present with the right types, optional fields
    must have the right types when present, and no unknown field may appear.

    Returns:
      A boolean indicating if self is a valid AnalysisReport.
    """
    if not isinstance(self._data, dict):
      return False
    for field in self._data:
      if field not in constants.REPORT_FIELDS:
        return False
    for field in constants.REPORT_FIELDS:
      if field not in self._data and field not in (
          constants.OPTIONAL_REPORT_FIELDS):
        return False

    for field in _INT_FIELDS + ('lc_oracle', 'zero_branch'):
      if field in self._data and not _is_int(self._data[field]):
        return False
    if not isinstance(self._data['case'], str):
      return False
    elif self._data['case'] not in constants.CASE_BY_RESIDUES.values():
      return False
    if not _is_int_list(self._data['modulus']):
      return False
    if not _is_int_list(self._data['rho']):
      return False
    for field in ('closed_form_matches_dft', 'trace_verified'):
      if field in self._data and not isinstance(self._data[field], bool):
        return False
    if 'zero_branch' in self._data and not (
        0 <= self._data['zero_branch'] < constants.NUM_CLASSES):
      return False
    if 'spectrum' in self._data:
      spectrum = self._data['spectrum']
      if not isinstance(spectrum, list):
        return False
      elif len(spectrum) != self._data['p'] * self._data['q']:
        return False
      elif not all(_is_int_list(coeffs) for coeffs in spectrum):
        return False
    if not isinstance(self._data['elapsed_ms'], (int, float)) or isinstance(
        self._data['elapsed_ms'], bool):
      return False
    return True

  def to_json(self) -> str:
    return util.to_json_line(self.get_data())

  def to_csv_row(self) -> str:
    data = self.get_data()
    return util.csv_line([data.get(field) for field in constants.REPORT_FIELDS])

  def to_text(self) -> str:
    """Human readable summary, one 'key: value' line per field."""
    data = self.get_data()
    lines = ['p={} q={} ({})'.format(data['p'], data['q'], data['case'])]
    for field, value in data.items():
      if field in ('p', 'q', 'case', 'spectrum'):
        continue
      if isinstance(value, bool):
        value = util.csv_cell(value)
      lines.append('  {}: {}'.format(field, value))
    if 'spectrum' in data:
      lines.append('  spectrum: {} coefficients, {} nonzero'.format(
          len(data['spectrum']), sum(1 for c in data['spectrum'] if any(c))))
    return '\n'.join(lines)

  @classmethod
  def from_json(cls, line: str) -> 'AnalysisReport':
    report = cls()
    report.set_data(util.from_json_line(line))
    if not report.check_if_valid():
      raise AnalysisReportNotValidError(
          'Invalid AnalysisReport found: {}'.format(util.escaped_str(line)))
    return report


def csv_header() -> str:
  return ','.join(constants.REPORT_FIELDS)


def _is_int(value) -> bool:
  return isinstance(value, int) and not isinstance(value, bool)


def _is_int_list(values: Sequence[int]) -> bool:
  return isinstance(values, list) and all(_is_int(v) for v in values)
