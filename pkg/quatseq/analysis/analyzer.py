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

"""Full analysis of the cyclotomic sequence of one pair (p, q).

The pipeline builds the cyclotomic system, the Galois ring GR(4, 4^ell) and an
element beta of order pq, computes the spectrum of the sequence by the DFT and
by the closed form, and derives the linear complexity along every available
route: the spectrum count, the closed form in rho, the class of 2 and,
optionally, the minimal connection polynomial. Optionally the trace
representation is checked at every index.
"""
import dataclasses
import time

from absl import logging

from quatseq.algebra import cyclotomy
from quatseq.algebra import galois_ring
from quatseq.algebra import lc_oracle
from quatseq.algebra import numth
from quatseq.algebra import spectra
from quatseq.analysis import analysis_report
from quatseq.utils import constants


@dataclasses.dataclass(frozen=True)
class AnalysisConfig:
  """Options of the analysis, shared by every pair of a run."""
  oracle: bool
  verify_trace: bool
  emit_spectrum: bool
  max_period: int
  max_ring_degree: int


def create_analysis_config(oracle=False,
                           verify_trace=False,
                           emit_spectrum=False,
                           max_period=None,
                           max_ring_degree=None) -> AnalysisConfig:
  """Returns an analysis configuration, filling in the defaults."""
  if max_period is None:
    max_period = constants.MAX_PERIOD
  if max_period < 1:
    raise ValueError('max_period must be positive, got {}.'.format(max_period))
  if max_ring_degree is None:
    max_ring_degree = constants.MAX_RING_DEGREE
  if max_ring_degree < 1:
    raise ValueError('max_ring_degree must be positive, got {}.'.format(
        max_ring_degree))
  return AnalysisConfig(
      oracle=oracle,
      verify_trace=verify_trace,
      emit_spectrum=emit_spectrum,
      max_period=max_period,
      max_ring_degree=max_ring_degree)


class VerificationError(Exception):
  """Raised when the routes to the linear complexity disagree."""

  def __init__(self, report, messages):
    super().__init__('p={} q={}: {}'.format(
        report.get_data().get('p'), report.get_data().get('q'),
        ' '.join(messages)))
    self.report = report
    self.messages = messages


def check_period(p: int, q: int, max_period: int):
  """Raises InvalidParametersError if pq exceeds max_period."""
  if p * q > max_period:
    raise numth.InvalidParametersError(
        p, q, 'pq = {} exceeds the limit {}'.format(p * q, max_period))


def check_ring_degree(system: cyclotomy.CyclotomicSystem,
                      max_ring_degree: int):
  """Raises InvalidParametersError if ell exceeds max_ring_degree.

  Multiplication in GR(4, 4^ell) keeps an ell x ell x ell table of reduced
  monomial products, so ell bounds the memory of the whole analysis.
  """
  if system.ell > max_ring_degree:
    raise numth.InvalidParametersError(
        system.p, system.q,
        'ell = {} exceeds the ring degree limit {}'.format(
            system.ell, max_ring_degree))


def analyze_pair(p: int, q: int,
                 config: AnalysisConfig) -> analysis_report.AnalysisReport:
  """Runs the analysis pipeline on (p, q).

  Args:
    p: First prime.
    q: Second prime.
    config: The analysis options.

  Returns:
    The AnalysisReport. Disagreements between the routes are recorded in it,
    see AnalysisReport.mismatches, and logged as errors.

  Raises:
    numth.InvalidParametersError: If (p, q) is not a valid pair or pq exceeds
      config.max_period or ell exceeds config.max_ring_degree.
  """
  start = time.perf_counter()
  check_period(p, q, config.max_period)
  system = cyclotomy.build_system(p, q)
  logging.info('Built %s system for p=%d q=%d: g=%d h=%d ell=%d.',
               system.case.value, p, q, system.g, system.h, system.ell)
  ring = galois_ring.build_ring(system.ell)
  beta = galois_ring.primitive_nth_root(ring, system.modulus)
  logging.info('Built GR(4, 4^%d) with modulus %s.', ring.r, ring.modulus)

  sequence = cyclotomy.build_sequence(system)
  spectrum = spectra.dft(sequence, beta)
  closed_form_spectrum = spectra.ms_closed_form(system, beta)
  closed_form = spectra.lc_closed_form(system, beta)
  logging.info('Spectrum of p=%d q=%d has %d nonzero coefficients.', p, q,
               spectrum.nonzero_count)

  lc_oracle_value = None
  if config.oracle:
    lc_oracle_value, _ = lc_oracle.minimal_connection(sequence)
    logging.info('Minimal connection polynomial of p=%d q=%d has degree %d.',
                 p, q, lc_oracle_value)

  report = analysis_report.AnalysisReport()
  report.set_system(system, ring)
  report.set_linear_complexities(
      lc_spectrum=spectrum.nonzero_count,
      lc_closed_form=closed_form.lc_predicted,
      lc_by_branch_rule=spectra.lc_by_branch_rule(system),
      lc_oracle=lc_oracle_value)
  report.set_closed_form(
      closed_form, closed_form_spectrum.coeffs == spectrum.coeffs)
  if config.verify_trace:
    trace_verified = spectra.trace_sequence(system, beta) == sequence
    logging.info('Trace representation of p=%d q=%d verified: %s.', p, q,
                 trace_verified)
    report.set_trace_verified(trace_verified)
  if config.emit_spectrum:
    report.set_spectrum(spectrum)
  report.set_elapsed_ms((time.perf_counter() - start) * 1000)

  for message in report.mismatches():
    logging.error('p=%d q=%d: %s', p, q, message)
  return report


def verify_report(report: analysis_report.AnalysisReport):
  """Raises VerificationError if the report records a mismatch."""
  messages = report.mismatches()
  if messages:
    raise VerificationError(report, messages)
