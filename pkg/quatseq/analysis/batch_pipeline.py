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

"""Apache Beam pipeline that analyzes every pair listed in a pairs file.

The pairs file holds one "p q" pair per line. Text after '#' is a comment and
blank lines are skipped. Lines that cannot be parsed, and pairs that are not
valid parameters, become error records {"line": n, "input": ..., "error": ...}
instead of aborting the batch.

Pairs are analyzed independently by the pipeline, and the records are written
in input order, one per line, to a single output file. A metadata file counts
the records by status ('ok', 'error' and 'mismatch').
"""
from typing import Any, Dict, List

from absl import logging
import apache_beam as beam

from quatseq.algebra import numth
from quatseq.analysis import analysis_report
from quatseq.analysis import analyzer
from quatseq.utils import constants
from quatseq.utils import util

STATUS_OK = 'ok'
STATUS_ERROR = 'error'
STATUS_MISMATCH = 'mismatch'


def parse_pairs(lines: List[str]) -> List[Dict[str, Any]]:
  """Parses the lines of a pairs file.

  Args:
    lines: The lines of the file.

  Returns:
    One entry per non-comment line, in order, with the fields 'index', 'line'
    (1-based line number), 'input' (the stripped text), and either 'p' and
    'q' or 'error'.
  """
  entries = []
  for line_number, line in enumerate(lines, start=1):
    text = line.split('#', 1)[0].strip()
    if not text:
      continue
    entry = {'index': len(entries), 'line': line_number, 'input': text}
    fields = text.split()
    try:
      if len(fields) != 2:
        raise ValueError('expected two integers, got {}'.format(len(fields)))
      entry['p'], entry['q'] = int(fields[0]), int(fields[1])
    except ValueError as e:
      entry['error'] = str(e)
      logging.warning('Line %d of the pairs file is invalid: %s', line_number,
                      e)
    entries.append(entry)
  return entries


def read_pairs_file(path: str) -> List[Dict[str, Any]]:
  """Reads and parses a pairs file.

  Raises:
    OSError: If the file cannot be opened.
    UnicodeDecodeError: If the file is not valid UTF-8.
  """
  with open(path, encoding='utf-8') as f:
    return parse_pairs(f.read().splitlines())


def error_record(entry: Dict[str, Any], error: str) -> Dict[str, Any]:
  return {
      'line': entry['line'],
      'input': util.escaped_str(entry['input']),
      'error': util.escaped_str(error),
  }


def format_error_record(record: Dict[str, Any], report_format: str) -> str:
  if report_format == constants.FORMAT_CSV:
    return util.csv_line(
        [record[field] for field in constants.ERROR_RECORD_FIELDS])
  elif report_format == constants.FORMAT_TEXT:
    return 'line {}: {}: {}'.format(record['line'], record['input'],
                                    record['error'])
  return util.to_json_line(record)


def format_report(report: analysis_report.AnalysisReport,
                  report_format: str) -> str:
  if report_format == constants.FORMAT_CSV:
    return report.to_csv_row()
  elif report_format == constants.FORMAT_TEXT:
    return report.to_text()
  return report.to_json()


class BatchAnalysis():
  """Analyzes the pairs of a pairs file with a Beam pipeline.

  Attributes:
    entries: The parsed pairs file, see parse_pairs.
    config: The AnalysisConfig shared by every pair.
    report_format: One of constants.REPORT_FORMATS.
    output_path: File that receives one record per line.
    metadata_path: File that receives the record counts by status.
  """

  def __init__(self, entries, config, report_format, output_path,
               metadata_path):
    if report_format not in constants.REPORT_FORMATS:
      raise ValueError('{} is not a supported format.'.format(report_format))
    self.entries = entries
    self.config = config
    self.report_format = report_format
    self.output_path = output_path
    self.metadata_path = metadata_path

  def analyze_entry(self, entry: Dict[str, Any]) -> Dict[str, Any]:
    """Analyzes one entry and returns its formatted record and status."""
    if 'error' in entry:
      record = error_record(entry, entry['error'])
      return {
          'index': entry['index'],
          'status': STATUS_ERROR,
          'text': format_error_record(record, self.report_format),
      }
    try:
      report = analyzer.analyze_pair(entry['p'], entry['q'], self.config)
    except numth.InvalidParametersError as e:
      logging.warning('Line %d of the pairs file is invalid: %s',
                      entry['line'], e)
      record = error_record(entry, e.reason)
      return {
          'index': entry['index'],
          'status': STATUS_ERROR,
          'text': format_error_record(record, self.report_format),
      }
    status = STATUS_MISMATCH if report.mismatches() else STATUS_OK
    return {
        'index': entry['index'],
        'status': status,
        'text': format_report(report, self.report_format),
    }

  def order_records(self, results: List[Dict[str, Any]]) -> List[str]:
    """Sorts the records by input order, adding the CSV header if needed."""
    lines = [x['text'] for x in sorted(results, key=lambda x: x['index'])]
    if lines and self.report_format == constants.FORMAT_CSV:
      lines.insert(0, analysis_report.csv_header())
    return lines

  def analyze_and_write_pipeline(self, root):
    """Beam pipeline that analyzes all pairs and writes the records."""
    results = (
        root
        | 'Create pairs' >> beam.Create(self.entries)
        | 'Analyze pairs' >> beam.Map(self.analyze_entry)
    )

    _ = (
        results
        | 'Collect records' >> beam.combiners.ToList()
        | 'Order records by input line' >> beam.FlatMap(self.order_records)
        | 'Write records' >> beam.io.WriteToText(
            self.output_path, num_shards=1, shard_name_template=''))

    _ = (
        results
        | 'Extract status' >> beam.Map(lambda x: x['status'])
        | 'Count records by status' >> beam.combiners.Count.PerElement()
        | 'Collect counts' >> beam.combiners.ToList()
        | 'Create metadata' >> beam.Map(dict)
        | 'Write metadata to file' >> beam.io.WriteToText(
            self.metadata_path,
            num_shards=1,
            shard_name_template='',
            coder=util.JsonCoder()))

  def run_pipeline(self) -> Dict[str, int]:
    """Runs the pipeline and returns the record counts by status."""
    logging.info('Running batch pipeline on %d entries.', len(self.entries))
    with beam.Pipeline() as p:
      self.analyze_and_write_pipeline(p)
    with open(self.metadata_path) as f:
      counts = util.from_json_line(f.read().strip() or '{}')
    logging.info('Batch pipeline finished: %s', counts)
    return counts
