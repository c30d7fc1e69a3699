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

"""Tests for quatseq.analysis.batch_pipeline."""
import json
import os

from absl.testing import absltest

from quatseq.analysis import analyzer
from quatseq.analysis import batch_pipeline
from quatseq.utils import constants


class ParsePairsTest(absltest.TestCase):

  def test_comments_and_blank_lines(self):
    entries = batch_pipeline.parse_pairs(
        ['# header', '', '5 13', '17 5  # Case15', '   '])
    self.assertEqual([(e['p'], e['q']) for e in entries], [(5, 13), (17, 5)])
    self.assertEqual([e['line'] for e in entries], [3, 4])
    self.assertEqual([e['index'] for e in entries], [0, 1])

  def test_malformed_lines(self):
    entries = batch_pipeline.parse_pairs(['5', '5 13 17', 'five 13'])
    self.assertLen(entries, 3)
    for entry in entries:
      self.assertIn('error', entry)
      self.assertNotIn('p', entry)

  def test_unreadable_file(self):
    with self.assertRaises(OSError):
      batch_pipeline.read_pairs_file(
          os.path.join(self.create_tempdir().full_path, 'missing.txt'))

  def test_invalid_utf8_file(self):
    pairs_path = os.path.join(self.create_tempdir().full_path, 'pairs.txt')
    with open(pairs_path, 'wb') as f:
      f.write(b'5 13\n\xff\xfe 17\n')
    with self.assertRaises(UnicodeDecodeError):
      batch_pipeline.read_pairs_file(pairs_path)


class BatchAnalysisTest(absltest.TestCase):

  def _run(self, text, report_format=constants.FORMAT_JSON, config=None):
    pairs_file = self.create_tempfile(content=text)
    output_dir = self.create_tempdir()
    output_path = os.path.join(output_dir.full_path, 'records.txt')
    batch = batch_pipeline.BatchAnalysis(
        batch_pipeline.read_pairs_file(pairs_file.full_path),
        config or analyzer.create_analysis_config(), report_format,
        output_path,
        os.path.join(output_dir.full_path, 'metadata.json'))
    counts = batch.run_pipeline()
    with open(output_path) as f:
      return f.read().splitlines(), counts

  def test_reports_in_input_order(self):
    lines, counts = self._run('5 13\n17 5\n5 17\n')
    records = [json.loads(line) for line in lines]
    self.assertEqual([(r['p'], r['q']) for r in records],
                     [(5, 13), (17, 5), (5, 17)])
    self.assertEqual([r['case'] for r in records],
                     ['Case55', 'Case15', 'Case51'])
    self.assertEqual(counts, {batch_pipeline.STATUS_OK: 3})

  def test_invalid_pairs_become_error_records(self):
    lines, counts = self._run('# pairs\n5 13\n3 7\nnot a pair\n5 17\n')
    records = [json.loads(line) for line in lines]
    self.assertLen(records, 4)
    self.assertEqual(records[0]['p'], 5)
    self.assertEqual(tuple(records[1]), constants.ERROR_RECORD_FIELDS)
    self.assertEqual(records[1]['line'], 3)
    self.assertEqual(records[1]['input'], '3 7')
    self.assertIn('gcd', records[1]['error'])
    self.assertEqual(records[2]['line'], 4)
    self.assertEqual(records[3]['q'], 17)
    self.assertEqual(counts, {
        batch_pipeline.STATUS_OK: 2,
        batch_pipeline.STATUS_ERROR: 2
    })

  def test_pair_above_ring_degree_limit_becomes_error_record(self):
    config = analyzer.create_analysis_config(max_ring_degree=12)
    lines, counts = self._run('5 13\n5 157\n17 5\n', config=config)
    records = [json.loads(line) for line in lines]
    self.assertEqual(records[0]['lc_spectrum'], 41)
    self.assertEqual(records[1]['input'], '5 157')
    self.assertIn('ell = 52', records[1]['error'])
    self.assertEqual(records[2]['lc_spectrum'], 85)
    self.assertEqual(counts, {
        batch_pipeline.STATUS_OK: 2,
        batch_pipeline.STATUS_ERROR: 1
    })

  def test_empty_file(self):
    lines, counts = self._run('# nothing here\n')
    self.assertEqual(lines, [])
    self.assertEqual(counts, {})

  def test_csv_output(self):
    lines, _ = self._run('17 5\n5 17\n', constants.FORMAT_CSV)
    self.assertLen(lines, 3)
    self.assertEqual(lines[0], ','.join(constants.REPORT_FIELDS))
    self.assertTrue(lines[1].startswith('17,5,Case15,'))
    self.assertTrue(lines[2].startswith('5,17,Case51,'))


if __name__ == '__main__':
  absltest.main()
