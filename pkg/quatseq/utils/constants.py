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

"""Constants used in quatseq."""

import immutabledict


# Case names, keyed by (p mod 8, q mod 8).
CASE_15 = 'Case15'
CASE_51 = 'Case51'
CASE_55 = 'Case55'
CASE_BY_RESIDUES = immutabledict.immutabledict({
    (1, 5): CASE_15,
    (5, 1): CASE_51,
    (5, 5): CASE_55,
})

# Number of generalized cyclotomic classes, and the modulus of the sequence
# alphabet. Both are 4 throughout.
NUM_CLASSES = 4
ALPHABET_SIZE = 4

# Lexicographically smallest irreducible polynomials over the 2-element field,
# one per degree, encoded as integers whose bit i is the coefficient of x^i.
# Degrees missing here are found by search, see galois_ring.binary_irreducible.
BINARY_IRREDUCIBLES = immutabledict.immutabledict({
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
})

# Parameter sets used by the selftest, one per case.
BUILTIN_PARAMETER_SETS = ((5, 13), (17, 5), (5, 17))

# Periods (and ring degrees) used for the oracle/spectrum equivalence on random
# sequences.
RANDOM_SEQUENCE_PERIODS = immutabledict.immutabledict({7: 3, 15: 4})

# Largest modulus pq accepted by the command line tool.
MAX_PERIOD = 100000

# Largest ring degree ell accepted by the command line tool. The product table
# of GR(4, 4^ell) holds ell^3 int64 entries, 128 MiB at this limit.
MAX_RING_DEGREE = 256

# Exit codes of the command line tool.
EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_VERIFICATION_FAILED = 3

# Report formats.
FORMAT_JSON = 'json'
FORMAT_CSV = 'csv'
FORMAT_TEXT = 'text'
REPORT_FORMATS = (FORMAT_JSON, FORMAT_CSV, FORMAT_TEXT)

# Report field order, shared by JSON and CSV output.
REPORT_FIELDS = (
    'p',
    'q',
    'case',
    'g',
    'h',
    'e',
    'ell',
    'ell_p',
    'ell_q',
    'two_class_index',
    'modulus',
    'lc_spectrum',
    'lc_closed_form',
    'lc_oracle',
    'lc_by_branch_rule',
    'zero_branch',
    'rho',
    'trace_verified',
    'closed_form_matches_dft',
    'spectrum',
    'elapsed_ms',
)
OPTIONAL_REPORT_FIELDS = ('lc_oracle', 'zero_branch', 'trace_verified',
                          'spectrum')
ERROR_RECORD_FIELDS = ('line', 'input', 'error')

# Invariant suites run by the selftest, in order.
SUITE_NAMES = (
    'root_of_unity_sums',
    'class_evaluations',
    'opposite_counts',
    'inner_product',
    'two_in_class',
    'ell_divisibility',
    'oracle_spectrum',
)
