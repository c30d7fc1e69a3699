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

"""Setup script for quatseq.

This script will install quatseq as a Python module.
"""

import pathlib
from setuptools import find_packages
from setuptools import setup

here = pathlib.Path(__file__).parent.resolve()

long_description = (here / 'README.md').read_text(encoding='utf-8')

# Keep this list in sync with `requirements.txt`.
install_requires = [
    'absl-py >= 0.12.0',
    'apache-beam >= 2.34.0',
    'immutabledict >= 2.2.1',
    'numpy >=1.19.5',
    'sympy >= 1.9',
    'tqdm >= 4.62.3',
    'typing_extensions >= 3.10.0',
]

quatseq_description = (
    'quatseq: Linear complexity and trace representation of quaternary '
    'generalized cyclotomic sequences over Galois rings.')

setup(
    name='quatseq',
    version='0.0.1',
    description=quatseq_description,
    long_description=long_description,
    long_description_content_type='text/markdown',
    author='The quatseq Team',
    classifiers=[
        'Development Status :: 0 - Alpha',

        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',

        'License :: OSI Approved :: Apache Software License',

        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3 :: Only',

        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Security :: Cryptography',
        'Topic :: Software Development :: Libraries :: Python Modules',

    ],
    keywords='quaternary sequences, linear complexity, galois rings, cyclotomy',
    include_package_data=True,
    packages=find_packages(exclude=['docs', 'examples']),
    python_requires='>=3.8',
    install_requires=install_requires,
    entry_points={
        'console_scripts': [
            'quatseq_analysis=quatseq.quatseq_analysis:run',
        ],
    },
    license='Apache 2.0',
)
