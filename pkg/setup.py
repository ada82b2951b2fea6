# spectral-distance, Connes distances on finite spectral triples,
# (C) 2026 The spectral-distance authors.
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

import re

from codecs import open

from setuptools import setup

version = ''
with open('specdist/__init__.py', 'r') as fd:
    version = re.search(r'^__version__\s*=\s*[\'"]([^\'"]*)[\'"]',
                        fd.read(), re.MULTILINE).group(1)

with open('README.md', 'r', 'utf-8') as f:
    readme = f.read()

packages = [
    'specdist',
    'specdist.options'
]

requires = [
    'numpy>=1.20',
    'scipy>=1.6',
    'POT>=0.8',
    'click>=7.0',
]

tests_requires = [
    'pytest',
    'hypothesis',
    'mock',
]

setup(
    name='spectral-distance',
    description='Connes spectral distances on finite spectral triples',
    author='The spectral-distance authors',
    version=version,
    long_description_content_type='text/markdown',
    package_dir={'specdist': 'specdist'},
    packages=packages,
    install_requires=requires,
    tests_require=tests_requires,
    extras_require={'test': tests_requires},
    python_requires='>=3.7',
    entry_points={
        'console_scripts': ['specdist = specdist.cli:main'],
    },
    license='Apache License 2.0',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    long_description=readme,
    package_data={'': ['LICENSE', 'README.md']},
    include_package_data=True,
)
