# Copyright 2019 The torusx Authors. All Rights Reserved.
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
"""Package Setup script for torusx."""

from __future__ import print_function

from setuptools import find_packages
from setuptools import setup

# Get various package dependencies list.
with open('torusx/dependencies.py') as fp:
  globals_dict = {}
  exec(fp.read(), globals_dict)  # pylint: disable=exec-used
_make_required_install_packages = globals_dict['make_required_install_packages']
_make_required_test_packages = globals_dict['make_required_test_packages']

# Get version from version module.
with open('torusx/version.py') as fp:
  globals_dict = {}
  exec(fp.read(), globals_dict)  # pylint: disable=exec-used
__version__ = globals_dict['__version__']

# Get the long description from the README file.
with open('README.md') as fp:
  _LONG_DESCRIPTION = fp.read()

setup(
    name='torusx',
    version=__version__,
    author='The torusx Authors',
    license='Apache 2.0',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    namespace_packages=[],
    install_requires=_make_required_install_packages(),
    setup_requires=['pytest-runner'],
    tests_require=_make_required_test_packages(),
    extras_require={'test': _make_required_test_packages()},
    python_requires='>=3.6,<4',
    packages=find_packages(exclude=['examples', 'examples.*']),
    package_data={'torusx': ['testdata/*.cfg']},
    include_package_data=True,
    description='Cone systems, periodic orbits and finite-time Lyapunov '
    'diagnostics for torus maps F(z) = Mz + G(z) mod 1',
    long_description=_LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    keywords='dynamical systems torus maps lyapunov exponents',
    requires=[],
    # Below console_scripts, each line identifies one console script. The first
    # part before the equals sign (=) which is 'torusx', is the name of the
    # script that should be generated, the second part is the import path
    # followed by a colon (:) with the Click command group. After installation,
    # the user can invoke the CLI using "torusx <sub_command> <flags>"
    entry_points="""
        [console_scripts]
        torusx=torusx.tools.cli.cli_main:cli_group
    """)
