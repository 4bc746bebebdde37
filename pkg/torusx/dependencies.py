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
"""Package dependencies for torusx."""


def make_required_install_packages():
  # numpy>=1.22 for batched linalg.qr on stacked Jacobians.
  return [
      'absl-py>=0.9,<2',
      'click>=7.0,<9',
      'numpy>=1.22,<2',
      'scipy>=1.6,<2',
  ]


def make_required_test_packages():
  """Prepare extra packages needed for 'python setup.py test'."""
  return [
      'hypothesis>=5.0,<7',
      'mock>=3.0,<5',
      'pytest>=5.0.0,<8.0.0',
  ]
