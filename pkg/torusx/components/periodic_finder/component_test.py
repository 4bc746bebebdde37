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
"""Tests for torusx.components.periodic_finder.component."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl.testing import absltest

from torusx.components.periodic_finder import component
from torusx.dynamics import torus_map as torus_map_lib
from torusx.utils import test_case_utils


class ComponentTest(test_case_utils.TestCase):

  def setUp(self):
    super(ComponentTest, self).setUp()
    self._unimodular = torus_map_lib.TorusMap([[1, 0], [1, 1]])

  def testConstruct(self):
    periodic_finder = component.PeriodicFinder('map.cfg', '/tmp/out',
                                               period='4')
    self.assertEqual(periodic_finder.exec_properties['period'], 4)
    self.assertEqual(periodic_finder.outputs['table'][0].uri,
                     '/tmp/out/periodic.csv')

  def testGridSeedingAcceptsAnyMap(self):
    periodic_finder = component.PeriodicFinder('map.cfg', '/tmp/out',
                                               seeding='grid')
    self.assertEqual(periodic_finder.validate(self._unimodular), [])

  def testAutoSeedingIsDefault(self):
    periodic_finder = component.PeriodicFinder('map.cfg', '/tmp/out')
    self.assertEqual(periodic_finder.exec_properties['seeding'], 'auto')
    self.assertIsNone(periodic_finder.exec_properties['seed_grid'])
    self.assertEqual(periodic_finder.validate(self._unimodular), [])

  def testFiberSeedingNeedsEM(self):
    periodic_finder = component.PeriodicFinder('map.cfg', '/tmp/out',
                                               seeding='fibers')
    violations = periodic_finder.validate(self._unimodular)
    self.assertLen(violations, 1)
    self.assertIn('(E_M)', violations[0])

  def testBadSeeding(self):
    periodic_finder = component.PeriodicFinder('map.cfg', '/tmp/out',
                                               seeding='random')
    self.assertEqual(periodic_finder.validate(),
                     ['seeding must be one of auto, grid, fibers'])


if __name__ == '__main__':
  absltest.main()
