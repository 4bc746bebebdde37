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
"""Generic torusx periodic orbit finder executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

from absl import logging
import numpy as np
from typing import Any, Dict, List, Optional, Sequence, Text

from torusx import types
from torusx.components.base import base_executor
from torusx.dynamics import orbits

_TABLE_HEADER = ['period', 'orbit', 'index', 'x', 'y', 'class',
                 'unstable_dimension']
_DENSE_CLASSES = (orbits.OrbitClass.SADDLE, orbits.OrbitClass.REPELLER)


def _class_radius(found: Sequence[orbits.PeriodicOrbit], orbit_class: Text,
                  grid_n: int) -> Optional[float]:
  points = [o.points for o in found if o.orbit_class == orbit_class]
  if not points:
    return None
  return orbits.covering_radius(np.concatenate(points), grid_n)


class Executor(base_executor.BaseExecutor):
  """Generic torusx periodic orbit finder executor."""

  def Do(self, input_dict: Dict[Text, List[types.Artifact]],
         output_dict: Dict[Text, List[types.Artifact]],
         exec_properties: Dict[Text, Any]) -> None:
    """Runs Newton from a seed set for every period up to `period`.

    Args:
      input_dict: Input dict from input key to a list of Artifacts.
        - map_config: the map/config file.
      output_dict: Output dict from output key to a list of Artifacts.
        - report: JSON with the orbits, per-period counts and covering
          radii.
        - table: CSV of the orbit points.
      exec_properties: A dict of execution properties.
        - period: largest period searched.
        - seed_grid: seeds per axis or per fiber, None for the default of
          the seeding.
        - seeding: 'auto', 'grid' or 'fibers'; the report records the
          resolved one.
        - coverage_grid: grid of the covering radius.
        - max_iter: Newton iterations per seed.

    Returns:
      None
    """
    self._log_startup(input_dict, output_dict, exec_properties)
    torus_map = self._load_map(input_dict)
    periods = list(range(1, exec_properties['period'] + 1))
    by_period = self._parallel_map(
        lambda p: orbits.find_periodic(torus_map, p,
                                       exec_properties['seed_grid'],
                                       exec_properties['seeding'],
                                       exec_properties['max_iter']),
        periods)

    counts = []
    radii = []
    found = []
    for period, period_orbits in zip(periods, by_period):
      found.extend(period_orbits)
      classes = collections.Counter(o.orbit_class for o in period_orbits)
      counts.append({
          'period': period,
          'orbits': len(period_orbits),
          'saddles': classes[orbits.OrbitClass.SADDLE],
          'repellers': classes[orbits.OrbitClass.REPELLER],
          'attractors': classes[orbits.OrbitClass.ATTRACTOR],
          'nonhyperbolic': classes[orbits.OrbitClass.NONHYPERBOLIC],
      })
      radius = {'max_period': period}
      for orbit_class in _DENSE_CLASSES:
        radius[orbit_class] = _class_radius(found, orbit_class,
                                            exec_properties['coverage_grid'])
      radii.append(radius)
      logging.info('Period %d: %s; covering radii %s', period,
                   dict(classes), radius)

    self._write_json(output_dict, 'report', {
        'seeding': orbits.resolve_seeding(torus_map,
                                          exec_properties['seeding']),
        'orbits': found,
        'counts': counts,
        'covering_radius': radii,
    })
    rows = []
    for number, orbit in enumerate(found):
      for index, point in enumerate(orbit.points):
        rows.append([orbit.period, number, index, point[0], point[1],
                     orbit.orbit_class, orbit.unstable_dimension])
    self._write_csv(output_dict, 'table', _TABLE_HEADER, rows)
