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
"""Generic torusx conjugacy executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl import logging
import numpy as np
from typing import Any, Dict, List, Text

from torusx import types
from torusx.components.base import base_executor
from torusx.dynamics import conjugacy
from torusx.dynamics import torus_map as torus_map_lib

_TABLE_HEADER = ['x', 'y', 'H1', 'H2', 'factoring_residual']


class Executor(base_executor.BaseExecutor):
  """Generic torusx conjugacy executor."""

  def Do(self, input_dict: Dict[Text, List[types.Artifact]],
         output_dict: Dict[Text, List[types.Artifact]],
         exec_properties: Dict[Text, Any]) -> None:
    """Computes the conjugacy and its certificates on random samples.

    Args:
      input_dict: Input dict from input key to a list of Artifacts.
        - map_config: the map/config file.
      output_dict: Output dict from output key to a list of Artifacts.
        - report: JSON certificates.
        - table: CSV of H at the sample points.
      exec_properties: A dict of execution properties.
        - tol: truncation tolerance of the Phi series.
        - sample_n: number of random sample points (and pairs).
        - injectivity_grid: grid of the injectivity check, 0 to skip.

    Returns:
      None
    """
    self._log_startup(input_dict, output_dict, exec_properties)
    torus_map = self._load_map(input_dict)
    tol = exec_properties['tol']
    sample_n = exec_properties['sample_n']

    cmap = conjugacy.ConjugacyMap(torus_map, tol)
    spectral_data = cmap.spectral
    depth = conjugacy.phi_depth(torus_map, tol, spectral_data)
    rng = np.random.RandomState(self.seed)
    points = rng.uniform(size=(sample_n, 2))
    pairs = rng.uniform(size=(2, sample_n, 2))

    images = cmap.forward(points)
    residuals = torus_map_lib.circle_distance(
        conjugacy.phi(torus_map, torus_map.evaluate(points), tol,
                      spectral_data),
        spectral_data.m * images[:, 0])
    defects = conjugacy.lipschitz_defect(torus_map, pairs[0], pairs[1])
    bound = conjugacy.lipschitz_bound(torus_map, spectral_data)
    report = {
        'conjugacy': cmap,
        'depth': depth,
        'tail_bound': conjugacy.tail_bound(torus_map, spectral_data, depth),
        'sample_n': sample_n,
        'factoring_residual': float(np.max(residuals)),
        'lipschitz_defect': float(np.max(defects)),
        'lipschitz_bound': bound,
        'lipschitz_within_bound': bool(np.max(defects) <= bound + 1e-12),
        'first_coordinate_drift': conjugacy.first_coordinate_drift(
            cmap, points, 1),
    }
    if exec_properties['injectivity_grid']:
      report['injectivity_violations'] = conjugacy.injectivity_violations(
          cmap, exec_properties['injectivity_grid'])
    logging.info('Phi depth %d; factoring residual %s; Lipschitz defect %s '
                 '(bound %s)', depth, report['factoring_residual'],
                 report['lipschitz_defect'], bound)

    self._write_json(output_dict, 'report', report)
    self._write_csv(output_dict, 'table', _TABLE_HEADER,
                    [[p[0], p[1], h[0], h[1], r]
                     for p, h, r in zip(points, images, residuals)])
