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
"""Generic torusx finite-time Lyapunov exponent executor."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl import logging
import numpy as np
from typing import Any, Dict, List, Text

from torusx import types
from torusx.components.base import base_executor
from torusx.dynamics import udv

_TABLE_HEADER = ['start', 'lambda1', 'lambda2', 'positive_count']


class Executor(base_executor.BaseExecutor):
  """Generic torusx finite-time Lyapunov exponent executor."""

  def Do(self, input_dict: Dict[Text, List[types.Artifact]],
         output_dict: Dict[Text, List[types.Artifact]],
         exec_properties: Dict[Text, Any]) -> None:
    """Computes windowed FTLEs and their oscillation statistics.

    Args:
      input_dict: Input dict from input key to a list of Artifacts.
        - map_config: the map/config file.
      output_dict: Output dict from output key to a list of Artifacts.
        - report: JSON with the oscillation statistics and the exponents
          of the whole orbit.
        - table: CSV with one row per window.
      exec_properties: A dict of execution properties.
        - p0: initial point; drawn from the run seed when absent.
        - total: orbit length.
        - window: window length N.
        - stride: distance between window starts.
        - dead_band: threshold for a positive exponent.

    Returns:
      None

    Raises:
      SingularJacobianError: if DF is singular along the orbit.
    """
    self._log_startup(input_dict, output_dict, exec_properties)
    torus_map = self._load_map(input_dict)
    p0 = exec_properties['p0']
    if p0 is None:
      p0 = np.random.RandomState(self.seed).uniform(size=2)
    p0 = np.asarray(p0, dtype=float)
    series = udv.positive_count_series(
        torus_map, p0, exec_properties['total'], exec_properties['window'],
        exec_properties['stride'], exec_properties['dead_band'],
        map_fn=self._parallel_map)
    stats = udv.oscillation_stats(series)
    long_run = udv.ftle_window(torus_map, p0, exec_properties['total'])
    logging.info('%d windows: frac_one=%s frac_two=%s switches=%d; '
                 'whole-orbit exponents %s', stats.windows, stats.frac_one,
                 stats.frac_two, stats.switches, long_run)

    self._write_json(output_dict, 'report', {
        'p0': p0,
        'total': exec_properties['total'],
        'window': series.window,
        'stride': series.stride,
        'dead_band': series.dead_band,
        'stats': stats,
        'orbit_exponents': long_run,
    })
    self._write_csv(output_dict, 'table', _TABLE_HEADER, series.rows())
