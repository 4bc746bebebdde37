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
"""Component specifications for the torusx subcommands."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import fractions

from typing import Any, Dict, List, Text

from torusx.dynamics import circle_dynamics
from torusx.dynamics import orbits
from torusx.dynamics import udv
from torusx.types import standard_artifacts
from torusx.types.component_spec import ChannelParameter
from torusx.types.component_spec import ComponentSpec
from torusx.types.component_spec import ExecutionParameter
from torusx.utils import config_utils

DEFAULT_SEED = 0
CENTER_REPELLER = 'repeller'


def _positive(type_, default, optional=False):
  return ExecutionParameter(type=type_, default=default, optional=optional,
                            predicate=lambda v: v > 0, requirement='> 0')


def _at_least(type_, bound, default, optional=False):
  return ExecutionParameter(type=type_, default=default, optional=optional,
                            predicate=lambda v: v >= bound,
                            requirement='>= {}'.format(bound))


def _one_of(default, choices):
  return ExecutionParameter(type=str, default=default,
                            predicate=lambda v: v in choices,
                            requirement='one of {}'.format(', '.join(choices)))


def _is_center(value: Text) -> bool:
  if value == CENTER_REPELLER:
    return True
  try:
    config_utils.parse_pair(value)
  except ValueError:
    return False
  return True


_MAP_INPUTS = {
    'map_config': ChannelParameter(type=standard_artifacts.MapConfig),
}
_REPORT_OUTPUTS = {
    'report': ChannelParameter(type=standard_artifacts.JsonReport),
}
_REPORT_AND_TABLE_OUTPUTS = {
    'report': ChannelParameter(type=standard_artifacts.JsonReport),
    'table': ChannelParameter(type=standard_artifacts.CsvTable),
}
_BASE_X = ExecutionParameter(
    type=fractions.Fraction, default=fractions.Fraction(0),
    predicate=lambda v: 0 <= v < 1, requirement='a rational in [0, 1)')
_CIRCLE_PARAMETERS = {
    'iters': _at_least(int, 100, circle_dynamics.DEFAULT_ITERS),
    'max_denominator': _at_least(int, 1,
                                 circle_dynamics.DEFAULT_MAX_DENOMINATOR),
    'qp_threshold': _positive(float, circle_dynamics.DEFAULT_QP_THRESHOLD),
}


class RunSpec(ComponentSpec):
  """Run-level settings shared by every subcommand."""

  PARAMETERS = {
      'seed': _at_least(int, 0, DEFAULT_SEED),
      'threads': _at_least(int, 1, None, optional=True),
      'tol': _positive(float, None, optional=True),
  }


class ConeVerifierSpec(ComponentSpec):
  """verify-cone: cone field and delta check of the map."""

  PARAMETERS = {
      'K': ExecutionParameter(type=float, default=2.0,
                              predicate=lambda v: v > 1, requirement='> 1'),
      'alpha': _positive(float, None, optional=True),
      'grid_n': _at_least(int, 2, 200),
      'boundary_samples': _at_least(int, 2, 64),
  }
  INPUTS = _MAP_INPUTS
  OUTPUTS = _REPORT_OUTPUTS


class ConjugacySpec(ComponentSpec):
  """conjugacy: Phi and H with their error certificates."""

  PARAMETERS = {
      'tol': _positive(float, 1e-10),
      'sample_n': _at_least(int, 1, 1000),
      'injectivity_grid': _at_least(int, 0, 0),
  }
  INPUTS = _MAP_INPUTS
  OUTPUTS = _REPORT_AND_TABLE_OUTPUTS


class FiberTracerSpec(ComponentSpec):
  """fibers: polylines of Phi^{-1}(theta) for equally spaced theta."""

  PARAMETERS = {
      'n_thetas': _at_least(int, 1, 16),
      'n_points': _at_least(int, 8, 256),
      'tol': _positive(float, 1e-10),
  }
  INPUTS = _MAP_INPUTS
  OUTPUTS = _REPORT_AND_TABLE_OUTPUTS


class PeriodicFinderSpec(ComponentSpec):
  """find-periodic: periodic orbits of periods 1..period."""

  PARAMETERS = {
      'period': _at_least(int, 1, 1),
      'seed_grid': _at_least(int, 2, None, optional=True),
      'seeding': _one_of(orbits.SEEDING_AUTO, orbits.SEEDINGS),
      'coverage_grid': _at_least(int, 2, 200),
      'max_iter': _at_least(int, 1, 60),
  }
  INPUTS = _MAP_INPUTS
  OUTPUTS = _REPORT_AND_TABLE_OUTPUTS


class CircleEnumeratorSpec(ComponentSpec):
  """circles: return maps on every periodic circle of period n."""

  PARAMETERS = dict(_CIRCLE_PARAMETERS, n=_at_least(int, 1, 1))
  INPUTS = _MAP_INPUTS
  OUTPUTS = _REPORT_AND_TABLE_OUTPUTS


class RotationSpec(ComponentSpec):
  """rotation: rotation number and class of one circle return map."""

  PARAMETERS = dict(
      _CIRCLE_PARAMETERS,
      base_x=_BASE_X,
      n=_at_least(int, 1, 1),
      y0=ExecutionParameter(type=float, default=0.0),
      method=_one_of(circle_dynamics.METHOD_WEIGHTED,
                     (circle_dynamics.METHOD_PLAIN,
                      circle_dynamics.METHOD_WEIGHTED)),
  )
  INPUTS = _MAP_INPUTS
  OUTPUTS = _REPORT_OUTPUTS


class SweepSpec(ComponentSpec):
  """sweep: circle classification over a t interval."""

  PARAMETERS = dict(
      _CIRCLE_PARAMETERS,
      base_x=_BASE_X,
      n=_at_least(int, 1, 1),
      t_min=ExecutionParameter(type=float, default=0.0),
      t_max=ExecutionParameter(type=float, default=1.0),
      samples=_at_least(int, 2, 200),
      iters=_at_least(int, 100, 4096),
  )
  INPUTS = _MAP_INPUTS
  OUTPUTS = _REPORT_AND_TABLE_OUTPUTS

  def _cross_check(self, exec_properties: Dict[Text, Any]) -> List[Text]:
    if exec_properties['t_max'] <= exec_properties['t_min']:
      return ['t_max must be > t_min']
    return []


class FtleSpec(ComponentSpec):
  """ftle: positive-FTLE counts along one orbit."""

  PARAMETERS = {
      'p0': ExecutionParameter(type=tuple, optional=True),
      'total': _at_least(int, 1, 100000),
      'window': _at_least(int, 1, 30),
      'stride': _at_least(int, 1, 1),
      'dead_band': _at_least(float, 0, 0.0),
  }
  INPUTS = _MAP_INPUTS
  OUTPUTS = _REPORT_AND_TABLE_OUTPUTS

  def _cross_check(self, exec_properties: Dict[Text, Any]) -> List[Text]:
    if exec_properties['total'] < exec_properties['window']:
      return ['total must be >= window']
    return []


class CoverageSpec(ComponentSpec):
  """cover: forward images of a disk against a grid partition."""

  PARAMETERS = {
      'center': ExecutionParameter(
          type=str, default='(0.5,0.5)', predicate=_is_center,
          requirement="a pair (x, y) or '{}'".format(CENTER_REPELLER)),
      'radius': _positive(float, 0.05),
      'grid_n': _at_least(int, 16, 64),
      'max_iter': _at_least(int, 1, 60),
      'samples': _at_least(int, 1, None, optional=True),
      'mixing_target': ExecutionParameter(type=tuple, optional=True),
  }
  INPUTS = _MAP_INPUTS
  OUTPUTS = _REPORT_AND_TABLE_OUTPUTS

  def _cross_check(self, exec_properties: Dict[Text, Any]) -> List[Text]:
    samples = exec_properties['samples']
    minimum = udv.SEEDS_PER_CELL * exec_properties['grid_n']**2
    if samples is not None and samples < minimum:
      return ['samples must be >= 10 * grid_n^2 = {}'.format(minimum)]
    return []


class SnapbackSpec(ComponentSpec):
  """snapback: transverse homoclinic point of the period-1 repeller."""

  PARAMETERS = {
      'neighborhood_r': _positive(float, 0.1),
      'depth': _at_least(int, 1, 12),
      'per_level': _at_least(int, 1, 5000, optional=True),
      'seed_grid': _at_least(int, 2, 16),
  }
  INPUTS = _MAP_INPUTS
  OUTPUTS = _REPORT_OUTPUTS
