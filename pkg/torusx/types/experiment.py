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
"""Experiment config echo and run manifest."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from typing import Any, Dict, Optional, Text

from torusx import version
from torusx.dynamics import torus_map as torus_map_lib
from torusx.utils import io_utils
from torusx.utils import json_utils


class ExperimentConfig(json_utils.Jsonable):
  """Everything that determines the outputs of one run.

  Attributes:
    command: the subcommand.
    config_path: the map/config file.
    out_dir: output directory.
    torus_map: the map defined by the config file.
    exec_properties: resolved component parameters.
    seed: RNG seed, always recorded.
    threads: worker pool size; does not affect outputs.
    tol: run-level tolerance, None if not given.
  """

  def __init__(self, command: Text, config_path: Text, out_dir: Text,
               torus_map: torus_map_lib.TorusMap,
               exec_properties: Dict[Text, Any], seed: int,
               threads: Optional[int] = None, tol: Optional[float] = None):
    self.command = command
    self.config_path = config_path
    self.out_dir = out_dir
    self.torus_map = torus_map
    self.exec_properties = dict(exec_properties)
    self.seed = int(seed)
    self.threads = threads
    self.tol = tol

  def echo(self) -> Dict[Text, Any]:
    """Canonical form of the inputs; paths and thread count are excluded."""
    return json_utils.canonical_dict({
        'command': self.command,
        'map': self.torus_map,
        'parameters': self.exec_properties,
        'seed': self.seed,
        'tol': self.tol,
    })

  @property
  def provenance(self) -> Text:
    """sha256 of the canonical echo."""
    return io_utils.string_fingerprint(json_utils.canonical_dumps(self.echo()))

  def to_json_dict(self) -> Dict[Text, Any]:
    result = self.echo()
    result.update({
        'config_path': self.config_path,
        'out_dir': self.out_dir,
        'threads': self.threads,
    })
    return result


class RunManifest(json_utils.Jsonable):
  """Record of a finished run.

  Reruns of the same config and seed reproduce every field except
  wall_time; `reproducible_dict` is the part that compares equal.

  Attributes:
    version: torusx version.
    command: the subcommand.
    config_echo: ExperimentConfig.echo() of the run.
    provenance: sha256 of the echo.
    seed: RNG seed.
    wall_time: seconds spent in the executor.
    outputs: output file name -> sha256 of its content.
  """

  def __init__(self, config: ExperimentConfig, wall_time: float,
               outputs: Dict[Text, Text]):
    self.version = version.__version__
    self.command = config.command
    self.config_echo = config.echo()
    self.provenance = config.provenance
    self.seed = config.seed
    self.wall_time = float(wall_time)
    self.outputs = dict(outputs)

  def reproducible_dict(self) -> Dict[Text, Any]:
    result = json_utils.canonical_dict(self)
    del result['wall_time']
    return result
