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
"""Abstract torusx executor class."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import abc
import json
import os
from concurrent import futures

from absl import logging
from typing import Any, Callable, Dict, List, Optional, Sequence, Text

from torusx import types
from torusx.types import artifact
from torusx.types import artifact_utils
from torusx.utils import config_utils
from torusx.utils import io_utils
from torusx.utils import json_utils


class BaseExecutor(object, metaclass=abc.ABCMeta):
  """Abstract torusx executor class."""

  class Context(object):
    """A context class for all executors."""

    def __init__(self,
                 seed: int = 0,
                 threads: Optional[int] = None,
                 tol: Optional[float] = None,
                 provenance: Optional[Text] = None):
      # Seed of every random draw the executor makes.
      self.seed = seed
      # Worker pool size; None means os.cpu_count().
      self.threads = threads
      # Run-level tolerance override.
      self.tol = tol
      # sha256 of the config echo, written into every output.
      self.provenance = provenance

  @abc.abstractmethod
  def Do(self, input_dict: Dict[Text, List[types.Artifact]],
         output_dict: Dict[Text, List[types.Artifact]],
         exec_properties: Dict[Text, Any]) -> None:
    """Execute underlying component implementation.

    Args:
      input_dict: Input dict from input key to a list of Artifacts.
        - map_config: the map/config file.
      output_dict: Output dict from output key to a list of Artifacts. Every
        artifact is written at its uri.
      exec_properties: A dict of validated execution properties.

    Returns:
      None.
    """
    pass

  def __init__(self, context: Optional[Context] = None):
    self._context = context or BaseExecutor.Context()

  @property
  def seed(self) -> int:
    return self._context.seed

  def _parallel_map(self, fn: Callable[[Any], Any],
                    items: Sequence[Any]) -> List[Any]:
    """fn over items on the worker pool, results in input order."""
    items = list(items)
    threads = self._context.threads or os.cpu_count() or 1
    if threads == 1 or len(items) <= 1:
      return [fn(item) for item in items]
    with futures.ThreadPoolExecutor(max_workers=threads) as pool:
      return list(pool.map(fn, items))

  def _load_map(self, input_dict: Dict[Text, List[types.Artifact]]):
    uri = artifact_utils.get_single_uri(input_dict['map_config'])
    logging.info('Loading map from %s', uri)
    return config_utils.load_config(uri).torus_map()

  def _write_json(self, output_dict: Dict[Text, List[types.Artifact]],
                  key: Text, payload: Dict[Text, Any]) -> None:
    report = artifact_utils.get_single_instance(output_dict[key])
    payload = dict(json_utils.canonical_dict(payload))
    payload['seed'] = self.seed
    io_utils.write_json_file(report.uri, payload, self._context.provenance)
    self._publish(report)

  def _write_csv(self, output_dict: Dict[Text, List[types.Artifact]],
                 key: Text, header: Sequence[Text],
                 rows: Sequence[Sequence[Any]]) -> None:
    table = artifact_utils.get_single_instance(output_dict[key])
    io_utils.write_csv_file(table.uri, header, rows, self._context.provenance)
    self._publish(table)

  def _publish(self, output: types.Artifact) -> None:
    output.checksum = io_utils.generate_fingerprint(output.uri)
    output.state = artifact.ArtifactState.PUBLISHED
    logging.info('%s written to %s.', output.name or output.type_name,
                 output.uri)

  def _log_startup(self, inputs: Dict[Text, List[types.Artifact]],
                   outputs: Dict[Text, List[types.Artifact]],
                   exec_properties: Dict[Text, Any]) -> None:
    """Log inputs, outputs, and executor properties in a standard format."""
    logging.info('Starting {} execution.'.format(self.__class__.__name__))
    logging.info('Inputs for {} is: {}'.format(
        self.__class__.__name__, artifact_utils.jsonify_artifact_dict(inputs)))
    logging.info('Outputs for {} is: {}'.format(
        self.__class__.__name__, artifact_utils.jsonify_artifact_dict(outputs)))
    logging.info('Execution properties for {} is: {}'.format(
        self.__class__.__name__,
        json.dumps(json_utils.canonical_dict(exec_properties),
                   sort_keys=True)))
