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
"""Handler for the run subcommands."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import os
import time

import click
from typing import Any, Dict, Text

from torusx.components.base import base_executor
from torusx.dynamics import errors
from torusx.tools.cli import labels
from torusx.tools.cli.handler import base_handler
from torusx.types import artifact_utils
from torusx.types import experiment as experiment_lib
from torusx.utils import io_utils
from torusx.utils import logging_utils


class RunHandler(base_handler.BaseHandler):
  """Runs one subcommand and writes its outputs plus the run manifest."""

  def run(self) -> None:
    """Validates, executes and exits with 0, 2 or 3."""
    config_file = self._load_config()
    component, run_spec, torus_map, violations = self._build_component(
        config_file)
    if violations:
      self._exit_with_violations(violations)
    if os.path.exists(self.out_dir) and not os.path.isdir(self.out_dir):
      self._exit(labels.EXIT_VALIDATION,
                 'output path exists as a file: {}'.format(self.out_dir))

    settings = run_spec.exec_properties
    experiment = experiment_lib.ExperimentConfig(
        command=self.command,
        config_path=self.config_path,
        out_dir=self.out_dir,
        torus_map=torus_map,
        exec_properties=component.exec_properties,
        seed=settings['seed'],
        threads=settings['threads'],
        tol=settings['tol'])
    context = base_executor.BaseExecutor.Context(
        seed=experiment.seed,
        threads=experiment.threads,
        tol=experiment.tol,
        provenance=experiment.provenance)
    logger_config = logging_utils.LoggerConfig(
        log_root=self.out_dir,
        command_name=self.command,
        worker_name=self.__class__.__name__)

    with logging_utils.run_logger(logger_config) as logger:
      logger.info('Running %s on %s (provenance %s)', self.command,
                  self.config_path, experiment.provenance)
      start = time.time()
      try:
        checksums = artifact_utils.published_checksums(
            component.run(context))
      except errors.ValidationError as e:
        logger.error('%s rejected its input: %s', self.command, e)
        self._exit(labels.EXIT_VALIDATION, '{}: {}'.format(self.command, e))
      except Exception as e:  # pylint: disable=broad-except
        logger.exception('%s failed', self.command)
        failure_file = self._write_failure(experiment, e)
        self._exit(
            labels.EXIT_NUMERICAL, '{}: {}: {} (details in {})'.format(
                self.command, e.__class__.__name__, e, failure_file))
      wall_time = time.time() - start

      manifest = experiment_lib.RunManifest(experiment, wall_time, checksums)
      io_utils.write_json_file(
          os.path.join(self.out_dir, labels.MANIFEST_FILE), manifest)
      logger.info('%s finished in %.3fs', self.command, wall_time)

    for name in sorted(checksums):
      click.echo(os.path.join(self.out_dir, name))
    self._exit(labels.EXIT_OK)

  def _write_failure(self, experiment: experiment_lib.ExperimentConfig,
                     error: Exception) -> Text:
    """Writes the diagnostic JSON of a failed run and returns its path."""
    failure: Dict[Text, Any] = {
        'command': self.command,
        'error': error.__class__.__name__,
        'message': str(error),
        'numerical': isinstance(error, errors.NumericalError),
        'config_echo': experiment.echo(),
    }
    failure_file = os.path.join(self.out_dir, labels.FAILURE_FILE)
    io_utils.write_json_file(failure_file, failure, experiment.provenance)
    return failure_file
