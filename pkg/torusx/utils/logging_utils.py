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
"""Per-run file logger.

Library code logs through absl; the CLI additionally records the lifecycle
of each run in `<out>/torusx.log`, one line per event, prefixed with the
subcommand and the worker that logged it.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import contextlib
import copy
import logging
import os
from typing import Any, Dict, Iterator, Optional, Text

LOG_FILE_NAME = 'torusx.log'

_FIELDS = ('log_root', 'log_level', 'command_name', 'worker_name')


class LoggerConfig(object):
  """Where a run logs and how its lines are labelled.

  Attributes:
    log_root: directory holding the log file.
    log_level: logger's level, default to INFO.
    command_name: the subcommand being run.
    worker_name: name of the object doing the logging.
  """

  def __init__(self,
               log_root: Optional[Text] = '/var/tmp/torusx/logs',
               log_level: Optional[int] = logging.INFO,
               command_name: Optional[Text] = '',
               worker_name: Optional[Text] = ''):
    self.log_root = log_root
    self.log_level = log_level
    self.command_name = command_name
    self.worker_name = worker_name

  @property
  def log_path(self) -> Text:
    return os.path.join(self.log_root, LOG_FILE_NAME)

  @property
  def line_format(self) -> Text:
    return ('%(asctime)s - {}:{} (%(filename)s:%(lineno)s) - %(levelname)s: '
            '%(message)s').format(self.command_name, self.worker_name)

  def update(self, config: Optional[Dict[Text, Any]] = None):
    """Sets the fields named in config.

    Raises:
      ValueError: if a key is not a LoggerConfig field.
    """
    config = config or {}
    unknown = sorted(set(config) - set(_FIELDS))
    if unknown:
      raise ValueError('%s not expected in logger config.' %
                       ', '.join(unknown))
    for k, v in config.items():
      setattr(self, k, v)

  def copy(self) -> 'LoggerConfig':
    return copy.copy(self)


def get_logger(config: LoggerConfig) -> logging.Logger:
  """Returns the file logger of config.log_root.

  Repeated calls for one log root share a single file handler.

  Raises:
    RuntimeError: if log_root exists as a file.
  """
  if os.path.exists(config.log_root) and not os.path.isdir(config.log_root):
    raise RuntimeError('Log dir exists as a file: {}'.format(config.log_root))
  os.makedirs(config.log_root, exist_ok=True)

  logger = logging.getLogger(config.log_path)
  logger.setLevel(config.log_level)
  if not any(isinstance(h, logging.FileHandler) for h in logger.handlers):
    handler = logging.FileHandler(config.log_path)
    handler.setFormatter(logging.Formatter(config.line_format))
    logger.addHandler(handler)
  return logger


def close_logger(logger: logging.Logger) -> None:
  """Flushes and detaches the handlers of a logger from get_logger."""
  for handler in list(logger.handlers):
    handler.close()
    logger.removeHandler(handler)


@contextlib.contextmanager
def run_logger(config: LoggerConfig) -> Iterator[logging.Logger]:
  """get_logger for the duration of a with block, closed on exit."""
  logger = get_logger(config)
  try:
    yield logger
  finally:
    close_logger(logger)
