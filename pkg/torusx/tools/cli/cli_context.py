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
"""Context for @cli_group."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import click
from typing import Any, Dict, Optional, Text

from torusx.tools.cli import labels


class Context(object):
  """Context shared between all command groups.

  Attributes :
    flags_dict: A dictionary containing the flags of a command.
  """

  def __init__(self):
    self.flags_dict = {}

  def set_run_flags(self, command: Text, config: Text, out: Optional[Text],
                    threads: Optional[int], seed: Optional[int],
                    tol: Optional[float],
                    command_params: Optional[Dict[Text, Any]] = None) -> None:
    """Records the flags every subcommand shares."""
    self.flags_dict[labels.COMMAND] = command
    self.flags_dict[labels.CONFIG_PATH] = config
    self.flags_dict[labels.OUT_DIR] = out
    self.flags_dict[labels.THREADS] = threads
    self.flags_dict[labels.SEED] = seed
    self.flags_dict[labels.TOL] = tol
    self.flags_dict[labels.COMMAND_PARAMS] = {
        k: v for k, v in (command_params or {}).items() if v is not None
    }


pass_context = click.make_pass_decorator(Context, ensure=True)
