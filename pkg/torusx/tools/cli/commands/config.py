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
"""Commands for config group."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import click
from typing import Optional, Text

from torusx import components
from torusx.tools.cli.cli_context import Context
from torusx.tools.cli.cli_context import pass_context
from torusx.tools.cli.handler import config_handler


@click.group('config')
def config_group() -> None:
  pass


@config_group.command('validate', help='List the violations of a config file')
@pass_context
@click.option(
    '--config', required=True, type=str, help='Path of the map/config file.')
@click.option(
    '--command',
    default='verify-cone',
    type=click.Choice(list(components.COMPONENTS)),
    help='Subcommand the config is checked for.')
@click.option('--threads', default=None, type=int, help='Worker pool size.')
@click.option('--seed', default=None, type=int, help='RNG seed.')
@click.option('--tol', default=None, type=float, help='Tolerance.')
def validate_config(ctx: Context, config: Text, command: Text,
                    threads: Optional[int], seed: Optional[int],
                    tol: Optional[float]) -> None:
  """Command definition to validate a config file."""
  ctx.set_run_flags(command, config, None, threads, seed, tol)
  config_handler.ConfigHandler(ctx.flags_dict).validate()
