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
"""Commands for run group.

Every subcommand takes the common flags plus one flag per parameter of its
component spec. Parameter flags are passed on as strings and override the
config section of the same name as the subcommand.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import click
from typing import Any, Callable, Optional, Text

from torusx import components
from torusx.tools.cli import labels
from torusx.tools.cli.cli_context import Context
from torusx.tools.cli.cli_context import pass_context
from torusx.tools.cli.handler import run_handler

# Covered by the common --tol flag.
_SHARED_PARAMETERS = frozenset([labels.TOL])


def common_options(fn: Callable[..., Any]) -> Callable[..., Any]:
  """Flags shared by every subcommand."""
  options = [
      click.option(
          '--config', required=True, type=str,
          help='Path of the map/config file.'),
      click.option(
          '--out', default=labels.DEFAULT_OUT_DIR, type=str,
          help='Directory the outputs are written to.'),
      click.option(
          '--threads', default=None, type=int,
          help='Worker pool size, defaults to the number of CPUs.'),
      click.option(
          '--seed', default=None, type=int,
          help='RNG seed; overrides [run] seed.'),
      click.option(
          '--tol', default=None, type=float,
          help='Tolerance; overrides [run] tol and the subcommand tol.'),
  ]
  for option in reversed(options):
    fn = option(fn)
  return fn


def _make_command(component_class: type) -> click.Command:
  """Builds the click command of one component."""
  command = component_class.COMMAND
  spec_class = component_class.SPEC_CLASS

  @pass_context
  def run_command(ctx: Context, config: Text, out: Text,
                  threads: Optional[int], seed: Optional[int],
                  tol: Optional[float], **command_params) -> None:
    ctx.set_run_flags(command, config, out, threads, seed, tol,
                      command_params)
    run_handler.RunHandler(ctx.flags_dict).run()

  for name in sorted(spec_class.PARAMETERS, reverse=True):
    if name in _SHARED_PARAMETERS:
      continue
    run_command = click.option(
        '--' + name, name, default=None, type=str,
        help='{} parameter {}.'.format(command, name))(run_command)
  run_command = common_options(run_command)
  help_text = (spec_class.__doc__ or '').strip().split('\n')[0]
  return click.command(command, help=help_text)(run_command)


@click.group('run')
def run_group() -> None:
  pass


for _component_class in components.COMPONENTS.values():
  run_group.add_command(_make_command(_component_class))
