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
"""Main script to invoke CLI."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import click
from torusx.tools.cli.commands.config import config_group
from torusx.tools.cli.commands.run import run_group


@click.group('cli')
def cli_group():
  pass


cli_group.add_command(config_group)
cli_group.add_command(run_group)
# `torusx verify-cone ...` is short for `torusx run verify-cone ...`.
for _command in run_group.commands.values():
  cli_group.add_command(_command)

if __name__ == '__main__':
  cli_group()
