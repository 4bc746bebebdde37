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
"""Handler for the config subcommands."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import click

from torusx.tools.cli import labels
from torusx.tools.cli.handler import base_handler


class ConfigHandler(base_handler.BaseHandler):
  """Checks a config file without running anything."""

  def validate(self) -> None:
    """Prints every violation; exits 0 iff there are none."""
    config_file = self._load_config()
    _, _, _, violations = self._build_component(config_file)
    if violations:
      self._exit_with_violations(violations)
    click.echo('{}: valid for {}'.format(self.config_path, self.command))
    self._exit(labels.EXIT_OK)
