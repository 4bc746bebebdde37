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
"""Base handler class."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import sys

import click
from typing import Any, Dict, List, NoReturn, Optional, Text, Tuple

from torusx import components
from torusx.components.base import base_component
from torusx.dynamics import errors
from torusx.dynamics import torus_map as torus_map_lib
from torusx.tools.cli import labels
from torusx.types import standard_component_specs
from torusx.utils import config_utils

# Component parameter that the run-level tolerance feeds.
_TOL_PARAMETER = 'tol'


class BaseHandler(object):
  """Base Handler for CLI.

  Resolves a config file and the command line flags into a component that
  is ready to run, collecting every precondition violation on the way.

  Attributes:
    flags_dict: A dictionary with flags provided in a command.
  """

  def __init__(self, flags_dict: Dict[Text, Any]):
    self.flags_dict = flags_dict

  @property
  def command(self) -> Text:
    return self.flags_dict[labels.COMMAND]

  @property
  def config_path(self) -> Text:
    return self.flags_dict[labels.CONFIG_PATH]

  @property
  def out_dir(self) -> Text:
    return self.flags_dict.get(labels.OUT_DIR) or labels.DEFAULT_OUT_DIR

  def _load_config(self) -> config_utils.ConfigFile:
    """Parses the config file; exits with the validation code on failure."""
    try:
      return config_utils.load_config(self.config_path)
    except errors.ConfigError as e:
      self._exit(labels.EXIT_VALIDATION, str(e))

  def _run_settings(self, config_file: config_utils.ConfigFile
                   ) -> standard_component_specs.RunSpec:
    """[run] section overridden by the --seed/--threads/--tol flags."""
    raw = config_file.section(config_utils.RUN_SECTION)
    for key in labels.RUN_SETTINGS:
      if self.flags_dict.get(key) is not None:
        raw[key] = self.flags_dict[key]
    return standard_component_specs.RunSpec(**raw)

  def _component_params(self, config_file: config_utils.ConfigFile,
                        component_class: type) -> Dict[Text, Any]:
    """Subcommand section overridden by the subcommand flags."""
    params = config_file.section(self.command)
    params.update(self.flags_dict.get(labels.COMMAND_PARAMS) or {})
    if _TOL_PARAMETER in component_class.SPEC_CLASS.PARAMETERS:
      if self.flags_dict.get(labels.TOL) is not None:
        params[_TOL_PARAMETER] = self.flags_dict[labels.TOL]
      elif _TOL_PARAMETER not in params:
        run_tol = config_file.section(config_utils.RUN_SECTION).get(
            _TOL_PARAMETER)
        if run_tol is not None:
          params[_TOL_PARAMETER] = run_tol
    return params

  def _build_component(
      self, config_file: config_utils.ConfigFile
  ) -> Tuple[Optional[base_component.BaseComponent],
             standard_component_specs.RunSpec,
             Optional[torus_map_lib.TorusMap], List[Text]]:
    """Resolves config and flags.

    Args:
      config_file: the parsed config file.

    Returns:
      (component, run settings, map, violations). Component and map are None
      when they could not be built; violations is empty iff the run may
      start.
    """
    component_class = components.COMPONENTS[self.command]
    run_spec = self._run_settings(config_file)
    violations = run_spec.validate()

    torus_map = None
    try:
      torus_map = config_file.torus_map()
    except errors.ValidationError as e:
      violations.append(str(e))

    component = None
    try:
      component = component_class(
          config_file.path, self.out_dir,
          **self._component_params(config_file, component_class))
    except ValueError as e:
      violations.append(str(e))
    else:
      violations.extend(component.validate(torus_map))

    # The run-level and component tol checks report the same problem.
    deduplicated = []
    for violation in violations:
      if violation not in deduplicated:
        deduplicated.append(violation)
    return component, run_spec, torus_map, deduplicated

  def _exit(self, code: int, message: Optional[Text] = None) -> NoReturn:
    if message:
      click.echo(message, err=code != labels.EXIT_OK)
    sys.exit(code)

  def _exit_with_violations(self, violations: List[Text]) -> NoReturn:
    for violation in violations:
      click.echo('{}: {}'.format(self.config_path, violation), err=True)
    self._exit(labels.EXIT_VALIDATION)
