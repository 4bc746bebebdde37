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
"""ComponentSpec for defining inputs/outputs/parameters of torusx components."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import fractions
import inspect
import itertools

from typing import Any, Callable, Dict, List, Optional, Text, Type

from torusx.types.artifact import Artifact
from torusx.utils import config_utils
from torusx.utils import json_utils

_TRUE = ('true', 'yes', '1')
_FALSE = ('false', 'no', '0')
_TYPE_DESCRIPTIONS = {
    int: 'an integer',
    float: 'a real number',
    str: 'a string',
    bool: 'a boolean',
    tuple: 'a pair (a, b)',
    fractions.Fraction: 'a rational p/q',
}


class _ComponentParameter(object):
  """An abstract parameter that forms a part of a ComponentSpec.

  Properties:
    optional: whether the given parameter is optional.
  """
  pass


class ExecutionParameter(_ComponentParameter):
  """An execution parameter in a ComponentSpec.

  Values given as strings (config sections, CLI flags) are converted to
  `type`; the predicate then decides validity, and a failing value is
  reported as "<name> must be <requirement>".

  class MySpec(ComponentSpec):
    PARAMETERS = {
        'tol': ExecutionParameter(type=float, default=1e-10,
                                  predicate=lambda v: v > 0,
                                  requirement='> 0'),
    }
  """

  def __init__(self,
               type=None,  # pylint: disable=redefined-builtin
               default: Any = None,
               optional: bool = False,
               predicate: Optional[Callable[[Any], bool]] = None,
               requirement: Optional[Text] = None):
    self.type = type
    self.default = default
    self.optional = optional
    self.predicate = predicate
    self.requirement = requirement

  def __repr__(self):
    return 'ExecutionParameter(type: %s, default: %r, optional: %s)' % (
        self.type, self.default, self.optional)

  def coerce(self, value: Any) -> Any:
    """Converts value to the parameter type.

    Raises:
      ValueError: if value cannot represent the type.
    """
    if value is None or self.type is None:
      return value
    if self.type is bool:
      if isinstance(value, bool):
        return value
      text = str(value).strip().lower()
      if text in _TRUE:
        return True
      if text in _FALSE:
        return False
      raise ValueError('not a boolean: {!r}'.format(value))
    if self.type is tuple:
      if isinstance(value, str):
        return config_utils.parse_pair(value)
      pair = tuple(float(v) for v in value)
      if len(pair) != 2:
        raise ValueError('not a pair: {!r}'.format(value))
      return pair
    if self.type is int:
      number = float(value) if isinstance(value, str) else value
      if isinstance(number, bool) or int(number) != number:
        raise ValueError('not an integer: {!r}'.format(value))
      return int(number)
    if self.type is float:
      if isinstance(value, bool):
        raise ValueError('not a real number: {!r}'.format(value))
      return float(value)
    if self.type is fractions.Fraction:
      return fractions.Fraction(str(value).strip())
    if self.type is str:
      return str(value).strip()
    if not isinstance(value, self.type):
      raise ValueError('expected {}, got {!r}'.format(self.type, value))
    return value

  def violation(self, arg_name: Text, value: Any) -> Optional[Text]:
    """Returns "<name> must be ..." if value is invalid, else None."""
    if value is None:
      if self.optional:
        return None
      return '{} must be set'.format(arg_name)
    try:
      value = self.coerce(value)
    except (ValueError, TypeError, ZeroDivisionError):
      return '{} must be {}'.format(
          arg_name, _TYPE_DESCRIPTIONS.get(self.type, str(self.type)))
    if self.predicate is not None and not self.predicate(value):
      return '{} must be {}'.format(arg_name, self.requirement or 'valid')
    return None


class ChannelParameter(_ComponentParameter):
  """An input or output of a component: a list of artifacts of one type."""

  def __init__(
      self,
      type: Type[Artifact] = None,  # pylint: disable=redefined-builtin
      optional: bool = False):
    if not (inspect.isclass(type) and issubclass(type, Artifact)):
      raise ValueError(
          'Argument "type" of ChannelParameter must be a subclass of '
          'torusx.types.Artifact.')
    self.type = type
    self.type_name = type.TYPE_NAME
    self.optional = optional

  def __repr__(self):
    return 'ChannelParameter(type_name: %s)' % (self.type_name,)

  def type_check(self, arg_name: Text, value: List[Artifact]):
    if not isinstance(value, list) or any(
        not isinstance(a, Artifact) or a.type_name != self.type_name
        for a in value):
      raise TypeError(
          'Argument %s should be a list of artifacts of type_name %r (got %s).'
          % (arg_name, self.type_name, value))


class ComponentSpec(json_utils.Jsonable):
  """A specification of the inputs, outputs and parameters for a component.

  Subclasses override PARAMETERS, INPUTS and OUTPUTS:

  class ConeVerifierSpec(ComponentSpec):
    PARAMETERS = {
        'grid_n': ExecutionParameter(type=int, default=200, ...),
    }
    INPUTS = {
        'map_config': ChannelParameter(type=standard_artifacts.MapConfig),
    }
    OUTPUTS = {
        'report': ChannelParameter(type=standard_artifacts.JsonReport),
    }

  Execution parameters may be passed as strings; missing ones take their
  defaults. Construction never fails on a bad parameter value: `validate()`
  lists every violation so that a whole config can be checked at once.

  Attributes:
    exec_properties: parameter name -> converted value.
    inputs: input key -> list of artifacts.
    outputs: output key -> list of artifacts.
  """

  PARAMETERS = {}
  INPUTS = {}
  OUTPUTS = {}

  def __init__(self, **kwargs):
    self._raw_args = kwargs
    self._validate_spec()
    self._parse_parameters()

  def _validate_spec(self):
    """Check that the spec class is well formed."""
    seen_arg_names = set()
    for arg_name, arg in itertools.chain(self.PARAMETERS.items(),
                                         self.INPUTS.items(),
                                         self.OUTPUTS.items()):
      if not isinstance(arg, _ComponentParameter):
        raise ValueError(
            ('The ComponentSpec subclass %s expects that the values of its '
             'PARAMETERS, INPUTS, and OUTPUTS dicts are _ComponentParameter '
             'objects; got %s (for argument %s) instead.') %
            (self.__class__, arg, arg_name))
      if arg_name in seen_arg_names:
        raise ValueError(
            ('The ComponentSpec subclass %s has a duplicate argument with '
             'name %s.') % (self.__class__, arg_name))
      seen_arg_names.add(arg_name)
    for arg in self.PARAMETERS.values():
      if not isinstance(arg, ExecutionParameter):
        raise TypeError(
            ('PARAMETERS dict expects values of type ExecutionParameter, '
             'got {}.').format(arg))

  def _parse_parameters(self):
    self._violations = []
    self.exec_properties = {}
    self.inputs = {}
    self.outputs = {}
    known = set(itertools.chain(self.PARAMETERS, self.INPUTS, self.OUTPUTS))
    for arg_name in sorted(set(self._raw_args) - known):
      self._violations.append('{} is not a parameter of {}'.format(
          arg_name, self.__class__.__name__))

    for arg_name, arg in sorted(self.PARAMETERS.items()):
      value = self._raw_args.get(arg_name)
      if value is None:
        value = arg.default
      violation = arg.violation(arg_name, value)
      if violation:
        self._violations.append(violation)
        self.exec_properties[arg_name] = value
      else:
        self.exec_properties[arg_name] = arg.coerce(value)

    for channels, target in ((self.INPUTS, self.inputs),
                             (self.OUTPUTS, self.outputs)):
      for arg_name, arg in channels.items():
        value = self._raw_args.get(arg_name)
        if value is None:
          if not arg.optional:
            raise ValueError('Missing argument %r to %s.' %
                             (arg_name, self.__class__))
          continue
        arg.type_check(arg_name, value)
        target[arg_name] = value

    if not self._violations:
      self._violations.extend(self._cross_check(self.exec_properties))

  def _cross_check(self, exec_properties: Dict[Text, Any]) -> List[Text]:
    """Violations that involve more than one parameter."""
    del exec_properties
    return []

  def validate(self) -> List[Text]:
    """All violations; empty iff the parameters satisfy their preconditions."""
    return list(self._violations)

  def to_json_dict(self) -> Dict[Text, Any]:
    return {
        'inputs': self.inputs,
        'outputs': self.outputs,
        'exec_properties': self.exec_properties,
    }
