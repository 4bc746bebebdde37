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
"""Parser for torusx map/config files.

A config file is line oriented:

  # reference family F_t(x, y) = (3x, x + y + t + 0.05 sin 2 pi y)
  [matrix]
  row=3 0
  row=1 1

  [perturbation]
  t=0.02
  freq=(0,1) coeff=(0,0.05) phase=0

  [find-periodic]
  period=2

`[matrix]` and `[perturbation]` define the map; every other section holds
raw `key=value` parameters for the subcommand of the same name (`[run]`
for run-level settings). Values of those sections are kept as strings and
converted by the owning component spec.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import os
import re

from typing import Any, Dict, List, Optional, Text, Tuple

from torusx.dynamics import errors
from torusx.dynamics import torus_map as torus_map_lib
from torusx.utils import io_utils

MATRIX_SECTION = 'matrix'
PERTURBATION_SECTION = 'perturbation'
RUN_SECTION = 'run'

_SECTION_RE = re.compile(r'^\[([A-Za-z][A-Za-z0-9_\-]*)\]$')
_KEY_RE = re.compile(r'^([A-Za-z][A-Za-z0-9_\-]*)\s*=\s*(.*)$')
_TERM_RE = re.compile(r'^freq\s*=\s*(\([^)]*\))\s+coeff\s*=\s*(\([^)]*\))'
                      r'(?:\s+phase\s*=\s*(\S+))?$')
_PAIR_RE = re.compile(r'^\(?\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)?$')


def parse_pair(value: Text, kind=float) -> Tuple[Any, Any]:
  """Parses '(a, b)' or 'a,b' into a pair of `kind`.

  Raises:
    ValueError: if value is not a pair of numbers of that kind.
  """
  match = _PAIR_RE.match(value.strip())
  if not match:
    raise ValueError('expected a pair (a, b), got {!r}'.format(value))
  return kind(match.group(1)), kind(match.group(2))


def _parse_int(value: Text) -> int:
  number = float(value)
  if number != int(number):
    raise ValueError('expected an integer, got {!r}'.format(value))
  return int(number)


class ConfigFile(object):
  """A parsed config file.

  Attributes:
    path: file the config was read from.
    matrix: the integer matrix as a list of two rows.
    perturbation: the Fourier perturbation G.
    sections: section name -> {key: raw value} for all other sections.
  """

  def __init__(self, path: Text, matrix: List[List[int]],
               perturbation: torus_map_lib.FourierPerturbation,
               sections: Dict[Text, Dict[Text, Text]]):
    self.path = path
    self.matrix = matrix
    self.perturbation = perturbation
    self.sections = sections

  def torus_map(self) -> torus_map_lib.TorusMap:
    """The map defined by the config.

    Raises:
      ValidationError: if the matrix is singular.
    """
    return torus_map_lib.TorusMap(self.matrix, self.perturbation)

  def section(self, name: Text) -> Dict[Text, Text]:
    return dict(self.sections.get(name, {}))


class _Parser(object):
  """Single-use line parser; raises ConfigError with path and line."""

  def __init__(self, path: Text):
    self._path = path
    self._section = None
    self._rows = []
    self._terms = []
    self._t = 0.0
    self._shift = (0.0, 1.0)
    self._seen_perturbation_keys = set()
    self._sections = collections.OrderedDict()

  def _error(self, message: Text, line: Optional[int] = None):
    return errors.ConfigError(message, path=self._path, line=line)

  def parse(self, text: Text) -> ConfigFile:
    for lineno, raw in enumerate(text.splitlines(), start=1):
      line = raw.split('#', 1)[0].strip()
      if not line:
        continue
      header = _SECTION_RE.match(line)
      if header:
        self._open_section(header.group(1), lineno)
      elif self._section is None:
        raise self._error('entry outside of a section: {!r}'.format(line),
                          lineno)
      elif self._section == MATRIX_SECTION:
        self._matrix_line(line, lineno)
      elif self._section == PERTURBATION_SECTION:
        self._perturbation_line(line, lineno)
      else:
        self._parameter_line(line, lineno)
    if MATRIX_SECTION not in self._sections:
      raise self._error('missing [matrix] section')
    if len(self._rows) != 2:
      raise self._error('[matrix] needs exactly 2 rows, got {}'.format(
          len(self._rows)))
    try:
      perturbation = torus_map_lib.FourierPerturbation(
          self._terms, t=self._t, shift=self._shift)
    except errors.ValidationError as e:
      raise self._error(str(e))
    sections = collections.OrderedDict(
        (name, values) for name, values in self._sections.items()
        if name not in (MATRIX_SECTION, PERTURBATION_SECTION))
    return ConfigFile(self._path, self._rows, perturbation, sections)

  def _open_section(self, name: Text, lineno: int):
    if name in self._sections:
      raise self._error('duplicate section [{}]'.format(name), lineno)
    self._sections[name] = collections.OrderedDict()
    self._section = name

  def _key_value(self, line: Text, lineno: int) -> Tuple[Text, Text]:
    match = _KEY_RE.match(line)
    if not match:
      raise self._error('expected key=value, got {!r}'.format(line), lineno)
    return match.group(1), match.group(2).strip()

  def _matrix_line(self, line: Text, lineno: int):
    key, value = self._key_value(line, lineno)
    if key != 'row':
      raise self._error('[matrix] only takes row=<int> <int>, got {!r}'.format(
          key), lineno)
    if len(self._rows) == 2:
      raise self._error('[matrix] has more than 2 rows', lineno)
    try:
      row = [_parse_int(v) for v in value.replace(',', ' ').split()]
    except ValueError as e:
      raise self._error('bad matrix row {!r}: {}'.format(value, e), lineno)
    if len(row) != 2:
      raise self._error('matrix row needs 2 entries, got {!r}'.format(value),
                        lineno)
    self._rows.append(row)

  def _perturbation_line(self, line: Text, lineno: int):
    term = _TERM_RE.match(line)
    if term:
      try:
        freq = parse_pair(term.group(1), _parse_int)
        coeff = parse_pair(term.group(2))
        phase = float(term.group(3)) if term.group(3) is not None else 0.0
        self._terms.append(torus_map_lib.FourierTerm(freq, coeff, phase))
      except (ValueError, errors.ValidationError) as e:
        raise self._error('bad Fourier term {!r}: {}'.format(line, e), lineno)
      return
    key, value = self._key_value(line, lineno)
    if key in self._seen_perturbation_keys:
      raise self._error('duplicate key {!r}'.format(key), lineno)
    if key not in ('t', 'shift'):
      raise self._error(
          'unknown [perturbation] entry {!r}; expected t=, shift= or '
          'freq=(k1,k2) coeff=(c1,c2) phase=p'.format(key), lineno)
    self._seen_perturbation_keys.add(key)
    try:
      if key == 't':
        self._t = float(value)
      else:
        self._shift = parse_pair(value)
    except ValueError as e:
      raise self._error('bad value for {}: {}'.format(key, e), lineno)

  def _parameter_line(self, line: Text, lineno: int):
    key, value = self._key_value(line, lineno)
    values = self._sections[self._section]
    if key in values:
      raise self._error('duplicate key {!r} in [{}]'.format(
          key, self._section), lineno)
    values[key] = value


def parse_config(text: Text, path: Text = '<string>') -> ConfigFile:
  """Parses config text.

  Raises:
    ConfigError: on malformed input, naming path and line.
  """
  return _Parser(path).parse(text)


def load_config(path: Text) -> ConfigFile:
  """Reads and parses a config file.

  Raises:
    ConfigError: if the file does not exist or is malformed.
  """
  if not os.path.isfile(path):
    raise errors.ConfigError('config file not found: {}'.format(path),
                             path=path)
  return parse_config(io_utils.read_string_file(path), path)


def _format_number(value: float) -> Text:
  return repr(float(value))


def format_config(torus_map: torus_map_lib.TorusMap,
                  sections: Optional[Dict[Text, Dict[Text, Any]]] = None
                 ) -> Text:
  """Renders a map and parameter sections in the config file format."""
  lines = ['[{}]'.format(MATRIX_SECTION)]
  for row in torus_map.matrix.tolist():
    lines.append('row={} {}'.format(*row))
  perturbation = torus_map.perturbation
  lines.extend(['', '[{}]'.format(PERTURBATION_SECTION),
                't={}'.format(_format_number(perturbation.t)),
                'shift=({},{})'.format(*map(_format_number,
                                            perturbation.shift))])
  for term in perturbation.terms:
    lines.append('freq=({},{}) coeff=({},{}) phase={}'.format(
        term.frequency[0], term.frequency[1],
        _format_number(term.coefficient[0]),
        _format_number(term.coefficient[1]), _format_number(term.phase)))
  for name, values in (sections or {}).items():
    lines.extend(['', '[{}]'.format(name)])
    lines.extend('{}={}'.format(k, _format_value(v))
                 for k, v in values.items())
  return '\n'.join(lines) + '\n'


def _format_value(value: Any) -> Text:
  if isinstance(value, (tuple, list)):
    return '({})'.format(','.join(str(v) for v in value))
  return str(value)


def write_config(file_name: Text, torus_map: torus_map_lib.TorusMap,
                 sections: Optional[Dict[Text, Dict[Text, Any]]] = None
                ) -> None:
  io_utils.write_string_file(file_name, format_config(torus_map, sections))
