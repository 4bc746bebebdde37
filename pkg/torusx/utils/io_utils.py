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
"""Utility functions for artifact I/O."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import csv
import hashlib
import io
import os

import numpy as np
from typing import Any, Iterable, List, Optional, Sequence, Text

from torusx.utils import json_utils

# Prefix of the provenance line that heads every CSV artifact.
PROVENANCE_PREFIX = '# provenance='


def write_string_file(file_name: Text, string_value: Text) -> None:
  """Writes a string to file, creating parent directories."""
  dir_name = os.path.dirname(file_name)
  if dir_name:
    os.makedirs(dir_name, exist_ok=True)
  with open(file_name, 'w', newline='\n', encoding='utf-8') as f:
    f.write(string_value)


def read_string_file(file_name: Text) -> Text:
  with open(file_name, 'r', encoding='utf-8') as f:
    return f.read()


def format_value(value: Any) -> Text:
  """Formats a CSV cell; floats use the shortest round-trip repr."""
  if isinstance(value, (bool, np.bool_)):
    return 'true' if value else 'false'
  if isinstance(value, (int, np.integer)):
    return str(int(value))
  if isinstance(value, (float, np.floating)):
    return repr(float(value))
  if value is None:
    return ''
  return str(value)


def write_csv_file(file_name: Text,
                   header: Sequence[Text],
                   rows: Iterable[Sequence[Any]],
                   provenance: Optional[Text] = None) -> None:
  """Writes rows as CSV with a provenance line and a header row."""
  buf = io.StringIO()
  if provenance is not None:
    buf.write('{}{}\n'.format(PROVENANCE_PREFIX, provenance))
  writer = csv.writer(buf, lineterminator='\n')
  writer.writerow(header)
  for row in rows:
    if len(row) != len(header):
      raise ValueError('Row {} does not match header {}'.format(row, header))
    writer.writerow([format_value(v) for v in row])
  write_string_file(file_name, buf.getvalue())


def load_csv_rows(file_name: Text) -> List[List[Text]]:
  """Parses a CSV artifact, skipping the provenance line."""
  with open(file_name, 'r', encoding='utf-8') as f:
    lines = [l for l in f.read().split('\n') if l]
  if lines and lines[0].startswith(PROVENANCE_PREFIX):
    lines = lines[1:]
  return [row for row in csv.reader(lines)]


def write_json_file(file_name: Text,
                    payload: Any,
                    provenance: Optional[Text] = None) -> None:
  """Writes payload as canonical JSON, adding the provenance key if given."""
  if provenance is not None:
    payload = dict(json_utils.canonical_dict(payload))
    payload['provenance'] = provenance
  write_string_file(file_name, json_utils.canonical_dumps(payload))


def generate_fingerprint(file_name: Text) -> Text:
  """Generates a content fingerprint (sha256 hex digest) of a file."""
  digest = hashlib.sha256()
  with open(file_name, 'rb') as f:
    for chunk in iter(lambda: f.read(1 << 16), b''):
      digest.update(chunk)
  return digest.hexdigest()


def string_fingerprint(value: Text) -> Text:
  return hashlib.sha256(value.encode('utf-8')).hexdigest()
