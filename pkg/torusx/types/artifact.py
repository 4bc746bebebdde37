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
"""torusx artifact type definition."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from typing import Any, Dict, Optional, Text

from torusx.utils import json_utils


class ArtifactState(object):
  """Enumeration of possible Artifact states."""

  # The producing executor has not finished.
  PENDING = 'pending'
  # The file at uri is complete and checksummed.
  PUBLISHED = 'published'
  # The executor failed before writing the file.
  MISSING = 'missing'


class Artifact(json_utils.Jsonable):
  """A file produced or consumed by a torusx executor.

  A subclass overrides TYPE_NAME; the type name then need not be passed to
  the constructor.

  Attributes:
    type_name: artifact type.
    uri: path of the file.
    name: output key the artifact is bound to.
    state: one of ArtifactState.
    checksum: sha256 of the published file.
  """

  TYPE_NAME = None

  def __init__(self,
               type_name: Optional[Text] = None,
               uri: Text = '',
               name: Text = ''):
    if self.__class__ != Artifact:
      if type_name:
        raise ValueError(
            ('The "type_name" field must not be passed for Artifact subclass '
             '%s.') % self.__class__)
      type_name = self.__class__.TYPE_NAME
      if not (type_name and isinstance(type_name, str)):
        raise ValueError(
            ('The Artifact subclass %s must override the TYPE_NAME attribute '
             'with a string type name identifier (got %r instead).') %
            (self.__class__, type_name))
    if not type_name:
      raise ValueError(
          'The "type_name" field must be passed to specify a type for this '
          'Artifact.')
    self.type_name = type_name
    self.uri = uri
    self.name = name
    self.state = ArtifactState.PENDING
    self.checksum = ''

  def __repr__(self):
    return 'Artifact(type_name: {}, uri: {}, name: {}, state: {})'.format(
        self.type_name, self.uri, self.name, self.state)

  def to_json_dict(self) -> Dict[Text, Any]:
    return {
        'type_name': self.type_name,
        'uri': self.uri,
        'name': self.name,
        'state': self.state,
        'checksum': self.checksum,
    }

  @classmethod
  def from_json_dict(cls, dict_data: Dict[Text, Any]) -> 'Artifact':
    result = Artifact(dict_data['type_name'], dict_data.get('uri', ''),
                      dict_data.get('name', ''))
    result.state = dict_data.get('state', ArtifactState.PENDING)
    result.checksum = dict_data.get('checksum', '')
    return result
