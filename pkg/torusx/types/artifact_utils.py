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
"""Helpers for the channel dicts passed to executors.

A channel dict maps an input or output key to the list of artifacts on that
channel. Every torusx channel holds exactly one artifact.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import os

from typing import Dict, List, Text

from torusx.types.artifact import Artifact
from torusx.types.artifact import ArtifactState


def jsonify_artifact_dict(artifact_dict: Dict[Text, List[Artifact]]) -> Text:
  """Channel dict as sorted JSON, for logs."""
  return json.dumps(
      {key: [a.to_json_dict() for a in artifacts]
       for key, artifacts in artifact_dict.items()},
      sort_keys=True)


def get_single_instance(artifact_list: List[Artifact]) -> Artifact:
  """The artifact of a single-artifact channel.

  Raises:
    ValueError: If length of artifact_list is not one.
  """
  if len(artifact_list) != 1:
    raise ValueError('expected list length of one but got {}'.format(
        len(artifact_list)))
  return artifact_list[0]


def get_single_uri(artifact_list: List[Artifact]) -> Text:
  return get_single_instance(artifact_list).uri


def all_artifacts(artifact_dict: Dict[Text, List[Artifact]]) -> List[Artifact]:
  """Artifacts of a dict in sorted key order."""
  return [a for key in sorted(artifact_dict) for a in artifact_dict[key]]


def published_checksums(
    artifact_dict: Dict[Text, List[Artifact]]) -> Dict[Text, Text]:
  """File name -> sha256 of every artifact of an output dict.

  Raises:
    RuntimeError: if an executor left an output unwritten.
  """
  checksums = {}
  for output in all_artifacts(artifact_dict):
    if output.state != ArtifactState.PUBLISHED:
      raise RuntimeError('{} was not written'.format(output.uri))
    checksums[os.path.basename(output.uri)] = output.checksum
  return checksums
