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
"""Utilities to dump and load Jsonable objects to/from JSON.

Two encodings are provided. `dumps`/`loads` keep the class information of
Jsonable objects so that they can be restored. `canonical_dumps` writes the
plain data form used for output artifacts: sorted keys, fixed indentation,
numpy values converted and non-finite floats written as null, so that equal
results always produce identical bytes.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import abc
import fractions
import importlib
import inspect
import json
import math

import numpy as np
from typing import Any, Dict, Text

_TORUSX_OBJECT_TYPE_KEY = '__torusx_object_type__'
_MODULE_KEY = '__module__'
_CLASS_KEY = '__class__'


class _ObjectType(object):
  """Values of the type tag; both kinds also carry __module__ and __class__."""
  JSONABLE = 'jsonable'
  CLASS = 'class'


class Jsonable(abc.ABC):
  """Base class for serializing and deserializing objects to/from JSON.

  The default implementation assumes that the subclass can be restored by
  updating `self.__dict__` without invoking `self.__init__`. Subclasses
  holding numpy arrays or derived state override `to_json_dict` and
  `from_json_dict`.
  """

  def to_json_dict(self) -> Dict[Text, Any]:
    """Convert from an object to a JSON serializable dictionary."""
    return self.__dict__

  @classmethod
  def from_json_dict(cls, dict_data: Dict[Text, Any]) -> Any:
    """Convert from dictionary data to an object."""
    instance = cls.__new__(cls)
    instance.__dict__ = dict_data
    return instance


def _plain(obj: Any, tagged: bool) -> Any:
  """Recursively converts obj into JSON-native values."""
  if isinstance(obj, Jsonable):
    dict_data = {}
    if tagged:
      dict_data.update({
          _TORUSX_OBJECT_TYPE_KEY: _ObjectType.JSONABLE,
          _MODULE_KEY: obj.__class__.__module__,
          _CLASS_KEY: obj.__class__.__name__,
      })
    for k, v in obj.to_json_dict().items():
      dict_data[k] = _plain(v, tagged)
    return dict_data
  if inspect.isclass(obj):
    return {
        _TORUSX_OBJECT_TYPE_KEY: _ObjectType.CLASS,
        _MODULE_KEY: obj.__module__,
        _CLASS_KEY: obj.__name__,
    }
  if isinstance(obj, dict):
    return {str(k): _plain(v, tagged) for k, v in obj.items()}
  if isinstance(obj, (list, tuple)):
    return [_plain(v, tagged) for v in obj]
  if isinstance(obj, np.ndarray):
    return _plain(obj.tolist(), tagged)
  if isinstance(obj, (bool, np.bool_)):
    return bool(obj)
  if isinstance(obj, (int, np.integer)):
    return int(obj)
  if isinstance(obj, fractions.Fraction):
    return '{}/{}'.format(obj.numerator, obj.denominator)
  if isinstance(obj, (complex, np.complexfloating)):
    return [_plain(obj.real, tagged), _plain(obj.imag, tagged)]
  if isinstance(obj, (float, np.floating)):
    value = float(obj)
    return value if math.isfinite(value) else None
  return obj


def _import_class(dict_data: Dict[Text, Any]) -> type:
  module = importlib.import_module(dict_data.pop(_MODULE_KEY))
  return getattr(module, dict_data.pop(_CLASS_KEY))


def _restore(dict_data: Dict[Text, Any]) -> Any:
  """object_hook reversing the tags written by dumps."""
  object_type = dict_data.pop(_TORUSX_OBJECT_TYPE_KEY, None)
  if object_type is None:
    return dict_data
  cls = _import_class(dict_data)
  if object_type == _ObjectType.CLASS:
    return cls
  if not (inspect.isclass(cls) and issubclass(cls, Jsonable)):
    raise ValueError('Class {} must be a subclass of Jsonable'.format(cls))
  return cls.from_json_dict(dict_data)


def dumps(obj: Any) -> Text:
  """Dumps an object to JSON with Jsonable encoding."""
  return json.dumps(_plain(obj, tagged=True), sort_keys=True)


def loads(s: Text) -> Any:
  """Loads a JSON into an object with Jsonable decoding."""
  return json.loads(s, object_hook=_restore)


def canonical_dumps(obj: Any) -> Text:
  """Dumps an object to canonical plain JSON, newline terminated."""
  return json.dumps(
      _plain(obj, tagged=False),
      sort_keys=True,
      indent=2,
      separators=(',', ': '),
      allow_nan=False) + '\n'


def canonical_dict(obj: Any) -> Any:
  """Returns the plain JSON-native form of obj without class tags."""
  return _plain(obj, tagged=False)
