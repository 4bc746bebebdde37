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
"""Error types raised by torusx.

Validation errors describe inputs that violate a precondition and map to CLI
exit code 2. Numerical errors describe computations that could not reach the
requested accuracy and map to exit code 3, as do internal errors.
"""


class TorusxError(Exception):
  """Base class of all torusx errors."""


class ValidationError(TorusxError, ValueError):
  """An input violates a documented precondition."""


class NumericalError(TorusxError, RuntimeError):
  """A numerical procedure failed to certify its result."""


class ConfigError(ValidationError):
  """A map or experiment config file could not be parsed.

  Attributes:
    path: the config file, if known.
    line: 1-based line number of the offending line, if any.
  """

  def __init__(self, message, path=None, line=None):
    location = path or ''
    if line is not None:
      location = '{}:{}'.format(location, line)
    super(ConfigError, self).__init__(
        '{}: {}'.format(location, message) if location else message)
    self.path = path
    self.line = line


class NotEMError(ValidationError):
  """The integer matrix does not have eigenvalues {1, m} with |m| > 1."""


class ZeroVectorError(ValidationError):
  pass


class NotPrimitiveError(ValidationError):
  pass


class NotInvariantCircleError(ValidationError):
  """The vertical circle is not periodic under the skew base map."""


class NotSaddleError(ValidationError):
  pass


class NotRepellerError(ValidationError):
  pass


class NotPeriodicError(ValidationError):
  """The given points do not close up into a periodic orbit."""


class EmptySetError(ValidationError):
  pass


class TolNotAchievableError(NumericalError):
  """The series depth needed for the tolerance exceeds the configured cap."""


class BracketFailureError(NumericalError):
  """Bisection could not find a sign change of the residual."""


class NoConvergenceError(NumericalError):
  pass


class SingularJacobianError(NumericalError):
  """DF is (numerically) singular somewhere along an orbit."""


class InternalError(TorusxError, RuntimeError):
  """An exact invariant of an integer computation did not hold."""
