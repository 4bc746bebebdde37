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
"""Torus maps F(z) = [Mz + G(z)] mod 1 with trigonometric perturbations.

Points are numpy arrays whose last axis holds the two coordinates, so every
operation here works on a single point of shape (2,) as well as on stacks of
points of shape (..., 2). Torus points live in [0, 1)^2; lift points are
unreduced.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np
from typing import Any, Dict, Iterable, Optional, Sequence, Text, Tuple

from torusx.dynamics import errors
from torusx.utils import json_utils

TWO_PI = 2.0 * np.pi


def wrap(coords: Any) -> np.ndarray:
  """Reduces coordinates mod 1 into [0, 1) with a floor-based wrap."""
  c = np.asarray(coords, dtype=float)
  r = c - np.floor(c)
  # -1e-17 - floor(-1e-17) rounds to 1.0.
  return np.where(r >= 1.0, 0.0, r)


def wrap_signed(delta: Any) -> np.ndarray:
  """Reduces displacements mod 1 into [-1/2, 1/2]."""
  d = np.asarray(delta, dtype=float)
  return d - np.round(d)


def torus_distance(p: Any, q: Any) -> np.ndarray:
  """Euclidean distance on the unit torus (min over integer shifts)."""
  diff = wrap_signed(np.asarray(p, dtype=float) - np.asarray(q, dtype=float))
  return np.linalg.norm(diff, axis=-1)


def circle_distance(a: Any, b: Any) -> np.ndarray:
  return np.abs(wrap_signed(np.asarray(a, dtype=float) - b))


class FourierTerm(json_utils.Jsonable):
  """One term coeff * sin(2 pi freq . z + phase) of a perturbation."""

  def __init__(self,
               frequency: Sequence[int],
               coefficient: Sequence[float],
               phase: float = 0.0):
    if len(frequency) != 2 or len(coefficient) != 2:
      raise errors.ValidationError(
          'Fourier terms must be two-dimensional, got freq={} coeff={}'.format(
              frequency, coefficient))
    if any(int(k) != k for k in frequency):
      raise errors.ValidationError(
          'Fourier frequencies must be integers, got {}'.format(frequency))
    self.frequency = tuple(int(k) for k in frequency)
    self.coefficient = tuple(float(c) for c in coefficient)
    self.phase = float(phase)

  def __repr__(self):
    return 'FourierTerm(freq={}, coeff={}, phase={})'.format(
        self.frequency, self.coefficient, self.phase)

  def __eq__(self, other):
    return (isinstance(other, FourierTerm) and
            self.frequency == other.frequency and
            self.coefficient == other.coefficient and
            self.phase == other.phase)

  def __hash__(self):
    return hash((self.frequency, self.coefficient, self.phase))

  @classmethod
  def from_json_dict(cls, dict_data: Dict[Text, Any]) -> 'FourierTerm':
    return cls(dict_data['frequency'], dict_data['coefficient'],
               dict_data['phase'])


class FourierPerturbation(json_utils.Jsonable):
  """G(z) = t * shift + sum_j c_j sin(2 pi k_j . z + phase_j).

  G is Z^2-periodic because every frequency is an integer vector. The
  constant part t * shift is the additive family parameter.
  """

  def __init__(self,
               terms: Iterable[FourierTerm] = (),
               t: float = 0.0,
               shift: Sequence[float] = (0.0, 1.0)):
    self.terms = tuple(terms)
    self.t = float(t)
    self.shift = tuple(float(s) for s in shift)
    if len(self.shift) != 2:
      raise errors.ValidationError('shift must have two entries')
    self._freqs = np.array([term.frequency for term in self.terms],
                           dtype=float).reshape(-1, 2)
    self._coeffs = np.array([term.coefficient for term in self.terms],
                            dtype=float).reshape(-1, 2)
    self._phases = np.array([term.phase for term in self.terms], dtype=float)

  def _arguments(self, z: np.ndarray) -> np.ndarray:
    return TWO_PI * (z @ self._freqs.T) + self._phases

  def __call__(self, z: Any) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    out = np.broadcast_to(self.t * np.asarray(self.shift), z.shape).copy()
    if self.terms:
      out += np.sin(self._arguments(z)) @ self._coeffs
    return out

  def derivative(self, z: Any) -> np.ndarray:
    """Analytic DG(z), shape (..., 2, 2)."""
    z = np.asarray(z, dtype=float)
    if not self.terms:
      return np.zeros(z.shape[:-1] + (2, 2))
    cos = np.cos(self._arguments(z))
    return np.einsum('...t,ti,tj->...ij', cos, self._coeffs,
                     TWO_PI * self._freqs)

  @property
  def sup_norm(self) -> float:
    """Triangle-inequality bound on sup |G| (Euclidean norm)."""
    return float(
        np.sum(np.linalg.norm(self._coeffs, axis=1)) +
        abs(self.t) * np.linalg.norm(self.shift))

  @property
  def derivative_norm(self) -> float:
    """Bound on sup ||DG|| (operator 2-norm): sum of 2 pi |c_j| |k_j|."""
    return float(
        np.sum(TWO_PI * np.linalg.norm(self._coeffs, axis=1) *
               np.linalg.norm(self._freqs, axis=1)))

  @property
  def is_zero(self) -> bool:
    return self.sup_norm == 0.0

  def first_component_vanishes(self) -> bool:
    """True when G_1 is identically zero."""
    return (self.t * self.shift[0] == 0.0 and
            all(term.coefficient[0] == 0.0 for term in self.terms))

  def first_component_independent_of_y(self) -> bool:
    return all(term.coefficient[0] == 0.0 or term.frequency[1] == 0
               for term in self.terms)

  def with_t(self, t: float) -> 'FourierPerturbation':
    return FourierPerturbation(self.terms, t=t, shift=self.shift)

  def to_json_dict(self) -> Dict[Text, Any]:
    return {'terms': list(self.terms), 't': self.t, 'shift': list(self.shift)}

  @classmethod
  def from_json_dict(cls, dict_data: Dict[Text, Any]) -> 'FourierPerturbation':
    terms = [
        t if isinstance(t, FourierTerm) else FourierTerm.from_json_dict(t)
        for t in dict_data['terms']
    ]
    return cls(terms, t=dict_data['t'], shift=dict_data['shift'])


class TorusMap(json_utils.Jsonable):
  """F(z) = [Mz + G(z)] mod 1 on the two-torus.

  Instances are immutable; parameter families are produced with `with_t`.
  """

  dimension = 2

  def __init__(self,
               matrix: Any,
               perturbation: Optional[FourierPerturbation] = None):
    m = np.asarray(matrix)
    if m.shape != (2, 2):
      raise errors.ValidationError(
          'matrix must be 2x2, got shape {}'.format(m.shape))
    if not np.all(np.equal(np.mod(m, 1), 0)):
      raise errors.ValidationError(
          'matrix entries must be integers, got {}'.format(m.tolist()))
    m = m.astype(np.int64)
    det = int(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    if det == 0:
      raise errors.ValidationError(
          'matrix {} is singular'.format(m.tolist()))
    m.setflags(write=False)
    self._matrix = m
    self._fmatrix = m.astype(float)
    self._det = det
    self._perturbation = perturbation or FourierPerturbation()

  def __repr__(self):
    return 'TorusMap(matrix={}, perturbation={})'.format(
        self._matrix.tolist(), self._perturbation.to_json_dict())

  @property
  def matrix(self) -> np.ndarray:
    return self._matrix

  @property
  def perturbation(self) -> FourierPerturbation:
    return self._perturbation

  @property
  def determinant(self) -> int:
    return self._det

  @property
  def t(self) -> float:
    return self._perturbation.t

  def with_t(self, t: float) -> 'TorusMap':
    return TorusMap(self._matrix, self._perturbation.with_t(t))

  @property
  def is_skew(self) -> bool:
    """First lift coordinate depends on x only."""
    return (self._matrix[0, 1] == 0 and
            self._perturbation.first_component_independent_of_y() and
            self._perturbation.t * self._perturbation.shift[0] == 0.0)

  def lift_evaluate(self, q: Any) -> np.ndarray:
    """F-hat(q) = Mq + G(q), no reduction."""
    q = np.asarray(q, dtype=float)
    return q @ self._fmatrix.T + self._perturbation(q)

  def evaluate(self, p: Any) -> np.ndarray:
    return wrap(self.lift_evaluate(p))

  __call__ = evaluate

  def jacobian(self, p: Any) -> np.ndarray:
    """DF(p) = M + DG(p), shape (..., 2, 2)."""
    return self._fmatrix + self._perturbation.derivative(p)

  def det_jacobian(self, p: Any) -> np.ndarray:
    return np.linalg.det(self.jacobian(p))

  def iterate(self, p: Any, n: int) -> np.ndarray:
    """F^n(p) on the torus."""
    z = wrap(p)
    for _ in range(n):
      z = self.evaluate(z)
    return z

  def lift_iterate(self, q: Any, n: int) -> np.ndarray:
    """F-hat^n(q) in the plane."""
    z = np.asarray(q, dtype=float)
    for _ in range(n):
      z = self.lift_evaluate(z)
    return z

  def orbit(self, p: Any, n: int) -> np.ndarray:
    """[p, F(p), ..., F^n(p)] as an array of shape (n + 1, ..., 2)."""
    if n < 0:
      raise errors.ValidationError('orbit length must be >= 0, got %d' % n)
    z = wrap(p)
    points = [z]
    for _ in range(n):
      z = self.evaluate(z)
      points.append(z)
    return np.stack(points)

  def jacobian_product(self, points: Any) -> np.ndarray:
    """DF(p_{n-1}) ... DF(p_0) for points ordered along an orbit.

    Args:
      points: array of shape (n, ..., 2).

    Returns:
      The ordered product, shape (..., 2, 2).
    """
    points = np.asarray(points, dtype=float)
    product = np.broadcast_to(np.eye(2), points.shape[1:-1] + (2, 2)).copy()
    for p in points:
      product = self.jacobian(p) @ product
    return product

  def to_json_dict(self) -> Dict[Text, Any]:
    return {
        'matrix': self._matrix.tolist(),
        'perturbation': self._perturbation,
    }

  @classmethod
  def from_json_dict(cls, dict_data: Dict[Text, Any]) -> 'TorusMap':
    perturbation = dict_data['perturbation']
    if not isinstance(perturbation, FourierPerturbation):
      perturbation = FourierPerturbation.from_json_dict(perturbation)
    return cls(dict_data['matrix'], perturbation)


def make_skew_map(m: int,
                  a: int,
                  terms: Iterable[FourierTerm] = (),
                  t: float = 0.0) -> TorusMap:
  """F(x, y) = (m x, a x + y + g(x, y)) with g = t + sum of terms."""
  return TorusMap([[m, 0], [a, 1]],
                  FourierPerturbation(terms, t=t, shift=(0.0, 1.0)))


def make_reference_map(t: float = 0.0, epsilon: float = 0.05) -> TorusMap:
  """F_t(x, y) = (3x, x + y + t + epsilon sin 2 pi y)."""
  terms = [FourierTerm((0, 1), (0.0, epsilon))] if epsilon else []
  return make_skew_map(3, 1, terms, t=t)


def as_points(points: Any) -> Tuple[np.ndarray, bool]:
  """Returns (array of shape (n, 2), whether the input was a single point)."""
  arr = np.asarray(points, dtype=float)
  if arr.ndim == 1:
    return arr.reshape(1, 2), True
  return arr.reshape(-1, 2), False
