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
"""Integer eigen-structure, tilings and cone verification for torus maps.

All eigenvector computations use exact integer arithmetic. A matrix M
satisfies (E_M) when its eigenvalues are 1 and an integer m with |m| > 1;
for 2x2 integer matrices this is 1 - tr(M) + det(M) == 0 with m = det(M).
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

from absl import logging
import numpy as np
from typing import Any, Dict, Optional, Sequence, Text, Tuple

from torusx.dynamics import errors
from torusx.dynamics import torus_map as torus_map_lib
from torusx.utils import json_utils

IntVector = Tuple[int, int]

# Default number of cone directions sampled per base point.
DEFAULT_BOUNDARY_SAMPLES = 64
DEFAULT_GRID_N = 200


def _int_matrix(matrix: Any) -> Tuple[Tuple[int, int], Tuple[int, int]]:
  m = np.asarray(matrix)
  if m.shape != (2, 2):
    raise errors.ValidationError('matrix must be 2x2, got {}'.format(m.shape))
  return ((int(m[0, 0]), int(m[0, 1])), (int(m[1, 0]), int(m[1, 1])))


def check_em(matrix: Any) -> Optional[Text]:
  """Returns a description of the (E_M) violation, or None if M satisfies it."""
  (a, b), (c, d) = _int_matrix(matrix)
  trace, det = a + d, a * d - b * c
  if 1 - trace + det != 0:
    return ('matrix {} does not satisfy (E_M): 1 is not an eigenvalue'.format(
        [[a, b], [c, d]]))
  if abs(det) <= 1:
    return ('matrix {} does not satisfy (E_M): second eigenvalue m={} needs '
            '|m| > 1'.format([[a, b], [c, d]], det))
  return None


def lattice_min_k(v: Sequence[int]) -> int:
  """min |v.x| over integer x with v.x != 0, i.e. gcd of the entries."""
  entries = [abs(int(c)) for c in v]
  if not any(entries):
    raise errors.ZeroVectorError('lattice_min_k of the zero vector')
  k = 0
  for c in entries:
    k = math.gcd(k, c)
  return k


def _normalize_sign(v: IntVector) -> IntVector:
  """Makes the first nonzero entry positive."""
  for c in v:
    if c != 0:
      return v if c > 0 else (-v[0], -v[1])
  return v


def _primitive(v: IntVector) -> IntVector:
  k = lattice_min_k(v)
  return _normalize_sign((v[0] // k, v[1] // k))


def _left_null(a) -> IntVector:
  v = (a[1][0], -a[0][0])
  if v == (0, 0):
    v = (a[1][1], -a[0][1])
  return v


def _right_null(a) -> IntVector:
  v = (-a[0][1], a[0][0])
  if v == (0, 0):
    v = (-a[1][1], a[1][0])
  return v


def _shifted(m, lam):
  return ((m[0][0] - lam, m[0][1]), (m[1][0], m[1][1] - lam))


def _left_times(v, m) -> IntVector:
  return (v[0] * m[0][0] + v[1] * m[1][0], v[0] * m[0][1] + v[1] * m[1][1])


def _times_right(m, v) -> IntVector:
  return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def _check_exact(condition: bool, message: Text, *args: Any) -> None:
  if not condition:
    raise errors.InternalError(message.format(*args))


def _dot(u: Sequence[float], v: Sequence[float]) -> float:
  return u[0] * v[0] + u[1] * v[1]


class SpectralData(json_utils.Jsonable):
  """Eigen-structure of an (E_M) matrix.

  Attributes:
    m: the expanding integer eigenvalue.
    v_m_left: primitive left eigenvector for m (v M = m v).
    v_m_right: primitive right eigenvector for m, oriented so that
      v_m_left . v_m_right > 0.
    v_1_right: primitive right eigenvector for 1.
    k: gcd of the entries of v_m_left.
    theta: angle in [0, pi/2] between v_m_right and v_1_right.
  """

  def __init__(self, m: int, v_m_left: IntVector, v_m_right: IntVector,
               v_1_right: IntVector, k: int, theta: float):
    self.m = m
    self.v_m_left = tuple(v_m_left)
    self.v_m_right = tuple(v_m_right)
    self.v_1_right = tuple(v_1_right)
    self.k = k
    self.theta = theta

  def __repr__(self):
    return ('SpectralData(m={}, v_m_left={}, v_m_right={}, v_1_right={}, '
            'k={})'.format(self.m, self.v_m_left, self.v_m_right,
                           self.v_1_right, self.k))


def eigen_data(matrix: Any) -> SpectralData:
  """Computes the integer eigen-structure of an (E_M) matrix.

  Args:
    matrix: 2x2 integer matrix.

  Returns:
    SpectralData with primitive eigenvectors.

  Raises:
    NotEMError: if the eigenvalues are not {1, m} with integer |m| > 1.
  """
  violation = check_em(matrix)
  if violation:
    raise errors.NotEMError(violation)
  mat = _int_matrix(matrix)
  m = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]

  v_left = _primitive(_left_null(_shifted(mat, m)))
  v_right = _primitive(_right_null(_shifted(mat, m)))
  if _dot(v_left, v_right) < 0:
    v_right = (-v_right[0], -v_right[1])
  v_one = _primitive(_right_null(_shifted(mat, 1)))

  # Exact checks; these cannot fail for a 2x2 (E_M) matrix.
  _check_exact(_left_times(v_left, mat) == (m * v_left[0], m * v_left[1]),
               'v_m_left={} is not a left eigenvector for {}', v_left, m)
  right_image = _times_right(mat, v_right)
  _check_exact(right_image == (m * v_right[0], m * v_right[1]),
               'v_m_right={} is not a right eigenvector for {}', v_right, m)
  _check_exact(_times_right(mat, v_one) == v_one,
               'v_1={} is not a right eigenvector for 1', v_one)

  cos_theta = abs(_dot(v_right, v_one)) / (
      math.hypot(*v_right) * math.hypot(*v_one))
  theta = math.acos(min(1.0, cos_theta))
  return SpectralData(m, v_left, v_right, v_one, lattice_min_k(v_left), theta)


def default_alpha(spectral: SpectralData) -> float:
  """A cone opening below tan(theta); capped at 1."""
  return min(1.0, 0.5 * math.tan(spectral.theta))


class ConeParams(json_utils.Jsonable):
  """Cone_{K, alpha}: vectors a w + b W with |b| <= alpha |a|."""

  def __init__(self, K: float, alpha: float, w: Sequence[float],
               W: Sequence[float]):
    if not K > 1.0:
      raise errors.ValidationError('K must be > 1, got {}'.format(K))
    if not alpha > 0.0:
      raise errors.ValidationError('alpha must be > 0, got {}'.format(alpha))
    w = np.asarray(w, dtype=float)
    W = np.asarray(W, dtype=float)
    w = w / np.linalg.norm(w)
    W = W / np.linalg.norm(W)
    basis = np.column_stack([w, W])
    if abs(np.linalg.det(basis)) < 1e-12:
      raise errors.ValidationError('w and W must not be parallel')
    self.K = float(K)
    self.alpha = float(alpha)
    self.w = w
    self.W = W
    self._basis = basis
    self._inverse = np.linalg.inv(basis)

  @classmethod
  def from_spectral(cls, spectral: SpectralData, K: float,
                    alpha: Optional[float] = None) -> 'ConeParams':
    """w along v_m_right, W spanning the orthogonal complement of v_m_left."""
    if alpha is None:
      alpha = default_alpha(spectral)
    v = spectral.v_m_left
    return cls(K, alpha, spectral.v_m_right, (-v[1], v[0]))

  @property
  def basis(self) -> np.ndarray:
    """Columns w and W."""
    return self._basis

  def decompose(self, vectors: Any) -> np.ndarray:
    """Coordinates (a, b) of vectors in the (w, W) basis, shape (..., 2)."""
    return np.asarray(vectors, dtype=float) @ self._inverse.T

  def contains(self, vectors: Any, slack: float = 0.0) -> np.ndarray:
    ab = self.decompose(vectors)
    return np.abs(ab[..., 1]) <= (self.alpha + slack) * np.abs(ab[..., 0])

  def boundary_directions(self, samples: int) -> np.ndarray:
    """Unit vectors a w + b W with a = 1 and b spanning [-alpha, alpha]."""
    b = np.linspace(-1.0, 1.0, samples) * self.alpha
    vecs = self.w[None, :] + b[:, None] * self.W[None, :]
    return vecs / np.linalg.norm(vecs, axis=1, keepdims=True)

  def to_json_dict(self) -> Dict[Text, Any]:
    return {'K': self.K, 'alpha': self.alpha, 'w': self.w, 'W': self.W}

  @classmethod
  def from_json_dict(cls, dict_data: Dict[Text, Any]) -> 'ConeParams':
    return cls(dict_data['K'], dict_data['alpha'], dict_data['w'],
               dict_data['W'])


class ConeReport(json_utils.Jsonable):
  """Worst-case cone ratios over a sampled grid of base points."""

  def __init__(self, min_expansion: float, max_containment_ratio: float,
               max_transverse_growth: float, worst_point: Sequence[float],
               K: float, alpha: float, grid_n: int, boundary_samples: int,
               theta: Optional[float] = None):
    self.min_expansion = float(min_expansion)
    self.max_containment_ratio = float(max_containment_ratio)
    self.max_transverse_growth = float(max_transverse_growth)
    self.worst_point = tuple(float(c) for c in worst_point)
    self.K = float(K)
    self.alpha = float(alpha)
    self.grid_n = int(grid_n)
    self.boundary_samples = int(boundary_samples)
    self.theta = theta

  def passes(self, K: Optional[float] = None,
             alpha: Optional[float] = None) -> bool:
    """Pass/fail of the stored samples against (K, alpha)."""
    K = self.K if K is None else K
    alpha = self.alpha if alpha is None else alpha
    return (self.min_expansion > K and self.max_containment_ratio < alpha and
            self.max_transverse_growth < K)

  @property
  def passed(self) -> bool:
    return self.passes()

  def to_json_dict(self) -> Dict[Text, Any]:
    result = dict(self.__dict__)
    result['pass'] = self.passed
    return result

  @classmethod
  def from_json_dict(cls, dict_data: Dict[Text, Any]) -> 'ConeReport':
    data = dict(dict_data)
    data.pop('pass', None)
    return cls(**data)


def cone_verify(torus_map: torus_map_lib.TorusMap,
                cone: ConeParams,
                grid_n: int = DEFAULT_GRID_N,
                boundary_samples: int = DEFAULT_BOUNDARY_SAMPLES
               ) -> ConeReport:
  """Checks the (K, alpha) cone conditions of DF on a uniform grid.

  For every base point z of the grid_n x grid_n grid and every sampled cone
  vector v = w + b W (|b| <= alpha), the image DF(z) v = a' w + b' W is
  tested for expansion |a'| > K and containment |b'| < alpha |a'|. The
  transverse direction W must grow by less than K.

  Args:
    torus_map: the map.
    cone: cone parameters.
    grid_n: grid resolution, >= 2.
    boundary_samples: cone directions per base point, >= 2.

  Returns:
    A ConeReport; a failing report is a valid result.
  """
  if grid_n < 2:
    raise errors.ValidationError('grid_n must be >= 2, got %d' % grid_n)
  if boundary_samples < 2:
    raise errors.ValidationError(
        'boundary_samples must be >= 2, got %d' % boundary_samples)
  axis = np.arange(grid_n) / grid_n
  xs, ys = np.meshgrid(axis, axis, indexing='ij')
  points = np.stack([xs.ravel(), ys.ravel()], axis=-1)

  jac = torus_map.jacobian(points)
  # DF in (w, W) coordinates.
  local = cone._inverse @ jac @ cone.basis
  b = np.linspace(-1.0, 1.0, boundary_samples) * cone.alpha
  a_new = local[:, 0, 0][:, None] + local[:, 0, 1][:, None] * b[None, :]
  b_new = local[:, 1, 0][:, None] + local[:, 1, 1][:, None] * b[None, :]
  expansion = np.abs(a_new).min(axis=1)
  with np.errstate(divide='ignore', invalid='ignore'):
    ratio = np.where(a_new != 0.0, np.abs(b_new) / np.abs(a_new), np.inf)
  containment = ratio.max(axis=1)
  transverse = np.linalg.norm(jac @ cone.W, axis=-1)

  margin = np.minimum.reduce([
      (expansion - cone.K) / cone.K,
      (cone.alpha - containment) / cone.alpha,
      (cone.K - transverse) / cone.K,
  ])
  worst = int(np.argmin(margin))
  report = ConeReport(
      min_expansion=expansion.min(),
      max_containment_ratio=containment.max(),
      max_transverse_growth=transverse.max(),
      worst_point=points[worst],
      K=cone.K,
      alpha=cone.alpha,
      grid_n=grid_n,
      boundary_samples=boundary_samples)
  logging.info('Cone check K=%s alpha=%s grid=%d: pass=%s', cone.K,
               cone.alpha, grid_n, report.passed)
  return report


class DeltaCheck(json_utils.Jsonable):
  """Result of the ||DG|| < delta(M) smallness test."""

  def __init__(self, dg_norm: float, threshold: float, alpha: float):
    self.dg_norm = float(dg_norm)
    self.threshold = float(threshold)
    self.alpha = float(alpha)

  @property
  def passed(self) -> bool:
    return self.dg_norm < self.threshold

  def to_json_dict(self) -> Dict[Text, Any]:
    result = dict(self.__dict__)
    result['pass'] = self.passed
    return result


def delta_check(torus_map: torus_map_lib.TorusMap,
                alpha: Optional[float] = None) -> DeltaCheck:
  """Compares the analytic ||DG|| bound with a sufficient threshold delta(M).

  For diagonal M the threshold is |m| / 2. Otherwise it is
  (K_target - 1) * sigma_min / (1 + alpha), where K_target = (1 + |m|) / 2
  and sigma_min is the least stretching of M over unit cone vectors.

  Raises:
    NotEMError: if the matrix does not satisfy (E_M).
  """
  spectral = eigen_data(torus_map.matrix)
  dg_norm = torus_map.perturbation.derivative_norm
  mat = torus_map.matrix
  if alpha is None:
    alpha = default_alpha(spectral)
  if mat[0, 1] == 0 and mat[1, 0] == 0:
    threshold = 0.5 * abs(spectral.m)
  else:
    k_target = 0.5 * (1 + abs(spectral.m))
    cone = ConeParams.from_spectral(spectral, K=k_target, alpha=alpha)
    directions = cone.boundary_directions(257)
    sigma_min = np.min(
        np.linalg.norm(directions @ mat.astype(float).T, axis=-1))
    threshold = (k_target - 1.0) * sigma_min / (1.0 + alpha)
  return DeltaCheck(dg_norm, threshold, alpha)


class Tiling(json_utils.Jsonable):
  """Unimodular lattice basis adapted to the left eigenvector v.

  w1 is orthogonal to v and w2 satisfies v . w2 = 1, so every z decomposes
  as z = s w1 + r w2 with r = v . z. The coordinate s is the projection onto
  span(w1) along w2; it changes by integers under integer translations, so
  s mod 1 is well defined on the torus.
  """

  def __init__(self, v: IntVector, w1: IntVector, w2: IntVector):
    self.v = tuple(v)
    self.w1 = tuple(w1)
    self.w2 = tuple(w2)
    self.det = w1[0] * w2[1] - w1[1] * w2[0]

  @property
  def proj_w(self) -> Tuple[float, float]:
    """Row vector of the linear functional z -> s."""
    return (self.w2[1] / self.det, -self.w2[0] / self.det)

  def project(self, z: Any) -> np.ndarray:
    """The w1-coordinate s of z (unreduced)."""
    return np.asarray(z, dtype=float) @ np.asarray(self.proj_w)

  def point(self, s: Any, r: Any) -> np.ndarray:
    """s w1 + r w2, broadcasting over s and r."""
    s = np.asarray(s, dtype=float)[..., None]
    r = np.asarray(r, dtype=float)[..., None]
    return s * np.asarray(self.w1, float) + r * np.asarray(self.w2, float)

  def to_json_dict(self) -> Dict[Text, Any]:
    return {
        'v': list(self.v),
        'w1': list(self.w1),
        'w2': list(self.w2),
        'det': self.det,
        'proj_w': list(self.proj_w),
    }

  @classmethod
  def from_json_dict(cls, dict_data: Dict[Text, Any]) -> 'Tiling':
    return cls(tuple(dict_data['v']), tuple(dict_data['w1']),
               tuple(dict_data['w2']))


def _extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
  old_r, r = a, b
  old_s, s = 1, 0
  old_t, t = 0, 1
  while r != 0:
    q = old_r // r
    old_r, r = r, old_r - q * r
    old_s, s = s, old_s - q * s
    old_t, t = t, old_t - q * t
  return old_r, old_s, old_t


def build_tiling(v_m_left: Sequence[int]) -> Tiling:
  """Builds (w1, w2) with w1 orthogonal to v, v . w2 = 1 and |det| = 1.

  Among all lattice points with v . w2 = 1 the one of least Euclidean norm
  is chosen, ties broken lexicographically.

  Raises:
    ZeroVectorError: if v is zero.
    NotPrimitiveError: if gcd(v) != 1.
  """
  v = (int(v_m_left[0]), int(v_m_left[1]))
  if lattice_min_k(v) != 1:
    raise errors.NotPrimitiveError(
        'tiling needs a primitive vector, got {}'.format(v))
  w1 = _normalize_sign((v[1], -v[0]))
  g, x, y = _extended_gcd(v[0], v[1])
  if g < 0:
    x, y = -x, -y
  # All solutions of v . w = 1 are (x, y) + s * w1.
  s_star = -_dot((x, y), w1) / _dot(w1, w1)
  candidates = []
  for s in range(int(math.floor(s_star)) - 1, int(math.ceil(s_star)) + 2):
    w = (x + s * w1[0], y + s * w1[1])
    candidates.append((w[0] * w[0] + w[1] * w[1], w))
  w2 = min(candidates)[1]
  tiling = Tiling(v, w1, w2)
  _check_exact(_dot(v, w2) == 1 and abs(tiling.det) == 1,
               'tiling ({}, {}) is not unimodular', v, w2)
  return tiling
