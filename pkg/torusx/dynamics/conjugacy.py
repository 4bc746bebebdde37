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
"""Semi-conjugacy to x -> mx and the conjugacy H of (E_cone) torus maps.

The semi-conjugacy is the limit

    Phi-hat(q) = k^-1 lim m^-n v . F-hat^n(q)
               = k^-1 (v . q + sum_n m^-(n+1) v . G(F^n(q)))

where v is the left m-eigenvector of M. It satisfies
Phi-hat(F-hat(q)) = m Phi-hat(q), and Phi = Phi-hat mod 1 is well defined on
the torus because k divides v . nu for integer nu. Fibers of Phi are closed
curves; together with a lattice coordinate transverse to v they give the
conjugacy H(z) = (Phi(z), proj_W z mod 1).
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl import logging
import numpy as np
from scipy import optimize
from scipy import spatial
from typing import Any, Callable, Dict, Iterable, List, Optional, Text

from torusx.dynamics import errors
from torusx.dynamics import spectral as spectral_lib
from torusx.dynamics import torus_map as torus_map_lib
from torusx.utils import json_utils

DEFAULT_TOL = 1e-10
# Depth cap of the defining series; reaching it means |m| is misconfigured.
MAX_DEPTH = 200
FIBER_TOL = 1e-12
INVERSE_TOL = 1e-9
CLOSURE_TOL = 1e-8

MapFn = Callable[[Callable[[Any], Any], Iterable[Any]], List[Any]]


def _serial_map(fn, items):
  return [fn(item) for item in items]


class PhiValue(json_utils.Jsonable):
  """A truncated Phi-hat value with its certified tail bound."""

  def __init__(self, value: Any, error_bound: float, depth: int):
    self.value = value
    self.error_bound = float(error_bound)
    self.depth = int(depth)

  def __repr__(self):
    return 'PhiValue(value={}, error_bound={}, depth={})'.format(
        self.value, self.error_bound, self.depth)


def tail_bound(torus_map: torus_map_lib.TorusMap,
               spectral: spectral_lib.SpectralData, depth: int) -> float:
  """||v|| ||G|| / (k (|m| - 1) |m|^depth)."""
  scale = (np.linalg.norm(spectral.v_m_left) *
           torus_map.perturbation.sup_norm)
  if scale == 0.0:
    return 0.0
  m = abs(spectral.m)
  return scale / (spectral.k * (m - 1) * float(m)**depth)


def lipschitz_bound(torus_map: torus_map_lib.TorusMap,
                    spectral: Optional[spectral_lib.SpectralData] = None
                   ) -> float:
  """2 ||v|| ||G|| / (|m| - 1), the bound on lipschitz_defect."""
  spectral = spectral or spectral_lib.eigen_data(torus_map.matrix)
  return (2.0 * np.linalg.norm(spectral.v_m_left) *
          torus_map.perturbation.sup_norm / (abs(spectral.m) - 1))


def phi_depth(torus_map: torus_map_lib.TorusMap,
              tol: float,
              spectral: Optional[spectral_lib.SpectralData] = None,
              max_depth: int = MAX_DEPTH) -> int:
  """Smallest depth whose tail bound is <= tol.

  Raises:
    ValidationError: if tol <= 0.
    TolNotAchievableError: if the depth would exceed max_depth.
  """
  if not tol > 0.0:
    raise errors.ValidationError('tol must be > 0, got {}'.format(tol))
  spectral = spectral or spectral_lib.eigen_data(torus_map.matrix)
  depth = 0
  while tail_bound(torus_map, spectral, depth) > tol:
    depth += 1
    if depth > max_depth:
      raise errors.TolNotAchievableError(
          'tol={} needs more than {} terms of the Phi series (m={})'.format(
              tol, max_depth, spectral.m))
  return depth


def _phi_series(torus_map: torus_map_lib.TorusMap,
                spectral: spectral_lib.SpectralData, q: np.ndarray,
                depth: int) -> np.ndarray:
  v = np.asarray(spectral.v_m_left, dtype=float)
  perturbation = torus_map.perturbation
  total = q @ v
  # G is periodic, so G(F-hat^n q) = G(F^n(q mod 1)).
  z = torus_map_lib.wrap(q)
  scale = 1.0
  for _ in range(depth):
    scale /= spectral.m
    total = total + scale * (perturbation(z) @ v)
    z = torus_map.evaluate(z)
  return total / spectral.k


def phi_hat(torus_map: torus_map_lib.TorusMap,
            q: Any,
            tol: float = DEFAULT_TOL,
            spectral: Optional[spectral_lib.SpectralData] = None,
            depth: Optional[int] = None) -> PhiValue:
  """Evaluates Phi-hat at lift points q of shape (..., 2).

  Args:
    torus_map: an (E_M) map.
    q: lift point(s).
    tol: requested bound on the truncation error.
    spectral: eigen data of the map, computed when omitted.
    depth: explicit truncation depth; overrides tol.

  Returns:
    PhiValue with a float value for a single point, an array otherwise.
  """
  spectral = spectral or spectral_lib.eigen_data(torus_map.matrix)
  if depth is None:
    depth = phi_depth(torus_map, tol, spectral)
  q = np.asarray(q, dtype=float)
  value = _phi_series(torus_map, spectral, q, depth)
  if value.ndim == 0:
    value = float(value)
  return PhiValue(value, tail_bound(torus_map, spectral, depth), depth)


def phi(torus_map: torus_map_lib.TorusMap,
        p: Any,
        tol: float = DEFAULT_TOL,
        spectral: Optional[spectral_lib.SpectralData] = None) -> Any:
  """Phi(p) in [0, 1): Phi-hat of the canonical lift, reduced mod 1."""
  value = phi_hat(torus_map, torus_map_lib.wrap(p), tol, spectral).value
  return torus_map_lib.wrap(value)


def factoring_residual(torus_map: torus_map_lib.TorusMap,
                       sample_n: int,
                       tol: float = DEFAULT_TOL,
                       seed: int = 0) -> float:
  """max circle-distance(Phi(F(z)), m Phi(z)) over sample_n random z."""
  if sample_n < 1:
    raise errors.ValidationError('sample_n must be >= 1, got %d' % sample_n)
  spectral = spectral_lib.eigen_data(torus_map.matrix)
  points = np.random.RandomState(seed).uniform(size=(sample_n, 2))
  left = phi(torus_map, torus_map.evaluate(points), tol, spectral)
  right = spectral.m * phi(torus_map, points, tol, spectral)
  return float(np.max(torus_map_lib.circle_distance(left, right)))


def lipschitz_defect(torus_map: torus_map_lib.TorusMap,
                     z1: Any,
                     z2: Any,
                     tol: float = 1e-12) -> Any:
  """| |k Phi-hat(z1) - k Phi-hat(z2)| - |v . (z1 - z2)| |."""
  spectral = spectral_lib.eigen_data(torus_map.matrix)
  z1 = np.asarray(z1, dtype=float)
  z2 = np.asarray(z2, dtype=float)
  depth = phi_depth(torus_map, tol, spectral)
  h1 = spectral.k * _phi_series(torus_map, spectral, z1, depth)
  h2 = spectral.k * _phi_series(torus_map, spectral, z2, depth)
  v = np.asarray(spectral.v_m_left, dtype=float)
  return np.abs(np.abs(h1 - h2) - np.abs((z1 - z2) @ v))


def _solve_on_line(f: Callable[[float], float], lo: float, hi: float,
                   xtol: float) -> Optional[float]:
  f_lo, f_hi = f(lo), f(hi)
  if f_lo == 0.0:
    return lo
  if f_hi == 0.0:
    return hi
  if f_lo * f_hi > 0.0:
    return None
  return optimize.brentq(f, lo, hi, xtol=xtol, rtol=4 * np.finfo(float).eps)


class _FiberSolver(object):
  """Solves Phi-hat = theta along lines parallel to v_m_right."""

  def __init__(self, torus_map: torus_map_lib.TorusMap, tol: float):
    self.torus_map = torus_map
    self.spectral = spectral_lib.eigen_data(torus_map.matrix)
    self.depth = phi_depth(torus_map, tol, self.spectral)
    self.v = np.asarray(self.spectral.v_m_left, dtype=float)
    self.direction = np.asarray(self.spectral.v_m_right, dtype=float)
    # Parameter advance along the line for a unit change of Phi-hat.
    self.period = self.spectral.k / float(self.v @ self.direction)
    self.defect = lipschitz_bound(torus_map, self.spectral) / (
        2.0 * self.spectral.k)

  def base_point(self, anchor: Any) -> np.ndarray:
    """The point of the line through anchor with v . z = 0."""
    anchor = np.asarray(anchor, dtype=float)
    offset = np.asarray(anchor @ self.v)[..., None] / (self.direction @ self.v)
    return anchor - offset * self.direction

  def lift_solve(self, theta: float, base: np.ndarray) -> np.ndarray:
    """Lift point z on base + tau v_R with Phi-hat(z) = theta."""

    def f(tau):
      z = base + tau * self.direction
      return _phi_series(self.torus_map, self.spectral, z, self.depth) - theta

    slack = 2.0 * self.defect + 1e-3
    lo = self.period * (theta - slack)
    hi = self.period * (theta + slack)
    if lo > hi:
      lo, hi = hi, lo
    tau = _solve_on_line(f, lo, hi, xtol=1e-15 * max(1.0, abs(self.period)))
    if tau is None:
      raise errors.BracketFailureError(
          'Phi-hat does not straddle theta={} on the line through {} along '
          '{}'.format(theta, base.tolist(), self.direction.tolist()))
    return base + tau * self.direction


def fiber_solve(torus_map: torus_map_lib.TorusMap,
                theta: float,
                anchor: Any,
                tol: float = FIBER_TOL) -> np.ndarray:
  """The point p on the line anchor + tau v_m_right with Phi(p) = theta.

  The lift of the solution is normalized to Phi-hat(p) = theta on the line
  through the point of v . z = 0, so every anchor of one line gives the
  same point.

  Raises:
    BracketFailureError: if Phi-hat has no sign change over the bracket.
  """
  solver = _FiberSolver(torus_map, tol)
  base = solver.base_point(anchor)
  return torus_map_lib.wrap(
      solver.lift_solve(float(torus_map_lib.wrap(theta)), base))



def fiber_points(torus_map: torus_map_lib.TorusMap,
                 thetas: Any,
                 anchors: Any,
                 tol: float = 1e-8,
                 iterations: int = 60) -> np.ndarray:
  """Vectorized fiber_solve for many (theta, anchor) pairs.

  Runs a fixed number of bisection steps on every line at once. Lines
  without a sign change keep the bracket midpoint, so callers that need
  certified points use fiber_solve instead.
  """
  solver = _FiberSolver(torus_map, tol)
  thetas = torus_map_lib.wrap(thetas)
  base = solver.base_point(np.asarray(anchors, dtype=float))
  slack = 2.0 * solver.defect + 1e-3
  lo = solver.period * (thetas - slack)
  hi = solver.period * (thetas + slack)
  for _ in range(iterations):
    mid = 0.5 * (lo + hi)
    value = _phi_series(torus_map, solver.spectral,
                        base + mid[..., None] * solver.direction,
                        solver.depth)
    above = value >= thetas
    hi = np.where(above, mid, hi)
    lo = np.where(above, lo, mid)
  mid = 0.5 * (lo + hi)
  return torus_map_lib.wrap(base + mid[..., None] * solver.direction)


class FiberPolyline(json_utils.Jsonable):
  """An ordered sample of the fiber Phi^-1(theta).

  Attributes:
    theta: fiber value in [0, 1).
    points: torus points, shape (n, 2).
    lifted: lift points, shape (n + 1, 2); the last one closes the curve.
    closed: whether the last lift point is the first one shifted by w1.
    length: length of the lifted polyline.
    max_turning_angle: largest angle between consecutive segments.
    max_residual: largest circle distance |Phi(point) - theta|.
  """

  def __init__(self, theta: float, points: np.ndarray, lifted: np.ndarray,
               closed: bool, length: float, max_turning_angle: float,
               max_residual: float):
    self.theta = float(theta)
    self.points = np.asarray(points, dtype=float)
    self.lifted = np.asarray(lifted, dtype=float)
    self.closed = bool(closed)
    self.length = float(length)
    self.max_turning_angle = float(max_turning_angle)
    self.max_residual = float(max_residual)

  def summary(self) -> Dict[Text, Any]:
    return {
        'theta': self.theta,
        'n_points': len(self.points),
        'closed': self.closed,
        'length': self.length,
        'max_turning_angle': self.max_turning_angle,
        'max_residual': self.max_residual,
    }


def _turning_angles(lifted: np.ndarray) -> np.ndarray:
  segments = np.diff(lifted, axis=0)
  first, second = segments[:-1], segments[1:]
  cross = first[:, 0] * second[:, 1] - first[:, 1] * second[:, 0]
  dot = np.sum(first * second, axis=1)
  return np.abs(np.arctan2(cross, dot))


def fiber_trace(torus_map: torus_map_lib.TorusMap,
                theta: float,
                n_points: int,
                tol: float = FIBER_TOL,
                map_fn: MapFn = _serial_map) -> FiberPolyline:
  """Samples the fiber of theta on n_points lines offset along w1.

  Args:
    torus_map: an (E_cone) map.
    theta: fiber value.
    n_points: number of lines, >= 8.
    tol: Phi truncation tolerance.
    map_fn: ordered map used to solve the lines, e.g. a thread pool map.

  Returns:
    The fiber polyline.

  Raises:
    BracketFailureError: propagated from any line.
  """
  if n_points < 8:
    raise errors.ValidationError('n_points must be >= 8, got %d' % n_points)
  theta = float(torus_map_lib.wrap(theta))
  solver = _FiberSolver(torus_map, tol)
  tiling = spectral_lib.build_tiling(
      [c // solver.spectral.k for c in solver.spectral.v_m_left])
  w1 = np.asarray(tiling.w1, dtype=float)
  anchors = [j / n_points * w1 for j in range(n_points + 1)]
  lifted = np.array(
      map_fn(lambda a: solver.lift_solve(theta, solver.base_point(a)),
             anchors))
  closed = bool(np.linalg.norm(lifted[-1] - (lifted[0] + w1)) < CLOSURE_TOL)
  points = torus_map_lib.wrap(lifted[:-1])
  residual = torus_map_lib.circle_distance(
      phi(torus_map, points, tol, solver.spectral), theta)
  polyline = FiberPolyline(
      theta=theta,
      points=points,
      lifted=lifted,
      closed=closed,
      length=np.sum(np.linalg.norm(np.diff(lifted, axis=0), axis=1)),
      max_turning_angle=np.max(_turning_angles(lifted)),
      max_residual=np.max(residual))
  logging.info('Fiber theta=%s: %d points, closed=%s, length=%.6f', theta,
               n_points, closed, polyline.length)
  return polyline


class ConjugacyMap(json_utils.Jsonable):
  """H(z) = (Phi(z), proj_W z mod 1) for an (E_cone) map."""

  def __init__(self, torus_map: torus_map_lib.TorusMap,
               tol: float = DEFAULT_TOL):
    self.torus_map = torus_map
    self.spectral = spectral_lib.eigen_data(torus_map.matrix)
    self.tiling = spectral_lib.build_tiling(
        [c // self.spectral.k for c in self.spectral.v_m_left])
    self.tol = tol
    self._depth = phi_depth(torus_map, tol, self.spectral)
    self._defect = lipschitz_bound(torus_map, self.spectral) / (
        2.0 * self.spectral.k)

  def to_json_dict(self) -> Dict[Text, Any]:
    return {
        'spectral': self.spectral,
        'tiling': self.tiling,
        'tol': self.tol,
        'depth': self._depth,
    }

  def _phi_hat(self, z: np.ndarray) -> np.ndarray:
    return _phi_series(self.torus_map, self.spectral, z, self._depth)

  def forward(self, p: Any) -> np.ndarray:
    """H(p) for torus points of shape (..., 2)."""
    z = torus_map_lib.wrap(p)
    first = torus_map_lib.wrap(self._phi_hat(z))
    second = torus_map_lib.wrap(self.tiling.project(z))
    return np.stack([first, second], axis=-1)

  def inverse(self, target: Any) -> np.ndarray:
    """The torus point p with H(p) = target.

    Solves Phi-hat = x0 along the line y0 w1 + r w2, on which the proj_W
    coordinate is y0.

    Raises:
      NoConvergenceError: if no root is found or the result misses target.
    """
    target = torus_map_lib.wrap(target)
    x0, y0 = float(target[0]), float(target[1])
    w1 = np.asarray(self.tiling.w1, dtype=float)
    w2 = np.asarray(self.tiling.w2, dtype=float)
    k = self.spectral.k

    def f(r):
      return self._phi_hat(y0 * w1 + r * w2) - x0

    r = None
    for slack in (2.0 * self._defect + 1e-3, 4.0 * self._defect + 0.5):
      r = _solve_on_line(f, k * (x0 - slack), k * (x0 + slack), xtol=1e-15)
      if r is not None:
        break
    if r is None:
      raise errors.NoConvergenceError(
          'H^-1({}) has no bracket along w2={}'.format(target.tolist(),
                                                       self.tiling.w2))
    p = torus_map_lib.wrap(y0 * w1 + r * w2)
    miss = float(torus_map_lib.torus_distance(self.forward(p), target))
    if miss > INVERSE_TOL:
      raise errors.NoConvergenceError(
          'H^-1({}) missed the target by {}'.format(target.tolist(), miss))
    return p


def conjugacy_forward(cmap: ConjugacyMap, p: Any) -> np.ndarray:
  return cmap.forward(p)


def conjugacy_inverse(cmap: ConjugacyMap, target: Any) -> np.ndarray:
  return cmap.inverse(target)


def injectivity_violations(cmap: ConjugacyMap,
                           grid_n: int,
                           image_radius: float = 1e-6,
                           domain_radius: float = 1e-5) -> int:
  """Counts grid pairs with H-images within image_radius but domain points
  farther apart than domain_radius."""
  axis = np.arange(grid_n) / grid_n
  xs, ys = np.meshgrid(axis, axis, indexing='ij')
  points = np.stack([xs.ravel(), ys.ravel()], axis=-1)
  # boxsize requires coordinates strictly below 1.
  images = np.minimum(cmap.forward(points), np.nextafter(1.0, 0.0))
  tree = spatial.cKDTree(images, boxsize=1.0)
  pairs = tree.query_pairs(image_radius, output_type='ndarray')
  if len(pairs) == 0:
    return 0
  distances = torus_map_lib.torus_distance(points[pairs[:, 0]],
                                           points[pairs[:, 1]])
  return int(np.count_nonzero(distances > domain_radius))


def first_coordinate_drift(cmap: ConjugacyMap, points: Any,
                           n: int) -> float:
  """max circle-distance(H(F^n p)_1, m^n H(p)_1) over points."""
  points = torus_map_lib.wrap(points)
  image = cmap.torus_map.iterate(points, n)
  scaled = torus_map_lib.wrap(
      cmap.spectral.m**n * cmap.forward(points)[..., 0])
  return float(
      np.max(torus_map_lib.circle_distance(cmap.forward(image)[..., 0],
                                           scaled)))
