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
"""Unstable dimension variability and transitivity diagnostics.

Finite-time Lyapunov exponents (FTLEs) are computed by QR
reorthogonalization of the Jacobian product along an orbit window. Strong
transitivity is shadowed numerically by marking the cells that forward images
of a small disk reach.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

from absl import logging
import numpy as np
from typing import Any, Callable, Dict, List, Optional, Sequence, Text, Tuple

from torusx.dynamics import errors
from torusx.dynamics import orbits
from torusx.dynamics import torus_map as torus_map_lib
from torusx.utils import json_utils

# |det DF| below this is treated as a singular Jacobian.
SINGULAR_JACOBIAN_TOL = 1e-14
FULL_TORUS_RADIUS = math.sqrt(2.0) / 2.0
# Seeds per grid cell for the coverage test.
SEEDS_PER_CELL = 10
_WINDOW_CHUNK = 8192
_VERTICAL_FRAME = np.array([[0.0, -1.0], [1.0, 0.0]])

MapFn = Callable[[Callable[[Any], Any], Sequence[Any]], List[Any]]


def _serial_map(fn, items):
  return [fn(item) for item in items]


def schur_frame(jacobians: Any) -> np.ndarray:
  """Orthonormal frames whose first column spans the dominant eigenvector.

  This is the orthogonal factor of the real Schur form of each 2x2 matrix
  with the eigenvalue of largest modulus first. Matrices with complex or
  coincident eigenvalues get the identity frame.

  Args:
    jacobians: array of shape (..., 2, 2).

  Returns:
    Rotation matrices of shape (..., 2, 2).
  """
  j = np.asarray(jacobians, dtype=float)
  values, vectors = np.linalg.eig(j)
  real = (np.all(values.imag == 0.0, axis=-1) &
          (values[..., 0] != values[..., 1]))
  dominant = np.argmax(np.abs(values), axis=-1)
  vec = np.take_along_axis(vectors.real, dominant[..., None, None],
                           axis=-1)[..., 0]
  norm = np.linalg.norm(vec, axis=-1)
  usable = real & (norm > 0.0)
  safe = np.where(usable, norm, 1.0)
  q1 = np.where(usable[..., None], vec / safe[..., None], [1.0, 0.0])
  q1 = np.where((q1[..., :1] < 0.0) | ((q1[..., :1] == 0.0) &
                                      (q1[..., 1:] < 0.0)), -q1, q1)
  return _frame_from_column(q1)


def initial_frame(torus_map: torus_map_lib.TorusMap,
                  jacobians: Any) -> np.ndarray:
  """Default starting frame of a QR accumulation.

  When every Jacobian keeps the vertical direction invariant (skew maps) the
  frame (e2, -e1) stays exactly triangularizing, otherwise the Schur frame
  of the first Jacobian is used.
  """
  jacobians = np.asarray(jacobians, dtype=float)
  if (torus_map.matrix[0, 1] == 0 and
      torus_map.perturbation.first_component_independent_of_y()):
    return np.broadcast_to(_VERTICAL_FRAME, jacobians.shape).copy()
  return schur_frame(jacobians)


def _frame_from_column(q1: np.ndarray) -> np.ndarray:
  q2 = np.stack([-q1[..., 1], q1[..., 0]], axis=-1)
  return np.stack([q1, q2], axis=-1)


def _qr_step(jacobians: np.ndarray,
             frames: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
  """One reorthogonalization: J Q = Q' R, returns (Q', log diag R).

  Columns of Q' are flipped so that R has a non-negative diagonal.
  """
  new_frames, r = np.linalg.qr(jacobians @ frames)
  diagonal = np.diagonal(r, axis1=-2, axis2=-1)
  signs = np.where(diagonal < 0.0, -1.0, 1.0)
  new_frames = new_frames * signs[..., None, :]
  return new_frames, np.log(np.abs(diagonal))


def _check_jacobians(jacobians: np.ndarray, points: np.ndarray) -> np.ndarray:
  dets = np.linalg.det(jacobians)
  singular = np.abs(dets) < SINGULAR_JACOBIAN_TOL
  if np.any(singular):
    bad = np.atleast_2d(points)[np.argmax(np.atleast_1d(singular))]
    raise errors.SingularJacobianError(
        'DF is singular at {} (|det| < {})'.format(bad.tolist(),
                                                    SINGULAR_JACOBIAN_TOL))
  return dets


def _accumulate(torus_map: torus_map_lib.TorusMap,
                points_at: Callable[[int], np.ndarray], n: int,
                frames: Optional[np.ndarray]
               ) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
  """Sums of log|R_ii| and log|det DF| over n steps, batched over windows."""
  points = points_at(0)
  jacobians = torus_map.jacobian(points)
  if frames is None:
    frames = initial_frame(torus_map, jacobians)
  log_sums = np.zeros(points.shape[:-1] + (2,))
  log_det = np.zeros(points.shape[:-1])
  for step in range(n):
    if step:
      points = points_at(step)
      jacobians = torus_map.jacobian(points)
    dets = _check_jacobians(jacobians, points)
    frames, logs = _qr_step(jacobians, frames)
    log_sums += logs
    log_det += np.log(np.abs(dets))
  return log_sums, log_det, frames


class FtleAccumulation(json_utils.Jsonable):
  """Raw QR accumulation of one window.

  Attributes:
    log_diagonal: sums of log|R_ii| over the window, unsorted.
    log_det: sum of log|det DF| over the window.
    frame: orthonormal frame after the last step.
    start: first point of the window.
    end: F^n(start).
    n: window length.
  """

  def __init__(self, log_diagonal: Any, log_det: float, frame: Any,
               start: Any, end: Any, n: int):
    self.log_diagonal = np.asarray(log_diagonal, dtype=float)
    self.log_det = float(log_det)
    self.frame = np.asarray(frame, dtype=float)
    self.start = np.asarray(start, dtype=float)
    self.end = np.asarray(end, dtype=float)
    self.n = int(n)

  @property
  def exponents(self) -> Tuple[float, float]:
    high, low = sorted(self.log_diagonal / self.n, reverse=True)
    return float(high), float(low)

  def to_json_dict(self) -> Dict[Text, Any]:
    return {
        'log_diagonal': self.log_diagonal,
        'log_det': self.log_det,
        'frame': self.frame,
        'start': self.start,
        'end': self.end,
        'n': self.n,
    }


def ftle_accumulate(torus_map: torus_map_lib.TorusMap,
                    p: Any,
                    n: int,
                    q0: Optional[Any] = None) -> FtleAccumulation:
  """QR accumulation along p, F(p), ..., F^{n-1}(p).

  Passing the returned frame and end point into the next call concatenates
  windows exactly.

  Args:
    torus_map: the map.
    p: start point.
    n: window length, >= 1.
    q0: initial orthonormal frame, default `initial_frame`.

  Raises:
    ValidationError: if n < 1 or q0 is not orthonormal.
    SingularJacobianError: if |det DF| < 1e-14 along the window.
  """
  if n < 1:
    raise errors.ValidationError('N must be >= 1, got %d' % n)
  frame = None
  if q0 is not None:
    frame = np.asarray(q0, dtype=float)
    if frame.shape != (2, 2) or not np.allclose(frame.T @ frame, np.eye(2),
                                                atol=1e-9):
      raise errors.ValidationError('q0 must be an orthonormal 2x2 frame')
  orbit = torus_map.orbit(p, n)
  log_sums, log_det, frame = _accumulate(torus_map, lambda j: orbit[j], n,
                                         frame)
  return FtleAccumulation(log_sums, log_det, frame, orbit[0], orbit[-1], n)


def ftle_window(torus_map: torus_map_lib.TorusMap,
                p: Any,
                n: int,
                q0: Optional[Any] = None) -> Tuple[float, float]:
  """(lambda1, lambda2) with lambda1 >= lambda2 over an n-iterate window."""
  return ftle_accumulate(torus_map, p, n, q0).exponents


class FtleSeries(json_utils.Jsonable):
  """FTLE pairs of the windows along one orbit."""

  def __init__(self, window: int, stride: int, starts: Sequence[int],
               exponents: Any, counts: Sequence[int], dead_band: float = 0.0):
    self.window = int(window)
    self.stride = int(stride)
    self.starts = [int(s) for s in starts]
    self.exponents = np.asarray(exponents, dtype=float).reshape(-1, 2)
    self.counts = [int(c) for c in counts]
    self.dead_band = float(dead_band)

  def __len__(self):
    return len(self.starts)

  def rows(self) -> List[List[Any]]:
    """CSV rows: start, lambda1, lambda2, count."""
    return [[s, float(e[0]), float(e[1]), c]
            for s, e, c in zip(self.starts, self.exponents, self.counts)]

  def to_json_dict(self) -> Dict[Text, Any]:
    return {
        'window': self.window,
        'stride': self.stride,
        'dead_band': self.dead_band,
        'starts': self.starts,
        'exponents': self.exponents,
        'counts': self.counts,
    }


def positive_count_series(torus_map: torus_map_lib.TorusMap,
                          p0: Any,
                          total: int,
                          window: int,
                          stride: int = 1,
                          dead_band: float = 0.0,
                          map_fn: MapFn = _serial_map) -> FtleSeries:
  """FTLE windows starting at 0, stride, 2 stride, ... along one orbit.

  The orbit p0, ..., F^{total}(p0) is computed once; each window is
  accumulated from `initial_frame` at its own start. An exponent counts as
  positive when it exceeds dead_band.

  Args:
    torus_map: the map.
    p0: initial point.
    total: orbit length, >= window.
    window: window length N, >= 1.
    stride: distance between window starts, >= 1.
    dead_band: non-negative threshold for "positive".
    map_fn: ordered map over chunks of windows.

  Raises:
    ValidationError: on invalid sizes.
    SingularJacobianError: if |det DF| < 1e-14 along the orbit.
  """
  if window < 1:
    raise errors.ValidationError('N must be >= 1, got %d' % window)
  if total < window:
    raise errors.ValidationError(
        'total must be >= N, got total={} N={}'.format(total, window))
  if stride < 1:
    raise errors.ValidationError('stride must be >= 1, got %d' % stride)
  if dead_band < 0:
    raise errors.ValidationError(
        'dead_band must be >= 0, got {}'.format(dead_band))
  orbit = torus_map.orbit(p0, total)
  starts = np.arange(0, total - window + 1, stride)

  def run_chunk(chunk):
    log_sums, _, _ = _accumulate(torus_map, lambda j: orbit[chunk + j],
                                 window, None)
    return log_sums / window

  chunks = [starts[i:i + _WINDOW_CHUNK]
            for i in range(0, len(starts), _WINDOW_CHUNK)]
  exponents = np.concatenate(map_fn(run_chunk, chunks))
  exponents = -np.sort(-exponents, axis=-1)
  counts = np.count_nonzero(exponents > dead_band, axis=-1)
  series = FtleSeries(window, stride, starts, exponents, counts, dead_band)
  logging.info('FTLE series: %d windows of N=%d, counts %s', len(series),
               window, np.bincount(counts, minlength=3).tolist())
  return series


class OscillationStats(json_utils.Jsonable):
  """Summary of how the positive-FTLE count fluctuates.

  Attributes:
    frac_one: fraction of windows with exactly one positive exponent.
    frac_two: fraction of windows with two positive exponents.
    frac_other: remaining fraction (no positive exponent).
    switches: number of consecutive windows whose counts differ.
    min_lambda2, max_lambda2: range of the weaker exponent.
    windows: number of windows.
  """

  def __init__(self, frac_one: float, frac_two: float, frac_other: float,
               switches: int, min_lambda2: float, max_lambda2: float,
               windows: int):
    self.frac_one = float(frac_one)
    self.frac_two = float(frac_two)
    self.frac_other = float(frac_other)
    self.switches = int(switches)
    self.min_lambda2 = float(min_lambda2)
    self.max_lambda2 = float(max_lambda2)
    self.windows = int(windows)

  @property
  def switch_rate(self) -> float:
    """Switches per adjacent pair of windows."""
    return self.switches / max(self.windows - 1, 1)

  @property
  def oscillates(self) -> bool:
    """lambda2 takes both signs."""
    return self.min_lambda2 < 0.0 < self.max_lambda2

  def to_json_dict(self) -> Dict[Text, Any]:
    result = dict(self.__dict__)
    result['switch_rate'] = self.switch_rate
    result['oscillates'] = self.oscillates
    return result


def oscillation_stats(series: FtleSeries) -> OscillationStats:
  if not len(series):
    raise errors.EmptySetError('oscillation_stats of an empty series')
  counts = np.asarray(series.counts)
  frac_one = np.count_nonzero(counts == 1) / len(counts)
  frac_two = np.count_nonzero(counts == 2) / len(counts)
  lambda2 = series.exponents[:, 1]
  return OscillationStats(frac_one, frac_two, 1.0 - frac_one - frac_two,
                          np.count_nonzero(np.diff(counts)), lambda2.min(),
                          lambda2.max(), len(counts))


def disk_samples(center: Any, radius: float, count: int,
                 seed: int) -> np.ndarray:
  """count points uniformly distributed in a disk, wrapped to the torus."""
  rng = np.random.RandomState(seed)
  r = radius * np.sqrt(rng.uniform(size=count))
  angle = torus_map_lib.TWO_PI * rng.uniform(size=count)
  offsets = np.stack([r * np.cos(angle), r * np.sin(angle)], axis=-1)
  return torus_map_lib.wrap(np.asarray(center, dtype=float) + offsets)


def _cell_index(points: np.ndarray, grid_n: int) -> np.ndarray:
  cells = np.minimum((points * grid_n).astype(np.int64), grid_n - 1)
  return cells[..., 0] * grid_n + cells[..., 1]


class CoverageResult(json_utils.Jsonable):
  """Cells of a grid_n x grid_n partition reached by F^1(D), ..., F^n(D).

  Attributes:
    center, radius: the disk D.
    grid_n: partition size per axis.
    max_iter: number of iterates examined.
    samples: number of seed points in D.
    n_cover: first n at which every cell is reached, None if not covered.
    curve: fraction of reached cells after iterates 1..len(curve).
  """

  def __init__(self, center: Any, radius: float, grid_n: int, max_iter: int,
               samples: int, n_cover: Optional[int], curve: Sequence[float]):
    self.center = np.asarray(center, dtype=float)
    self.radius = float(radius)
    self.grid_n = int(grid_n)
    self.max_iter = int(max_iter)
    self.samples = int(samples)
    self.n_cover = None if n_cover is None else int(n_cover)
    self.curve = [float(c) for c in curve]

  @property
  def covered(self) -> bool:
    return self.n_cover is not None

  def rows(self) -> List[List[Any]]:
    """CSV rows: n, fraction."""
    return [[n, f] for n, f in enumerate(self.curve, start=1)]

  def to_json_dict(self) -> Dict[Text, Any]:
    return {
        'center': self.center,
        'radius': self.radius,
        'grid_n': self.grid_n,
        'max_iter': self.max_iter,
        'samples': self.samples,
        'N_cover': self.n_cover if self.covered else 'NotCovered',
        'curve': self.curve,
    }


def transitivity_cover(torus_map: torus_map_lib.TorusMap,
                       center: Any,
                       radius: float,
                       grid_n: int = 64,
                       max_iter: int = 60,
                       seed: int = 0,
                       samples: Optional[int] = None,
                       map_fn: MapFn = _serial_map) -> CoverageResult:
  """Numerical test that the forward images of a disk cover the torus.

  Every worker records, per cell, the first iterate at which one of its
  seeds lands there; the records merge by elementwise minimum, so the result
  does not depend on scheduling.

  Args:
    torus_map: the map.
    center: disk center.
    radius: disk radius, > 0.
    grid_n: cells per axis, >= 16.
    max_iter: iterates examined, >= 1.
    seed: seed of the disk samples.
    samples: number of seeds, default and minimum 10 * grid_n**2.
    map_fn: ordered map over chunks of seeds.
  """
  if not radius > 0:
    raise errors.ValidationError('radius must be > 0, got {}'.format(radius))
  if grid_n < 16:
    raise errors.ValidationError('grid_n must be >= 16, got %d' % grid_n)
  if max_iter < 1:
    raise errors.ValidationError('max_iter must be >= 1, got %d' % max_iter)
  minimum = SEEDS_PER_CELL * grid_n * grid_n
  samples = minimum if samples is None else samples
  if samples < minimum:
    raise errors.ValidationError(
        'samples must be >= 10 * grid_n^2 = {}, got {}'.format(
            minimum, samples))
  center = torus_map_lib.wrap(np.asarray(center, dtype=float))
  if radius >= FULL_TORUS_RADIUS:
    # D is the whole torus and F is onto.
    return CoverageResult(center, radius, grid_n, max_iter, samples, 1, [1.0])

  seeds = disk_samples(center, radius, samples, seed)
  never = max_iter + 1

  def first_hits(chunk):
    hits = np.full(grid_n * grid_n, never, dtype=np.int64)
    z = chunk
    for n in range(1, max_iter + 1):
      z = torus_map.evaluate(z)
      cells = _cell_index(z, grid_n)
      hits[cells] = np.minimum(hits[cells], n)
    return hits

  chunks = [seeds[i:i + _WINDOW_CHUNK]
            for i in range(0, samples, _WINDOW_CHUNK)]
  hits = np.min(np.stack(map_fn(first_hits, chunks)), axis=0)
  curve = [np.count_nonzero(hits <= n) / hits.size
           for n in range(1, max_iter + 1)]
  last = int(hits.max())
  n_cover = last if last <= max_iter else None
  if n_cover is not None:
    curve = curve[:n_cover]
  logging.info('Coverage of D(%s, %s) on a %d grid: N_cover=%s',
               center.tolist(), radius, grid_n, n_cover)
  return CoverageResult(center, radius, grid_n, max_iter, samples, n_cover,
                        curve)


def mixing_onset(torus_map: torus_map_lib.TorusMap,
                 center_u: Any,
                 center_v: Any,
                 radius: float,
                 max_iter: int = 60,
                 seed: int = 0,
                 samples: int = 4096) -> Optional[int]:
  """First n such that F^i(U) meets V for every sampled i in n..max_iter.

  U and V are disks of the given radius; F^i(U) is represented by the
  images of `samples` seeds.

  Returns:
    The onset iterate, or None if F^{max_iter}(U) misses V.
  """
  if not radius > 0:
    raise errors.ValidationError('radius must be > 0, got {}'.format(radius))
  if max_iter < 1:
    raise errors.ValidationError('max_iter must be >= 1, got %d' % max_iter)
  z = disk_samples(center_u, radius, samples, seed)
  target = torus_map_lib.wrap(np.asarray(center_v, dtype=float))
  meets = []
  for _ in range(max_iter):
    z = torus_map.evaluate(z)
    meets.append(bool(np.any(torus_map_lib.torus_distance(z, target) <
                             radius)))
  if not meets[-1]:
    return None
  misses = [i for i, hit in enumerate(meets, start=1) if not hit]
  return misses[-1] + 1 if misses else 1


def repeller_center(torus_map: torus_map_lib.TorusMap,
                    seed_grid: int = 16) -> np.ndarray:
  """The first period-1 repeller of the map.

  Raises:
    NotRepellerError: if Newton finds no fixed repeller.
  """
  for orbit in orbits.find_periodic(torus_map, 1, seed_grid):
    if orbit.orbit_class == orbits.OrbitClass.REPELLER:
      return orbit.point
  raise errors.NotRepellerError('map has no period-1 repeller')
