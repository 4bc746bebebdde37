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
"""Periodic orbits, invariant manifolds, preimage trees and snap-back points."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import fractions
import itertools

from absl import logging
import numpy as np
from scipy import sparse
from scipy import spatial
from scipy.sparse import csgraph
from typing import Any, Dict, Iterator, List, Optional, Sequence, Text, Tuple

from torusx.dynamics import conjugacy
from torusx.dynamics import errors
from torusx.dynamics import spectral as spectral_lib
from torusx.dynamics import torus_map as torus_map_lib
from torusx.utils import json_utils

# Newton acceptance residual for periodic orbits.
NEWTON_TOL = 1e-10
# Orbits closer than this (torus metric, some rotation) are the same orbit.
DEDUP_TOL = 1e-7
HYPERBOLICITY_MARGIN = 1e-6
SINGULAR_DET = 1e-8
_MAX_NEWTON_STEP = 0.25

SEEDING_GRID = 'grid'
SEEDING_FIBERS = 'fibers'
# Fibers when the matrix passes (E_M), grid otherwise.
SEEDING_AUTO = 'auto'
SEEDINGS = (SEEDING_AUTO, SEEDING_GRID, SEEDING_FIBERS)
DEFAULT_SEED_GRID = {SEEDING_GRID: 32, SEEDING_FIBERS: 8}


class OrbitClass(object):
  SADDLE = 'saddle'
  REPELLER = 'repeller'
  ATTRACTOR = 'attractor'
  NONHYPERBOLIC = 'nonhyperbolic'


def _unique_points(points: np.ndarray, tol: float) -> np.ndarray:
  """Indices of the first point of every tol-cluster (torus metric)."""
  if len(points) == 0:
    return np.zeros(0, dtype=int)
  tree = spatial.cKDTree(_clip(points), boxsize=1.0)
  pairs = tree.query_pairs(tol, output_type='ndarray')
  graph = sparse.coo_matrix(
      (np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])),
      shape=(len(points), len(points)))
  _, labels = csgraph.connected_components(graph, directed=False)
  _, first = np.unique(labels, return_index=True)
  return np.sort(first)


def _clip(points: np.ndarray) -> np.ndarray:
  # cKDTree with boxsize=1 rejects coordinates equal to 1.
  return np.minimum(torus_map_lib.wrap(points), np.nextafter(1.0, 0.0))


def periodic_circle_bases(m: int, n: int) -> List[fractions.Fraction]:
  """Base points j / (m^n - 1) mod 1 of the period-n vertical circles."""
  if abs(m) <= 1:
    raise errors.ValidationError('|m| must be > 1, got %d' % m)
  if n < 1:
    raise errors.ValidationError('n must be >= 1, got %d' % n)
  denominator = m**n - 1
  return sorted({
      fractions.Fraction(j, denominator) % 1 for j in range(abs(denominator))
  })


def classify_multipliers(multipliers: Sequence[complex],
                         margin: float = HYPERBOLICITY_MARGIN) -> Text:
  moduli = np.abs(np.asarray(multipliers))
  if np.any(np.abs(moduli - 1.0) <= margin):
    return OrbitClass.NONHYPERBOLIC
  if np.all(moduli > 1.0):
    return OrbitClass.REPELLER
  if np.all(moduli < 1.0):
    return OrbitClass.ATTRACTOR
  return OrbitClass.SADDLE


def _sorted_multipliers(matrix: np.ndarray) -> List[complex]:
  values = np.linalg.eigvals(matrix)
  order = sorted(range(len(values)),
                 key=lambda i: (-abs(values[i]), -values[i].real))
  return [complex(values[i]) for i in order]


def orbit_residual(torus_map: torus_map_lib.TorusMap,
                   points: np.ndarray) -> float:
  """max torus distance between F(p_i) and p_{i+1}, cyclically."""
  points = np.asarray(points, dtype=float)
  images = torus_map.evaluate(points)
  return float(
      np.max(torus_map_lib.torus_distance(images, np.roll(points, -1,
                                                          axis=0))))


def classify(torus_map: torus_map_lib.TorusMap,
             points: Any,
             tol: float = 1e-9,
             margin: float = HYPERBOLICITY_MARGIN
            ) -> Tuple[Text, List[complex]]:
  """Class and multipliers of the periodic orbit through points.

  Raises:
    NotPeriodicError: if the points do not close up within tol.
  """
  points = np.asarray(points, dtype=float).reshape(-1, 2)
  residual = orbit_residual(torus_map, points)
  if residual > tol:
    raise errors.NotPeriodicError(
        'points do not form a periodic orbit: residual {} > {}'.format(
            residual, tol))
  multipliers = _sorted_multipliers(torus_map.jacobian_product(points))
  return classify_multipliers(multipliers, margin), multipliers


class PeriodicOrbit(json_utils.Jsonable):
  """A periodic orbit p_0 -> ... -> p_{period-1} -> p_0.

  Attributes:
    points: torus points in orbit order, shape (period, 2), starting at the
      lexicographically smallest point.
    period: minimal period.
    lattice_shift: F-hat^period(p_0) - p_0, an integer vector.
    multipliers: eigenvalues of DF^period, sorted by decreasing modulus.
    orbit_class: one of OrbitClass.
    residual: closing residual in the torus metric.
  """

  def __init__(self, points: Any, period: int, lattice_shift: Sequence[int],
               multipliers: Sequence[complex], orbit_class: Text,
               residual: float):
    self.points = np.asarray(points, dtype=float).reshape(-1, 2)
    self.period = int(period)
    self.lattice_shift = tuple(int(c) for c in lattice_shift)
    self.multipliers = [complex(v) for v in multipliers]
    self.orbit_class = orbit_class
    self.residual = float(residual)

  @classmethod
  def from_points(cls, torus_map: torus_map_lib.TorusMap, points: Any,
                  tol: float = 1e-9) -> 'PeriodicOrbit':
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    orbit_class, multipliers = classify(torus_map, points, tol)
    shift = np.round(
        torus_map.lift_iterate(points[0], len(points)) - points[0])
    return cls(points, len(points), shift, multipliers, orbit_class,
               orbit_residual(torus_map, points))

  @property
  def point(self) -> np.ndarray:
    return self.points[0]

  @property
  def unstable_dimension(self) -> int:
    return int(
        sum(abs(v) > 1.0 + HYPERBOLICITY_MARGIN for v in self.multipliers))

  def __repr__(self):
    return 'PeriodicOrbit(period={}, class={}, point={})'.format(
        self.period, self.orbit_class, self.point.tolist())

  def to_json_dict(self) -> Dict[Text, Any]:
    return {
        'points': self.points,
        'period': self.period,
        'lattice_shift': list(self.lattice_shift),
        'multipliers': self.multipliers,
        'class': self.orbit_class,
        'unstable_dimension': self.unstable_dimension,
        'residual': self.residual,
    }

  @classmethod
  def from_json_dict(cls, dict_data: Dict[Text, Any]) -> 'PeriodicOrbit':
    return cls(dict_data['points'], dict_data['period'],
               dict_data['lattice_shift'],
               [complex(*v) for v in dict_data['multipliers']],
               dict_data['class'], dict_data['residual'])


def _grid_seeds(seed_grid: int) -> np.ndarray:
  axis = np.arange(seed_grid) / seed_grid
  xs, ys = np.meshgrid(axis, axis, indexing='ij')
  return np.stack([xs.ravel(), ys.ravel()], axis=-1)


def _fiber_seeds(torus_map: torus_map_lib.TorusMap, period: int,
                 seed_grid: int) -> np.ndarray:
  """seed_grid points on each fiber Phi^-1(j / (m^period - 1))."""
  data = spectral_lib.eigen_data(torus_map.matrix)
  tiling = spectral_lib.build_tiling([c // data.k for c in data.v_m_left])
  thetas = np.array(
      [float(b) for b in periodic_circle_bases(data.m, period)])
  offsets = np.arange(seed_grid) / seed_grid
  anchors = offsets[:, None] * np.asarray(tiling.w1, dtype=float)
  theta_grid = np.repeat(thetas, seed_grid)
  anchor_grid = np.tile(anchors, (len(thetas), 1))
  return conjugacy.fiber_points(torus_map, theta_grid, anchor_grid)


def _newton_periodic(torus_map: torus_map_lib.TorusMap, seeds: np.ndarray,
                     period: int, max_iter: int) -> Tuple[np.ndarray,
                                                          np.ndarray]:
  """Newton on the wrapped residual F^p(z) - z, vectorized over seeds."""
  z = torus_map_lib.wrap(seeds)
  eye = np.eye(2)
  for _ in range(max_iter):
    orbit = torus_map.orbit(z, period)
    residual = torus_map_lib.wrap_signed(orbit[-1] - z)
    if np.all(np.linalg.norm(residual, axis=-1) < 1e-3 * NEWTON_TOL):
      break
    jac = torus_map.jacobian_product(orbit[:-1]) - eye
    solvable = np.abs(np.linalg.det(jac)) > 1e-14
    step = np.zeros_like(z)
    step[solvable] = np.linalg.solve(jac[solvable],
                                     residual[solvable][..., None])[..., 0]
    norm = np.linalg.norm(step, axis=-1, keepdims=True)
    step = np.where(norm > _MAX_NEWTON_STEP,
                    step * (_MAX_NEWTON_STEP / np.maximum(norm, 1e-300)),
                    step)
    z = torus_map_lib.wrap(z - step)
  final = torus_map_lib.torus_distance(torus_map.iterate(z, period), z)
  return z, final


def _has_minimal_period(torus_map: torus_map_lib.TorusMap, z: np.ndarray,
                        period: int) -> np.ndarray:
  minimal = np.ones(len(z), dtype=bool)
  image = z
  for d in range(1, period):
    image = torus_map.evaluate(image)
    if period % d == 0:
      minimal &= torus_map_lib.torus_distance(image, z) > DEDUP_TOL
  return minimal


def _canonical_rotation(points: np.ndarray) -> np.ndarray:
  start = np.lexsort((points[:, 1], points[:, 0]))[0]
  return np.roll(points, -start, axis=0)


def dedup_orbits(torus_map: torus_map_lib.TorusMap, starts: np.ndarray,
                 period: int) -> List[np.ndarray]:
  """Groups orbit start points into distinct orbits.

  Two starts belong to the same orbit when any points of their orbits are
  within DEDUP_TOL; consecutive points of one orbit are linked so that the
  components of the proximity graph are whole orbits.

  Returns:
    One point array per orbit, rotated to start at its smallest point and
    sorted by that point.
  """
  if len(starts) == 0:
    return []
  orbit = torus_map.orbit(starts, period - 1)  # (period, n, 2)
  n = len(starts)
  flat = np.transpose(orbit, (1, 0, 2)).reshape(-1, 2)
  tree = spatial.cKDTree(_clip(flat), boxsize=1.0)
  pairs = tree.query_pairs(DEDUP_TOL, output_type='ndarray')
  chain = np.arange(n * period).reshape(n, period)
  chain_pairs = np.stack([chain[:, :-1].ravel(), chain[:, 1:].ravel()],
                         axis=-1)
  edges = np.concatenate([pairs.reshape(-1, 2), chain_pairs], axis=0)
  graph = sparse.coo_matrix(
      (np.ones(len(edges)), (edges[:, 0], edges[:, 1])),
      shape=(n * period, n * period))
  _, labels = csgraph.connected_components(graph, directed=False)
  _, first = np.unique(labels[chain[:, 0]], return_index=True)
  orbits = [
      _canonical_rotation(orbit[:, i, :]) for i in np.sort(first)
  ]
  orbits.sort(key=lambda pts: (pts[0, 0], pts[0, 1]))
  return orbits


def resolve_seeding(torus_map: torus_map_lib.TorusMap, seeding: Text) -> Text:
  """The concrete seeding ('grid' or 'fibers') that `seeding` stands for.

  Raises:
    ValidationError: if seeding is not one of SEEDINGS.
  """
  if seeding not in SEEDINGS:
    raise errors.ValidationError(
        'seeding must be one of {}, got {}'.format(list(SEEDINGS), seeding))
  if seeding != SEEDING_AUTO:
    return seeding
  if spectral_lib.check_em(torus_map.matrix) is None:
    return SEEDING_FIBERS
  return SEEDING_GRID


def find_periodic(torus_map: torus_map_lib.TorusMap,
                  period: int,
                  seed_grid: Optional[int] = None,
                  seeding: Text = SEEDING_GRID,
                  max_iter: int = 60) -> List[PeriodicOrbit]:
  """Finds periodic orbits of minimal period `period` by Newton's method.

  Newton runs on the wrapped residual F^p(z) - z, which handles every
  lattice shift at once. Seeds come from a seed_grid x seed_grid grid, or
  with seeding='fibers' from seed_grid points on each fiber of Phi over the
  period-p points of x -> mx. A fixed grid misses more orbits as the period
  grows; fiber seeding keeps up with the m^p growth of the orbit count.

  Args:
    torus_map: the map.
    period: minimal period, >= 1.
    seed_grid: seeds per axis (grid) or per fiber (fibers), >= 2; None
      takes DEFAULT_SEED_GRID of the resolved seeding.
    seeding: 'grid', 'fibers' or 'auto' (see `resolve_seeding`).
    max_iter: Newton iterations.

  Returns:
    Distinct orbits with residual < NEWTON_TOL, sorted by first point.
  """
  if period < 1:
    raise errors.ValidationError('period must be >= 1, got %d' % period)
  seeding = resolve_seeding(torus_map, seeding)
  if seed_grid is None:
    seed_grid = DEFAULT_SEED_GRID[seeding]
  if seed_grid < 2:
    raise errors.ValidationError('seed_grid must be >= 2, got %d' % seed_grid)
  if seeding == SEEDING_GRID:
    seeds = _grid_seeds(seed_grid)
  else:
    seeds = _fiber_seeds(torus_map, period, seed_grid)

  z, residual = _newton_periodic(torus_map, seeds, period, max_iter)
  converged = residual < NEWTON_TOL
  accepted = converged & _has_minimal_period(torus_map, z, period)
  if np.count_nonzero(~converged):
    logging.warning('Period %d: %d of %d Newton seeds did not converge',
                    period, np.count_nonzero(~converged), len(seeds))
  candidates = z[accepted]
  keep = _unique_points(candidates, DEDUP_TOL)
  result = []
  for points in dedup_orbits(torus_map, candidates[keep], period):
    orbit = PeriodicOrbit.from_points(torus_map, points, tol=1e-9)
    if orbit.residual < 1e-9:
      result.append(orbit)
  if not result:
    logging.warning('Period %d: no orbits found with %s seeding', period,
                    seeding)
  logging.info('Period %d (%s seeding): %d orbits', period, seeding,
               len(result))
  return result


def covering_radius(points: Any, grid_n: int = 200) -> float:
  """max over a grid_n x grid_n grid of the torus distance to points.

  Raises:
    EmptySetError: if points is empty.
  """
  points = np.asarray(points, dtype=float).reshape(-1, 2)
  if len(points) == 0:
    raise errors.EmptySetError('covering_radius of an empty point set')
  tree = spatial.cKDTree(_clip(points), boxsize=1.0)
  distances, _ = tree.query(_grid_seeds(grid_n))
  return float(np.max(distances))


class ManifoldPolyline(json_utils.Jsonable):
  """A finite piece of the unstable manifold of a saddle orbit point.

  Attributes:
    orbit: the saddle.
    side: +1 or -1, branch of the unstable eigenvector.
    points: torus points, shape (n, 2).
    lifted: the same points in the plane, continuous along the curve.
    arclength: length of the lifted polyline.
    piece_lengths: length of each iterate of the fundamental segment.
    direction: unit unstable eigenvector at the seed.
    return_period: period of the return map used (2 period when the
      unstable multiplier is negative).
  """

  def __init__(self, orbit: PeriodicOrbit, side: int, lifted: np.ndarray,
               piece_lengths: Sequence[float], direction: np.ndarray,
               return_period: int):
    self.orbit = orbit
    self.side = int(side)
    self.lifted = np.asarray(lifted, dtype=float)
    self.points = torus_map_lib.wrap(self.lifted)
    self.piece_lengths = [float(v) for v in piece_lengths]
    self.arclength = float(sum(self.piece_lengths))
    self.direction = np.asarray(direction, dtype=float)
    self.return_period = int(return_period)

  def to_json_dict(self) -> Dict[Text, Any]:
    return {
        'side': self.side,
        'n_points': len(self.points),
        'arclength': self.arclength,
        'piece_lengths': self.piece_lengths,
        'direction': self.direction,
        'return_period': self.return_period,
        'orbit': self.orbit,
    }


def unstable_manifold(torus_map: torus_map_lib.TorusMap,
                      saddle: PeriodicOrbit,
                      target_arclength: float,
                      side: int = 1,
                      seed_eps: float = 1e-5,
                      chord_tol: float = 1e-3,
                      angle_tol: float = 0.2,
                      max_points: int = 200000) -> ManifoldPolyline:
  """Grows W^u of saddle.point by iterating a fundamental segment.

  The fundamental segment {P + s e_u : s in [seed_eps, lambda seed_eps]}
  is parametrized by s. Its k-th image under the return map G (F^p, or
  F^2p for a negative unstable multiplier, lifted so that G(P) = P) is
  recomputed from the parameters and refined where consecutive images are
  farther apart than chord_tol or turn by more than angle_tol.

  Raises:
    NotSaddleError: if saddle is not a saddle.
  """
  if saddle.orbit_class != OrbitClass.SADDLE:
    raise errors.NotSaddleError('unstable_manifold needs a saddle, got {}'
                                .format(saddle.orbit_class))
  if side not in (1, -1):
    raise errors.ValidationError('side must be +1 or -1, got {}'.format(side))
  p0 = saddle.point
  jac = torus_map.jacobian_product(torus_map.orbit(p0, saddle.period - 1))
  values, vectors = np.linalg.eig(jac)
  index = int(np.argmax(np.abs(values)))
  lam = float(values[index].real)
  direction = np.real(vectors[:, index])
  direction = side * direction / np.linalg.norm(direction)
  steps = saddle.period
  if lam < 0:
    steps *= 2
    lam = lam * lam
  shift = np.round(torus_map.lift_iterate(p0, steps) - p0)

  def image(s, k):
    z = p0 + s[:, None] * direction
    for _ in range(k):
      z = torus_map.lift_iterate(z, steps) - shift
    return z

  params = np.linspace(seed_eps, lam * seed_eps, 17)
  pieces, lengths = [], []
  total = 0.0
  k = 0
  while total < target_arclength:
    s = params
    while True:
      z = image(s, k)
      chords = np.linalg.norm(np.diff(z, axis=0), axis=1)
      segments = np.diff(z, axis=0)
      cross = (segments[:-1, 0] * segments[1:, 1] -
               segments[:-1, 1] * segments[1:, 0])
      turn = np.abs(np.arctan2(cross, np.sum(segments[:-1] * segments[1:],
                                             axis=1)))
      refine = chords > chord_tol
      refine[:-1] |= turn > angle_tol
      refine[1:] |= turn > angle_tol
      if not np.any(refine) or len(s) > max_points:
        break
      midpoints = 0.5 * (s[:-1] + s[1:])[refine]
      s = np.sort(np.concatenate([s, midpoints]))
    pieces.append(z if k == 0 else z[1:])
    lengths.append(float(np.sum(chords)))
    total += lengths[-1]
    k += 1
    if sum(len(p) for p in pieces) > max_points:
      logging.warning('Unstable manifold stopped at %d points, arclength %s',
                      max_points, total)
      break
  return ManifoldPolyline(saddle, side, np.concatenate(pieces), lengths,
                          direction, steps)


def _coset_representatives(matrix: np.ndarray) -> np.ndarray:
  """Integer points c with M^-1 c in [0, 1)^2, one per class of Z^2/MZ^2."""
  corners = np.array([[0, 0], [1, 0], [0, 1], [1, 1]]) @ matrix.T
  lo, hi = corners.min(axis=0), corners.max(axis=0)
  xs = np.arange(lo[0], hi[0] + 1)
  ys = np.arange(lo[1], hi[1] + 1)
  grid = np.array(list(itertools.product(xs, ys)), dtype=np.int64)
  (a, b), (c, d) = matrix.tolist()
  det = a * d - b * c
  # M^-1 = adj(M) / det; test 0 <= adj(M) c / det < 1 exactly.
  adjugate = np.array([[d, -b], [-c, a]], dtype=np.int64)
  numerators = grid @ adjugate.T * np.sign(det)
  inside = np.all((numerators >= 0) & (numerators < abs(det)), axis=1)
  reps = grid[inside].astype(float)
  assert len(reps) == abs(det), reps
  return reps


def preimages(torus_map: torus_map_lib.TorusMap,
              targets: Any,
              tol: float = 1e-12,
              max_iter: int = 50) -> Tuple[np.ndarray, np.ndarray]:
  """All preimages F^-1(w) of each target w.

  Newton on F-hat(z) = w + c is started at M^-1 (w + c) for every coset
  representative c of Z^2 / M Z^2, so each lift branch is followed
  separately.

  Returns:
    (points, parents): preimage torus points and the index of their target.
  """
  targets = np.asarray(targets, dtype=float).reshape(-1, 2)
  reps = _coset_representatives(torus_map.matrix)
  lifted_targets = (targets[:, None, :] + reps[None, :, :]).reshape(-1, 2)
  parents = np.repeat(np.arange(len(targets)), len(reps))
  inverse = np.linalg.inv(torus_map.matrix.astype(float))
  z = lifted_targets @ inverse.T
  for _ in range(max_iter):
    residual = torus_map.lift_evaluate(z) - lifted_targets
    if np.all(np.abs(residual) < tol):
      break
    z = z - np.linalg.solve(torus_map.jacobian(z), residual[..., None])[..., 0]
  error = np.max(np.abs(torus_map.lift_evaluate(z) - lifted_targets), axis=1)
  converged = error < 1e3 * tol
  if not np.all(converged):
    logging.warning('%d of %d preimage solves did not converge',
                    np.count_nonzero(~converged), len(z))
  return torus_map_lib.wrap(z[converged]), parents[converged]


class PreimageTree(json_utils.Jsonable):
  """Breadth-first preimages of a target point; levels[0] is the target."""

  def __init__(self, levels: List[np.ndarray]):
    self.levels = levels

  @property
  def depth(self) -> int:
    return len(self.levels) - 1

  @property
  def points(self) -> np.ndarray:
    """All preimages of levels 1..depth."""
    if self.depth == 0:
      return np.zeros((0, 2))
    return np.concatenate(self.levels[1:])

  @property
  def level_counts(self) -> List[int]:
    return [len(level) for level in self.levels]

  def to_json_dict(self) -> Dict[Text, Any]:
    return {'depth': self.depth, 'level_counts': self.level_counts}


def _target_point(target: Any) -> np.ndarray:
  if isinstance(target, PeriodicOrbit):
    return target.point
  return torus_map_lib.wrap(np.asarray(target, dtype=float).reshape(2))


def iter_preimage_levels(torus_map: torus_map_lib.TorusMap,
                         target: Any,
                         depth: int,
                         per_level: Optional[int] = None,
                         seed: int = 0) -> Iterator[np.ndarray]:
  """Yields preimage levels 1..depth of target, lazily.

  Each level is deduplicated; with per_level set, levels larger than
  per_level are subsampled with a seeded generator.
  """
  rng = np.random.RandomState(seed)
  level = _target_point(target).reshape(1, 2)
  for _ in range(depth):
    points, _ = preimages(torus_map, level)
    points = points[_unique_points(points, 1e-9)]
    if per_level is not None and len(points) > per_level:
      chosen = np.sort(rng.choice(len(points), per_level, replace=False))
      points = points[chosen]
    level = points
    yield level


def stable_set_sample(torus_map: torus_map_lib.TorusMap,
                      target: Any,
                      depth: int,
                      per_level: Optional[int] = None,
                      seed: int = 0) -> PreimageTree:
  """Preimage tree of a periodic point, a sample of its stable set.

  Args:
    torus_map: the map.
    target: a PeriodicOrbit (saddle or repeller) or a torus point.
    depth: number of preimage levels, >= 1.
    per_level: optional cap on the nodes kept per level.
    seed: seed of the per-level subsampling.
  """
  if depth < 1:
    raise errors.ValidationError('depth must be >= 1, got %d' % depth)
  levels = [_target_point(target).reshape(1, 2)]
  levels.extend(iter_preimage_levels(torus_map, target, depth, per_level,
                                     seed))
  logging.info('Preimage tree level counts: %s',
               [len(level) for level in levels])
  return PreimageTree(levels)


class SnapbackCertificate(json_utils.Jsonable):
  """A point q near a repeller R with F^n(q) = R and DF^n(q) invertible."""

  def __init__(self, repeller: PeriodicOrbit, q: Any, n: int, jac_det: float,
               dist_to_r: float, residual: float):
    self.repeller = repeller
    self.q = np.asarray(q, dtype=float)
    self.n = int(n)
    self.jac_det = float(jac_det)
    self.dist_to_r = float(dist_to_r)
    self.residual = float(residual)

  def to_json_dict(self) -> Dict[Text, Any]:
    return {
        'repeller': self.repeller,
        'q': self.q,
        'n': self.n,
        'jac_det': self.jac_det,
        'dist_to_R': self.dist_to_r,
        'residual': self.residual,
    }


def _polish_preimage(torus_map: torus_map_lib.TorusMap, q: np.ndarray,
                     target: np.ndarray, n: int) -> np.ndarray:
  """Newton on F^n(q) = target in the wrapped residual."""
  for _ in range(8):
    orbit = torus_map.orbit(q, n)
    residual = torus_map_lib.wrap_signed(orbit[-1] - target)
    if np.max(np.abs(residual)) < 1e-14:
      break
    jac = torus_map.jacobian_product(orbit[:-1])
    q = torus_map_lib.wrap(q - np.linalg.solve(jac, residual))
  return q


def snapback_search(torus_map: torus_map_lib.TorusMap,
                    repeller: PeriodicOrbit,
                    neighborhood_r: float,
                    depth: int,
                    per_level: Optional[int] = None,
                    seed: int = 0) -> Optional[SnapbackCertificate]:
  """Searches the preimage tree of a repeller for a snap-back point.

  Candidates at level n satisfy 1e-9 < dist(q, R) < neighborhood_r and
  |det DF^n(q)| > SINGULAR_DET. The first level with a candidate wins;
  within it the closest candidate.

  Returns:
    A certificate, or None when no candidate exists up to depth.

  Raises:
    NotRepellerError: if repeller is not a repeller.
  """
  if repeller.orbit_class != OrbitClass.REPELLER:
    raise errors.NotRepellerError('snapback_search needs a repeller, got {}'
                                  .format(repeller.orbit_class))
  if not neighborhood_r > 0:
    raise errors.ValidationError(
        'neighborhood_r must be > 0, got {}'.format(neighborhood_r))
  r_point = repeller.point
  levels = iter_preimage_levels(torus_map, repeller, depth, per_level, seed)
  for n, level in enumerate(levels, start=1):
    distances = torus_map_lib.torus_distance(level, r_point)
    mask = (distances > 1e-9) & (distances < neighborhood_r)
    if not np.any(mask):
      continue
    candidates = level[mask]
    order = np.argsort(distances[mask], kind='stable')
    for i in order:
      q = _polish_preimage(torus_map, candidates[i], r_point, n)
      orbit = torus_map.orbit(q, n)
      jac_det = float(np.linalg.det(torus_map.jacobian_product(orbit[:-1])))
      if abs(jac_det) <= SINGULAR_DET:
        continue
      residual = float(torus_map_lib.torus_distance(orbit[-1], r_point))
      certificate = SnapbackCertificate(
          repeller, q, n, jac_det,
          float(torus_map_lib.torus_distance(q, r_point)), residual)
      logging.info('Snap-back point at level %d, distance %s', n,
                   certificate.dist_to_r)
      return certificate
  logging.info('No snap-back point within r=%s up to depth %d',
               neighborhood_r, depth)
  return None
