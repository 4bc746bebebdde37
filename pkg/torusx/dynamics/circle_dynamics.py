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
"""Rotation numbers and mode locking on invariant vertical circles.

A circle map is represented by a degree-one lift Y: R -> R with
Y(y + 1) = Y(y) + 1. For a skew map F(x, y) = (mx, ax + y + g(x, y)) every
vertical circle over a period-n point x of x -> mx is invariant under F^n;
`restrict` builds the lift of F^n on that circle.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import fractions
import math

from absl import logging
import numpy as np
from scipy import optimize
from typing import (Any, Callable, Dict, Iterable, List, Optional, Sequence,
                    Text, Tuple)

from torusx.dynamics import errors
from torusx.dynamics import torus_map as torus_map_lib
from torusx.utils import json_utils

METHOD_PLAIN = 'plain'
METHOD_WEIGHTED = 'weighted'

LOCKED = 'locked'
QUASIPERIODIC = 'quasiperiodic'
UNDETERMINED = 'undetermined'

DEFAULT_ITERS = 10000
DEFAULT_MAX_DENOMINATOR = 64
DEFAULT_QP_THRESHOLD = 3.0
DEFAULT_ROOT_GRID = 512
# Diagnostic value reported once successive estimates agree to rounding.
_CONVERGED_DIAGNOSTIC = 64.0
_ROUNDING_FLOOR = 1e-13
_RECURRENCE_TOL = 1e-10

LiftFn = Callable[[np.ndarray], np.ndarray]


class CircleMap(object):
  """A circle map given by a vectorized degree-one lift.

  Attributes:
    name: label used in logs and outputs.
    spec: description of where the map came from (JSON-serializable).
  """

  def __init__(self,
               lift: LiftFn,
               derivative: Optional[LiftFn] = None,
               name: Text = 'circle map',
               spec: Optional[Dict[Text, Any]] = None):
    self._lift = lift
    self._derivative = derivative
    self.name = name
    self.spec = spec or {'name': name}

  def __call__(self, y: Any) -> np.ndarray:
    return self._lift(np.asarray(y, dtype=float))

  def derivative(self, y: Any) -> np.ndarray:
    y = np.asarray(y, dtype=float)
    if self._derivative is not None:
      return self._derivative(y)
    h = 1e-6
    return (self._lift(y + h) - self._lift(y - h)) / (2 * h)

  def lift_iterate(self, y: Any, q: int) -> np.ndarray:
    """Y^q(y), evaluating the lift on [0, 1) representatives."""
    z = np.asarray(y, dtype=float)
    for _ in range(q):
      whole = np.floor(z)
      z = self._lift(z - whole) + whole
    return z

  def multiplier(self, y: Any, q: int) -> np.ndarray:
    """(Y^q)'(y) as a product of derivatives along the orbit."""
    z = torus_map_lib.wrap(y)
    product = np.ones_like(z)
    for _ in range(q):
      product = product * self.derivative(z)
      z = torus_map_lib.wrap(self._lift(z))
    return product

  def increments(self, y0: float, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Reduced orbit y_0..y_n in [0, 1) and lift increments Y(y_i) - y_i."""
    ys = np.empty(n + 1)
    steps = np.empty(n)
    y = float(torus_map_lib.wrap(y0))
    lift = self._lift
    for i in range(n):
      ys[i] = y
      image = float(lift(np.float64(y)))
      steps[i] = image - y
      y = image - math.floor(image)
      if y >= 1.0:
        y = 0.0
    ys[n] = y
    return ys, steps


def rigid_rotation(rho: float) -> CircleMap:
  return CircleMap(lambda y: y + rho, lambda y: np.ones_like(y),
                   name='rotation({})'.format(rho),
                   spec={'name': 'rigid_rotation', 'rho': rho})


def arnold_map(omega: float, b: float) -> CircleMap:
  """y -> y + omega + b sin(2 pi y)."""
  two_pi = torus_map_lib.TWO_PI
  return CircleMap(
      lambda y: y + omega + b * np.sin(two_pi * y),
      lambda y: 1.0 + two_pi * b * np.cos(two_pi * y),
      name='arnold({}, {})'.format(omega, b),
      spec={'name': 'arnold_map', 'omega': omega, 'b': b})


def invert_lift(h: LiftFn, dh: LiftFn, iterations: int = 50) -> LiftFn:
  """Inverse of an increasing degree-one lift by vectorized Newton."""

  def inverse(y):
    y = np.asarray(y, dtype=float)
    z = y.copy()
    for _ in range(iterations):
      step = (h(z) - y) / dh(z)
      z = z - step
      if np.all(np.abs(step) < 1e-15):
        break
    return z

  return inverse


def conjugate_circle_map(cmap: CircleMap,
                         h: LiftFn,
                         dh: LiftFn,
                         h_inv: Optional[LiftFn] = None) -> CircleMap:
  """h o cmap o h^-1 for an increasing degree-one lift h."""
  h_inv = h_inv or invert_lift(h, dh)

  def lift(y):
    return h(cmap(h_inv(y)))

  def derivative(y):
    inner = h_inv(y)
    return dh(cmap(inner)) * cmap.derivative(inner) / dh(inner)

  return CircleMap(lift, derivative, name='conjugate({})'.format(cmap.name),
                   spec={'name': 'conjugate', 'of': cmap.spec})


def _circle_base(base_x: Any, m: int, n: int) -> fractions.Fraction:
  denominator = m**n - 1
  if isinstance(base_x, (int, fractions.Fraction)):
    value = fractions.Fraction(base_x)
  else:
    value = float(base_x)
  exact = fractions.Fraction(int(round(value * denominator)), denominator) % 1
  if torus_map_lib.circle_distance(float(exact), float(value)) > 1e-12:
    raise errors.NotInvariantCircleError(
        'x={} is not a period-{} point of x -> {}x (m^n x != x mod 1)'.format(
            base_x, n, m))
  return exact


def skew_form_violation(torus_map: torus_map_lib.TorusMap) -> Optional[Text]:
  """Why vertical circles are not permuted by the map, or None."""
  matrix = torus_map.matrix
  if matrix[0, 1] != 0 or matrix[1, 1] != 1:
    return 'matrix {} is not of the form [[m, 0], [a, 1]]'.format(
        matrix.tolist())
  if not torus_map.perturbation.first_component_vanishes():
    return 'vertical circles are invariant only when G_1 = 0'
  if abs(int(matrix[0, 0])) <= 1:
    return '|m| must be > 1, got %d' % int(matrix[0, 0])
  return None


def restrict(torus_map: torus_map_lib.TorusMap, base_x: Any,
             n: int) -> CircleMap:
  """The lift of F^n on the invariant vertical circle over base_x.

  Args:
    torus_map: a skew map F(x, y) = (mx, ax + y + g(x, y)) with G_1 = 0.
    base_x: a period-n point j / (m^n - 1) of x -> mx.
    n: period, >= 1.

  Raises:
    NotInvariantCircleError: if the map is not in skew form or base_x is not
      a period-n point of the base map.
  """
  if n < 1:
    raise errors.ValidationError('n must be >= 1, got %d' % n)
  violation = skew_form_violation(torus_map)
  if violation:
    raise errors.NotInvariantCircleError(violation)
  matrix = torus_map.matrix
  perturbation = torus_map.perturbation
  m, a = int(matrix[0, 0]), int(matrix[1, 0])
  x0 = _circle_base(base_x, m, n)
  xs = [x0]
  for _ in range(n - 1):
    xs.append((m * xs[-1]) % 1)

  terms = perturbation.terms
  k_y = np.array([term.frequency[1] for term in terms], dtype=float)
  c_y = np.array([term.coefficient[1] for term in terms], dtype=float)
  two_pi = torus_map_lib.TWO_PI
  # Per step: constant drift and the phases of every term at x_i.
  drift = np.array([a * float(x) + perturbation.t * perturbation.shift[1]
                    for x in xs])
  phases = np.array([[two_pi * term.frequency[0] * float(x) + term.phase
                      for term in terms] for x in xs]).reshape(n, len(terms))

  def lift(y):
    y = np.asarray(y, dtype=float)
    for i in range(n):
      step = drift[i]
      if len(terms):
        step = step + np.sin(two_pi * y[..., None] * k_y + phases[i]) @ c_y
      y = y + step
    return y

  def derivative(y):
    y = np.asarray(y, dtype=float)
    product = np.ones_like(y)
    for i in range(n):
      if len(terms):
        arg = two_pi * y[..., None] * k_y + phases[i]
        product = product * (1.0 + np.cos(arg) @ (two_pi * k_y * c_y))
        y = y + drift[i] + np.sin(arg) @ c_y
      else:
        y = y + drift[i]
    return product

  spec = {
      'base_x': x0,
      'period': n,
      'x_orbit': xs,
      't': perturbation.t,
  }
  return CircleMap(lift, derivative,
                   name='circle(x={}, n={})'.format(x0, n), spec=spec)


class RotationEstimate(json_utils.Jsonable):
  """rho is the lift value; rho_mod1 the circle value."""

  def __init__(self, rho: float, diagnostic: float, iters: int,
               method: Text):
    self.rho = float(rho)
    self.diagnostic = float(diagnostic)
    self.iters = int(iters)
    self.method = method

  @property
  def rho_mod1(self) -> float:
    return float(torus_map_lib.wrap(self.rho))


def _weighted_average(steps: np.ndarray) -> float:
  n = len(steps)
  s = (np.arange(n) + 1.0) / (n + 1.0)
  weights = np.exp(-1.0 / (s * (1.0 - s)))
  return float(weights @ steps / weights.sum())


def _estimate(steps: np.ndarray, method: Text) -> float:
  if method == METHOD_WEIGHTED:
    return _weighted_average(steps)
  return float(np.mean(steps))


def _is_recurrent(ys: np.ndarray, max_q: int) -> bool:
  """Whether the orbit has settled on a periodic orbit of period <= max_q."""
  n = len(ys) - 1
  for q in range(1, min(max_q, n) + 1):
    if torus_map_lib.circle_distance(ys[n], ys[n - q]) < _RECURRENCE_TOL:
      return True
  return False


def rotation_number(cmap: CircleMap,
                    y0: float = 0.0,
                    iters: int = DEFAULT_ITERS,
                    method: Text = METHOD_WEIGHTED,
                    max_recurrence: int = DEFAULT_MAX_DENOMINATOR
                   ) -> RotationEstimate:
  """Estimates the rotation number from the orbit of y0.

  The diagnostic is the smallest of the last two values
  log2(d_j / d_{j+1}), where d_j are differences of the estimates over the
  first N/8, N/4, N/2 and N iterates. Super-polynomial convergence of the
  weighted average gives large values; estimates that agree to rounding
  give 64. An orbit that has settled on a periodic orbit gets diagnostic 0.

  Args:
    cmap: the circle map.
    y0: initial point.
    iters: number of iterates, >= 100.
    method: 'plain' or 'weighted'.
    max_recurrence: largest period checked for recurrence.
  """
  if iters < 100:
    raise errors.ValidationError('iters must be >= 100, got %d' % iters)
  if method not in (METHOD_PLAIN, METHOD_WEIGHTED):
    raise errors.ValidationError('unknown method {}'.format(method))
  ys, steps = cmap.increments(y0, iters)
  estimates = [_estimate(steps[:iters // d], method) for d in (8, 4, 2, 1)]
  deltas = np.abs(np.diff(estimates))
  ratios = []
  for before, after in zip(deltas[:-1], deltas[1:]):
    if after <= _ROUNDING_FLOOR:
      ratios.append(_CONVERGED_DIAGNOSTIC)
    else:
      ratios.append(math.log2(max(before, _ROUNDING_FLOOR) / after))
  diagnostic = min(ratios)
  if _is_recurrent(ys, max_recurrence):
    diagnostic = 0.0
  return RotationEstimate(estimates[-1], diagnostic, iters, method)


class CircleAnalysis(json_utils.Jsonable):
  """Classification of a circle map.

  Attributes:
    spec: where the circle map came from.
    rho: lift rotation number.
    diagnostic: convergence exponent of the weighted estimate.
    classification: LOCKED, QUASIPERIODIC or UNDETERMINED.
    locked: p/q for LOCKED, else None.
    iterations: orbit length used.
    periodic_point: a hyperbolic period-q point for LOCKED.
    multiplier: its multiplier.
  """

  def __init__(self,
               spec: Dict[Text, Any],
               rho: float,
               diagnostic: float,
               classification: Text,
               iterations: int,
               locked: Optional[fractions.Fraction] = None,
               periodic_point: Optional[float] = None,
               multiplier: Optional[float] = None):
    self.spec = spec
    self.rho = float(rho)
    self.diagnostic = float(diagnostic)
    self.classification = classification
    self.iterations = int(iterations)
    self.locked = locked
    self.periodic_point = periodic_point
    self.multiplier = multiplier

  @property
  def rho_mod1(self) -> float:
    return float(torus_map_lib.wrap(self.rho))

  @property
  def label(self) -> Text:
    if self.classification == LOCKED:
      return 'Locked({}/{})'.format(self.locked.numerator,
                                    self.locked.denominator)
    if self.classification == QUASIPERIODIC:
      return 'Quasiperiodic'
    return 'Undetermined'

  def to_json_dict(self) -> Dict[Text, Any]:
    result = dict(self.__dict__)
    result['rho_mod1'] = self.rho_mod1
    result['label'] = self.label
    return result


def _candidate_ratios(rho: float, max_denominator: int,
                      safety: float) -> Iterable[fractions.Fraction]:
  for q in range(1, max_denominator + 1):
    for p in sorted({math.floor(q * rho), math.ceil(q * rho)}):
      if math.gcd(p, q) == 1 and abs(rho - p / q) < safety / (q * q):
        yield fractions.Fraction(p, q)


def find_locked_orbit(cmap: CircleMap,
                      ratio: fractions.Fraction,
                      grid: int = DEFAULT_ROOT_GRID,
                      margin: float = 1e-6
                     ) -> Optional[Tuple[float, float]]:
  """A hyperbolic point with Y^q(y) = y + p, as (y, multiplier), or None.

  Roots of Y^q(y) - y - p are bracketed on a uniform grid and refined with
  brentq. Among the hyperbolic roots the most attracting one is returned.
  """
  p, q = ratio.numerator, ratio.denominator

  def g(y):
    return cmap.lift_iterate(y, q) - y - p

  ys = np.arange(grid + 1) / grid
  values = g(ys)
  roots = []
  for i in range(grid):
    a, b = values[i], values[i + 1]
    if a == 0.0:
      roots.append(ys[i])
    elif a * b < 0.0:
      roots.append(optimize.brentq(g, ys[i], ys[i + 1], xtol=1e-14))
  best = None
  for root in roots:
    if abs(float(g(root))) >= 1e-10:
      continue
    multiplier = float(cmap.multiplier(root, q))
    if abs(abs(multiplier) - 1.0) <= margin:
      continue
    if best is None or abs(multiplier) < abs(best[1]):
      best = (float(root), multiplier)
  return best


def classify_circle(cmap: CircleMap,
                    iters: int = DEFAULT_ITERS,
                    y0: float = 0.0,
                    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
                    qp_threshold: float = DEFAULT_QP_THRESHOLD,
                    safety: float = 1.0,
                    grid: int = DEFAULT_ROOT_GRID) -> CircleAnalysis:
  """Locked if a hyperbolic p/q orbit is found near rho, else the diagnostic
  decides between quasiperiodic and undetermined."""
  estimate = rotation_number(cmap, y0, iters, METHOD_WEIGHTED,
                             max_denominator)
  for ratio in _candidate_ratios(estimate.rho, max_denominator, safety):
    found = find_locked_orbit(cmap, ratio, grid)
    if found is not None:
      return CircleAnalysis(cmap.spec, estimate.rho, estimate.diagnostic,
                            LOCKED, iters, ratio, found[0], found[1])
  if estimate.diagnostic >= qp_threshold:
    classification = QUASIPERIODIC
  else:
    classification = UNDETERMINED
    logging.warning('%s: rho=%s undetermined (diagnostic %.2f)', cmap.name,
                    estimate.rho, estimate.diagnostic)
  return CircleAnalysis(cmap.spec, estimate.rho, estimate.diagnostic,
                        classification, iters)


class SweepResult(json_utils.Jsonable):
  """Circle classifications over a grid of t values."""

  def __init__(self, t_values: Sequence[float],
               analyses: Sequence[CircleAnalysis], seed: int):
    self.t_values = [float(t) for t in t_values]
    self.analyses = list(analyses)
    self.seed = int(seed)

  def count(self, classification: Text) -> int:
    return sum(a.classification == classification for a in self.analyses)

  @property
  def quasiperiodic_fraction(self) -> float:
    """#quasiperiodic / #classified; undetermined samples are excluded."""
    classified = self.count(QUASIPERIODIC) + self.count(LOCKED)
    if classified == 0:
      return 0.0
    return self.count(QUASIPERIODIC) / classified

  def summary(self) -> Dict[Text, Any]:
    return {
        'samples': len(self.analyses),
        'seed': self.seed,
        'quasiperiodic': self.count(QUASIPERIODIC),
        'locked': self.count(LOCKED),
        'undetermined': self.count(UNDETERMINED),
        'quasiperiodic_fraction': self.quasiperiodic_fraction,
        't_range': [self.t_values[0], self.t_values[-1]],
    }

  def rows(self) -> List[List[Any]]:
    """CSV rows: t, rho, diagnostic, classification, iters."""
    return [[t, a.rho, a.diagnostic, a.label, a.iterations]
            for t, a in zip(self.t_values, self.analyses)]

  def to_json_dict(self) -> Dict[Text, Any]:
    result = self.summary()
    result['analyses'] = self.analyses
    return result


def _serial_map(fn, items):
  return [fn(item) for item in items]


def sweep(torus_map: torus_map_lib.TorusMap,
          base_x: Any,
          n: int,
          t_range: Tuple[float, float],
          samples: int,
          iters: int = 4096,
          seed: int = 0,
          map_fn=_serial_map,
          **classify_kwargs) -> SweepResult:
  """Classifies the circle over base_x at `samples` uniformly spaced t.

  Initial points y0 are drawn from a generator seeded with `seed`; results
  are in t order whatever map_fn schedules.
  """
  if samples < 2:
    raise errors.ValidationError('samples must be >= 2, got %d' % samples)
  t_values = np.linspace(t_range[0], t_range[1], samples)
  starts = np.random.RandomState(seed).uniform(size=samples)
  # Fails early on a non-skew map or a non-periodic base point.
  restrict(torus_map, base_x, n)

  def classify_one(i):
    cmap = restrict(torus_map.with_t(t_values[i]), base_x, n)
    return classify_circle(cmap, iters, y0=starts[i], **classify_kwargs)

  analyses = map_fn(classify_one, range(samples))
  result = SweepResult(t_values, analyses, seed)
  logging.info('Sweep over t in [%s, %s]: %s', t_range[0], t_range[1],
               result.summary())
  return result
