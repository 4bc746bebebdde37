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
"""Tests for torusx.dynamics.udv."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from concurrent import futures
import math

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from torusx.dynamics import errors
from torusx.dynamics import torus_map
from torusx.dynamics import udv
from torusx.utils import json_utils
from torusx.utils import test_case_utils

_LN3 = math.log(3.0)


def _linear_map():
  return torus_map.make_skew_map(3, 1)


def _coupled_map():
  return torus_map.TorusMap([[3, 0], [1, 1]], torus_map.FourierPerturbation([
      torus_map.FourierTerm((0, 1), (0.02, 0.05)),
      torus_map.FourierTerm((1, 1), (0.01, 0.0), phase=0.3),
  ]))


def _threaded_map_fn(pool):
  return lambda fn, items: list(pool.map(fn, items))


class FtleWindowTest(test_case_utils.TestCase):

  @parameterized.parameters(1, 7, 50)
  def testLinearMap(self, n):
    for p in np.random.RandomState(n).uniform(size=(5, 2)):
      lambda1, lambda2 = udv.ftle_window(_linear_map(), p, n)
      self.assertAlmostEqual(_LN3, lambda1, delta=1e-12)
      self.assertEqual(0.0, lambda2)

  def testRepeller(self):
    lambda1, lambda2 = udv.ftle_window(torus_map.make_reference_map(),
                                       [0.0, 0.0], 50)
    self.assertAlmostEqual(_LN3, lambda1, delta=1e-12)
    self.assertAlmostEqual(math.log(1 + 0.1 * math.pi), lambda2, delta=1e-12)
    self.assertAlmostEqual(0.27334, lambda2, places=5)

  def testSaddle(self):
    _, lambda2 = udv.ftle_window(torus_map.make_reference_map(), [0.0, 0.5],
                                 50)
    self.assertAlmostEqual(math.log(1 - 0.1 * math.pi), lambda2, delta=1e-12)
    self.assertAlmostEqual(-0.37716, lambda2, places=5)

  @parameterized.named_parameters(
      ('Skew', torus_map.make_reference_map(t=0.02)),
      ('Coupled', _coupled_map()),
  )
  def testSumRule(self, tmap):
    for p in np.random.RandomState(1).uniform(size=(5, 2)):
      accumulation = udv.ftle_accumulate(tmap, p, 40)
      self.assertAlmostEqual(accumulation.log_det / 40,
                             sum(accumulation.exponents), delta=1e-10)
      self.assertGreaterEqual(accumulation.exponents[0],
                              accumulation.exponents[1])

  def testConcatenatedWindows(self):
    tmap = _coupled_map()
    p = [0.31, 0.77]
    first = udv.ftle_accumulate(tmap, p, 12)
    second = udv.ftle_accumulate(tmap, first.end, 20, q0=first.frame)
    whole = udv.ftle_accumulate(tmap, p, 32)
    self.assertAllClose(whole.log_diagonal,
                        first.log_diagonal + second.log_diagonal, atol=1e-9)
    self.assertAllClose(whole.end, second.end, atol=1e-12)
    for i in range(2):
      parts = [first.log_diagonal[i] / 12, second.log_diagonal[i] / 20]
      value = whole.log_diagonal[i] / 32
      self.assertBetween(value, min(parts) - 1e-9, max(parts) + 1e-9)

  def testSingularJacobian(self):
    degenerate = torus_map.make_skew_map(
        3, 1, [torus_map.FourierTerm((0, 1), (0.0, -1.0 / (2 * math.pi)))])
    with self.assertRaises(errors.SingularJacobianError):
      udv.ftle_window(degenerate, [0.0, 0.0], 5)

  def testInvalid(self):
    with self.assertRaises(errors.ValidationError):
      udv.ftle_window(_linear_map(), [0.1, 0.2], 0)
    with self.assertRaises(errors.ValidationError):
      udv.ftle_window(_linear_map(), [0.1, 0.2], 5, q0=[[1.0, 1.0],
                                                        [0.0, 1.0]])

  def testJson(self):
    payload = json_utils.canonical_dict(
        udv.ftle_accumulate(_linear_map(), [0.1, 0.2], 3))
    self.assertEqual(3, payload['n'])
    self.assertLen(payload['frame'], 2)


class FrameTest(test_case_utils.TestCase):

  def testSchurFrameSpansDominantEigenvector(self):
    matrix = np.array([[2.0, 1.0], [1.0, 3.0]])
    frame = udv.schur_frame(matrix)
    self.assertAllClose(np.eye(2), frame.T @ frame, atol=1e-14)
    values, vectors = np.linalg.eig(matrix)
    dominant = vectors[:, np.argmax(np.abs(values))]
    self.assertAlmostEqual(1.0, abs(frame[:, 0] @ dominant), delta=1e-12)
    triangular = frame.T @ matrix @ frame
    self.assertAlmostEqual(0.0, triangular[1, 0], delta=1e-12)

  def testComplexEigenvaluesGiveIdentity(self):
    self.assertAllClose(np.eye(2), udv.schur_frame([[0.0, -1.0],
                                                    [1.0, 0.0]]))

  def testBatched(self):
    jacobians = _coupled_map().jacobian(np.random.RandomState(0).uniform(
        size=(7, 2)))
    frames = udv.schur_frame(jacobians)
    self.assertEqual((7, 2, 2), frames.shape)
    self.assertAllClose(np.linalg.det(frames), np.ones(7), atol=1e-14)

  def testQrStepMatchesLibraryFactorization(self):
    points = np.random.RandomState(3).uniform(size=(6, 2))
    jacobians = _coupled_map().jacobian(points)
    frames = udv.schur_frame(jacobians[::-1])
    new_frames, logs = udv._qr_step(jacobians, frames)
    products = jacobians @ frames
    for i in range(6):
      _, r = np.linalg.qr(products[i])
      self.assertAllClose(np.log(np.abs(np.diag(r))), logs[i], atol=1e-12)
      self.assertAllClose(np.eye(2), new_frames[i].T @ new_frames[i],
                          atol=1e-12)
      triangular = new_frames[i].T @ products[i]
      self.assertAlmostEqual(0.0, triangular[1, 0], delta=1e-12)
      self.assertGreater(triangular[0, 0], 0.0)
      self.assertGreater(triangular[1, 1], 0.0)

  def testInitialFrame(self):
    jacobian = _coupled_map().jacobian([0.2, 0.4])
    self.assertAllClose(udv.schur_frame(jacobian),
                        udv.initial_frame(_coupled_map(), jacobian))
    vertical = udv.initial_frame(torus_map.make_reference_map(), jacobian)
    self.assertAllEqual([[0.0, -1.0], [1.0, 0.0]], vertical)


class PositiveCountSeriesTest(test_case_utils.TestCase):

  def testLinearMapCountsOne(self):
    series = udv.positive_count_series(_linear_map(), [0.1, 0.2], 500, 20)
    self.assertLen(series, 481)
    self.assertEqual({1}, set(series.counts))

  def testExpandingMapCountsTwo(self):
    series = udv.positive_count_series(torus_map.TorusMap([[3, 0], [0, 2]]),
                                       [0.1, 0.2], 300, 10, stride=3)
    self.assertEqual({2}, set(series.counts))
    self.assertEqual(list(range(0, 291, 3)), series.starts)

  def testReferenceMapOscillates(self):
    series = udv.positive_count_series(
        torus_map.make_reference_map(t=0.02), [0.1234, 0.5678], 100000, 30)
    self.assertIn(1, series.counts)
    self.assertIn(2, series.counts)
    stats = udv.oscillation_stats(series)
    self.assertGreaterEqual(stats.switches, 1)
    self.assertLess(stats.min_lambda2, 0.0)
    self.assertGreater(stats.max_lambda2, 0.0)
    self.assertTrue(stats.oscillates)

  def testDeadBand(self):
    series = udv.positive_count_series(_linear_map(), [0.1, 0.2], 100, 10,
                                       dead_band=2.0)
    self.assertEqual({0}, set(series.counts))

  def testThreadedMatchesSerial(self):
    tmap = torus_map.make_reference_map(t=0.02)
    serial = udv.positive_count_series(tmap, [0.3, 0.1], 20000, 25, stride=2)
    with futures.ThreadPoolExecutor(max_workers=4) as pool:
      threaded = udv.positive_count_series(tmap, [0.3, 0.1], 20000, 25,
                                           stride=2,
                                           map_fn=_threaded_map_fn(pool))
    self.assertEqual(serial.rows(), threaded.rows())

  def testRows(self):
    series = udv.positive_count_series(_linear_map(), [0.1, 0.2], 12, 10)
    self.assertLen(series.rows(), 3)
    start, lambda1, lambda2, count = series.rows()[0]
    self.assertEqual(0, start)
    self.assertAlmostEqual(_LN3, lambda1, delta=1e-12)
    self.assertEqual(0.0, lambda2)
    self.assertEqual(1, count)

  @parameterized.named_parameters(
      ('TotalBelowWindow', 5, 10, 1, 0.0),
      ('ZeroWindow', 10, 0, 1, 0.0),
      ('ZeroStride', 10, 5, 0, 0.0),
      ('NegativeDeadBand', 10, 5, 1, -0.1),
  )
  def testInvalid(self, total, window, stride, dead_band):
    with self.assertRaises(errors.ValidationError):
      udv.positive_count_series(_linear_map(), [0.1, 0.2], total, window,
                                stride, dead_band)


class OscillationStatsTest(test_case_utils.TestCase):

  def _series(self, counts):
    exponents = [[_LN3, 0.1 if c == 2 else -0.1] for c in counts]
    return udv.FtleSeries(10, 1, range(len(counts)), exponents, counts)

  def testAllOnes(self):
    stats = udv.oscillation_stats(self._series([1] * 8))
    self.assertEqual(1.0, stats.frac_one)
    self.assertEqual(0.0, stats.frac_two)
    self.assertEqual(0, stats.switches)
    self.assertFalse(stats.oscillates)

  def testAlternating(self):
    stats = udv.oscillation_stats(self._series([1, 2, 1, 2]))
    self.assertEqual(3, stats.switches)
    self.assertEqual(1.0, stats.switch_rate)
    self.assertEqual(0.5, stats.frac_one)
    self.assertAlmostEqual(1.0, stats.frac_one + stats.frac_two +
                           stats.frac_other)

  def testEmpty(self):
    with self.assertRaises(errors.EmptySetError):
      udv.oscillation_stats(udv.FtleSeries(10, 1, [], [], []))


class TransitivityCoverTest(test_case_utils.TestCase):

  def testFullTorusDisk(self):
    result = udv.transitivity_cover(_linear_map(), [0.3, 0.3],
                                    math.sqrt(2) / 2, grid_n=16)
    self.assertEqual(1, result.n_cover)

  def testReferenceMapCovers(self):
    result = udv.transitivity_cover(torus_map.make_reference_map(t=0.02),
                                    [0.4, 0.6], 0.05, grid_n=64, max_iter=60)
    self.assertTrue(result.covered)
    self.assertLessEqual(result.n_cover, 60)
    self.assertLen(result.curve, result.n_cover)
    self.assertEqual(1.0, result.curve[-1])
    self.assertTrue(all(b >= a for a, b in zip(result.curve,
                                               result.curve[1:])))
    self.assertEqual(10 * 64 * 64, result.samples)

  def testLinearMapDoesNotCover(self):
    result = udv.transitivity_cover(_linear_map(), [0.3, 0.3], 0.05,
                                    grid_n=16, max_iter=10)
    self.assertFalse(result.covered)
    self.assertLen(result.curve, 10)
    self.assertLess(result.curve[-1], 1.0)
    self.assertEqual('NotCovered', json_utils.canonical_dict(result)['N_cover'])

  def testThreadedMatchesSerial(self):
    tmap = torus_map.make_reference_map(t=0.02)
    serial = udv.transitivity_cover(tmap, [0.1, 0.9], 0.05, grid_n=32)
    with futures.ThreadPoolExecutor(max_workers=3) as pool:
      threaded = udv.transitivity_cover(tmap, [0.1, 0.9], 0.05, grid_n=32,
                                        map_fn=_threaded_map_fn(pool))
    self.assertEqual(serial.rows(), threaded.rows())
    self.assertEqual(serial.n_cover, threaded.n_cover)

  def testRepellerNeighbourhood(self):
    tmap = torus_map.make_reference_map()
    center = udv.repeller_center(tmap)
    self.assertLess(float(torus_map.torus_distance(center, [0.0, 0.0])),
                    1e-10)
    self.assertTrue(udv.transitivity_cover(tmap, center, 0.05).covered)

  def testNoRepeller(self):
    with self.assertRaises(errors.NotRepellerError):
      udv.repeller_center(_linear_map(), seed_grid=4)

  @parameterized.named_parameters(
      ('ZeroRadius', 0.0, 64, None),
      ('SmallGrid', 0.05, 8, None),
      ('TooFewSamples', 0.05, 16, 100),
  )
  def testInvalid(self, radius, grid_n, samples):
    with self.assertRaises(errors.ValidationError):
      udv.transitivity_cover(_linear_map(), [0.5, 0.5], radius, grid_n,
                             samples=samples)


class MixingOnsetTest(test_case_utils.TestCase):

  def testReferenceMapMixes(self):
    onset = udv.mixing_onset(torus_map.make_reference_map(t=0.02),
                             [0.2, 0.2], [0.7, 0.4], 0.05, max_iter=40)
    self.assertIsNotNone(onset)
    self.assertBetween(onset, 1, 40)

  def testInvalid(self):
    with self.assertRaises(errors.ValidationError):
      udv.mixing_onset(_linear_map(), [0.2, 0.2], [0.7, 0.4], -1.0)


if __name__ == '__main__':
  absltest.main()
