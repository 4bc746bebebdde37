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
"""Subpackage for torusx components, one per CLI subcommand."""

# For component user to direct use torusx.components.[...] as an alias.
from torusx.components.circle_enumerator.component import CircleEnumerator
from torusx.components.cone_verifier.component import ConeVerifier
from torusx.components.conjugacy.component import Conjugacy
from torusx.components.coverage.component import Coverage
from torusx.components.fiber_tracer.component import FiberTracer
from torusx.components.ftle.component import Ftle
from torusx.components.periodic_finder.component import PeriodicFinder
from torusx.components.rotation.component import Rotation
from torusx.components.snapback.component import Snapback
from torusx.components.sweep.component import Sweep

# CLI subcommand -> component class, in the order the CLI lists them.
COMPONENTS = {
    component.COMMAND: component for component in (
        ConeVerifier, Conjugacy, FiberTracer, PeriodicFinder,
        CircleEnumerator, Rotation, Sweep, Ftle, Coverage, Snapback)
}
