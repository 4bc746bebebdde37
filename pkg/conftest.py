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
"""Settings for pytest."""

from absl import flags
import hypothesis

# absltest helpers (create_tempdir) read flags that absltest.main would parse.
if not flags.FLAGS.is_parsed():
  flags.FLAGS.mark_as_parsed()

# Property tests draw the same examples on every run.
hypothesis.settings.register_profile(
    'torusx', derandomize=True, deadline=None, max_examples=50)
hypothesis.settings.load_profile('torusx')
