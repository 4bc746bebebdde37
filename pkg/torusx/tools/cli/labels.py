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
"""Common Flags."""

COMMAND = 'command'
CONFIG_PATH = 'config'
OUT_DIR = 'out'
DEFAULT_OUT_DIR = 'torusx_out'
THREADS = 'threads'
SEED = 'seed'
TOL = 'tol'
# Subcommand parameters given as flags; None means not given.
COMMAND_PARAMS = 'command_params'

# Run-level settings read from the [run] section of a config file.
RUN_SETTINGS = (SEED, THREADS, TOL)

# Exit codes.
EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

# Files written next to the outputs.
MANIFEST_FILE = 'manifest.json'
FAILURE_FILE = 'failure.json'
