# Copyright 2026 The varbound Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Variance-based sum uncertainty bounds for N observables."""

import json

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    GridSpec,
    VarboundError,
    __version__,
    _audit_json,
    _bounds_json,
    _sweep_csv,
)


def sweep_csv(example, theta_min=None, theta_max=None, steps=None, phi=None,
              alpha_fixed=None, grid=None, permutations=False):
    """CSV text of an example sweep, identical to what the CLI writes."""
    return _sweep_csv(example, theta_min, theta_max, steps, phi, alpha_fixed,
                      grid if grid is not None else GridSpec(), permutations)


def audit(dims=(2, 3, 4), n_obs=(2, 3, 4), trials=1000, seed=0, grid=None):
    """Random-instance validity audit; returns the report as a dict."""
    return json.loads(_audit_json(list(dims), list(n_obs), trials, seed,
                                  grid if grid is not None else GridSpec()))


def bounds_report(example, theta, phi=0.0, grid=None, permutations=False,
                  alpha_fixed=None):
    """All bounds at one example point as a flat dict."""
    return json.loads(_bounds_json(example, theta, phi,
                                   grid if grid is not None else GridSpec(),
                                   permutations, alpha_fixed))
