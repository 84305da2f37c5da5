# Copyright 2026 The securecmp Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Secure two-party comparison protocols over a simulated network."""

import json

from . import _core
from ._core import Error

__all__ = [
    "Error",
    "run",
    "sweep",
    "growth",
    "tables",
    "shared_eval",
    "construct_at_point",
    "eval_point",
    "validate_general",
]


def _bits(x):
    return x if isinstance(x, str) else format(x, "b")


def _config(seed=None, shared=None, u=None, range=None, **kw):
    cfg = {k: v for k, v in kw.items() if v is not None}
    if seed is not None:
        cfg["seed"] = seed
    if shared is not None:
        cfg["shared"] = [str(v) for v in shared]
    if u is not None:
        cfg["u"] = int(u)
    if range is not None:
        cfg["range"] = [str(range[0]), str(range[1])]
    if "l_point" in cfg:
        cfg["l_point"] = str(cfg["l_point"])
    return json.dumps(cfg)


def run(protocol, a, b, **config):
    """Runs one comparison and returns the transcript document."""
    return json.loads(_core.run(protocol, str(a), str(b), _config(**config)))


def sweep(protocol, max_bits, seeds=1, **config):
    return json.loads(_core.sweep(protocol, max_bits, seeds, _config(**config)))


def growth(protocol, sizes, **config):
    return json.loads(_core.growth(protocol, list(sizes), _config(**config)))


def tables():
    return json.loads(_core.tables())


def shared_eval(s, k, l, x):
    """F(x) for the shared family; x is an int (minimal form) or bit string."""
    return int(_core.shared_eval(str(s), str(k), str(l), _bits(x)))


def construct_at_point(b, l, lo, hi, seed):
    """Anchor-point encoding for the bit string (or int) b."""
    return json.loads(
        _core.construct_at_point(_bits(b), str(l), str(lo), str(hi), seed))


def eval_point(point, x):
    return int(_core.eval_point(json.dumps(point), _bits(x)))


def validate_general(maps):
    """Returns (valid, first violating 1-based position or None)."""
    return _core.validate_general([(str(z), str(o)) for z, o in maps])
