# Copyright 2026 The mbqr Authors
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

"""Measurement-based quantum repeater toolkit."""

from ._mbqr import (
    BellDiagonalState,
    ChainBrokenError,
    apply_lwn,
    compile_circuit,
    compile_resource,
    measure_pauli,
    oxford_map,
    purify,
    resource_fidelity,
    resource_names,
    run_repeater,
    swap,
    threshold,
    variant_cost,
    variant_cost_mc,
    verify_resource,
)

__all__ = [
    "BellDiagonalState",
    "ChainBrokenError",
    "apply_lwn",
    "compile_circuit",
    "compile_resource",
    "measure_pauli",
    "oxford_map",
    "purify",
    "resource_fidelity",
    "resource_names",
    "run_repeater",
    "swap",
    "threshold",
    "variant_cost",
    "variant_cost_mc",
    "verify_resource",
]
