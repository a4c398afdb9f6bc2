# Copyright 2026 swkernel authors
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

"""Sliced-Wasserstein kernels for variable-length embedding sequences."""

from ._core import (
    cosine_meanpool,
    dtw,
    exact_wasserstein,
    gram,
    random_walks,
    rerank,
    sliced_wasserstein,
    soft_dtw,
    sw_rbf,
    temporal_score,
    usw_rbf,
    wasserstein_1d,
)

__all__ = [
    "cosine_meanpool",
    "dtw",
    "exact_wasserstein",
    "gram",
    "random_walks",
    "rerank",
    "sliced_wasserstein",
    "soft_dtw",
    "sw_rbf",
    "temporal_score",
    "usw_rbf",
    "wasserstein_1d",
]

__version__ = "0.1.0"
