# Copyright 2026 The fdtsc Authors
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

"""Python bindings for the fdtsc C++ library."""

import json

from ._core import (
    CodecError,
    DataError,
    DegenerateNormalization,
    FdVector,
    InvariantViolation,
    SaxWord,
    default_sax_segments,
    evaluate_json,
    fd_discretize,
    fd_similarity,
    fdist,
    gaussian_breakpoints,
    load_ucr_file,
    mindist,
    pack_trits,
    paa,
    rle_decode,
    rle_encode,
    sax_word,
    unpack_trits,
    znormalize,
)

__version__ = "0.1.0"


def evaluate(train, train_labels, test, test_labels, **kwargs):
    """1NN evaluation; returns the report as a dict."""
    return json.loads(evaluate_json(train, train_labels, test, test_labels, **kwargs))


__all__ = [n for n in dir() if not n.startswith("_") and n != "json"]
