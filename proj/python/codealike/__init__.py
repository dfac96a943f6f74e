# Copyright 2026 The CodeAlike Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Fingerprint-based plagiarism detection for source code and essays."""

from ._core import (
    CodeAlikeError,
    ComparisonReport,
    DocumentRecord,
    HashedGram,
    MatchResult,
    MatchSpan,
    NormalizedText,
    Params,
    Sketch,
    check_primary,
    compare,
    fingerprint,
    hash_one,
    index_document,
    kgram_hashes,
    languages,
    list_corpus,
    load_sketch,
    normalize,
    run_cli,
)

__all__ = [
    "CodeAlikeError",
    "ComparisonReport",
    "DocumentRecord",
    "HashedGram",
    "MatchResult",
    "MatchSpan",
    "NormalizedText",
    "Params",
    "Sketch",
    "check_primary",
    "compare",
    "fingerprint",
    "hash_one",
    "index_document",
    "kgram_hashes",
    "languages",
    "list_corpus",
    "load_sketch",
    "normalize",
    "run_cli",
]
