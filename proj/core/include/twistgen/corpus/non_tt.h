// Copyright (c) 2026 twistgen contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWISTGEN_CORPUS_NON_TT_H_
#define TWISTGEN_CORPUS_NON_TT_H_

#include <string>
#include <string_view>

#include "twistgen/backends/pos_tagger.h"
#include "twistgen/backends/synonyms.h"

namespace twistgen {

// Builds the plain ("non tongue twister") counterpart of a sentence: each
// noun, verb, or adjective occurrence is swapped for the highest-ranked
// same-POS single-token synonym that differs from the original. Proper
// nouns, function words, punctuation, token order, and token count are
// untouched; a capitalized sentence-initial word keeps its capital.
std::string MakeNonTwister(std::string_view text, const PosTagger& tagger,
                           const SynonymLexicon& lexicon);

}  // namespace twistgen

#endif  // TWISTGEN_CORPUS_NON_TT_H_
