// Copyright 2026 The Motion Transformer Authors
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

#pragma once

#include <string>
#include <vector>

#include "mtr/generator.hpp"
#include "mtr/intention.hpp"
#include "mtr/scene.hpp"
#include "mtr/selection.hpp"

namespace mtr::io
{

// All line-oriented files are UTF-8 with one JSON record per line
// (schema v1, documented in the README). Loaders name the offending line
// and field on malformed input.

void save_dataset(const std::vector<Scene> & scenes, const std::string & path);
std::vector<Scene> load_dataset(const std::string & path);

void save_intentions(const IntentionLibrary & lib, const std::string & path);
IntentionLibrary load_intentions(const std::string & path);

void save_predictions(const std::vector<PredictionSet> & preds, const std::string & path);
std::vector<PredictionSet> load_predictions(const std::string & path);

GeneratorSpec load_generator_spec(const std::string & path);
void save_generator_spec(const GeneratorSpec & spec, const std::string & path);

}  // namespace mtr::io
