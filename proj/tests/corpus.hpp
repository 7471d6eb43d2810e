// Copyright 2026 The starclean Authors
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

#include <filesystem>
#include <string>
#include <vector>

#include "starclean/json_io.hpp"

#ifndef STARCLEAN_CORPUS_DIR
#error "STARCLEAN_CORPUS_DIR must point at the bundled corpus"
#endif

namespace testing_corpus {

inline std::string path(const std::string& name) {
  return std::string(STARCLEAN_CORPUS_DIR) + "/" + name + ".json";
}

inline starclean::CorpusEntry load(const std::string& name) {
  return starclean::load_entry(starclean::load_spec_file(path(name)));
}

/// Every bundled entry, in file-name order.
inline std::vector<starclean::CorpusEntry> load_all() {
  std::vector<std::filesystem::path> files;
  for (const auto& item :
       std::filesystem::directory_iterator(STARCLEAN_CORPUS_DIR))
    if (item.path().extension() == ".json") files.push_back(item.path());
  std::sort(files.begin(), files.end());
  std::vector<starclean::CorpusEntry> out;
  for (const auto& f : files)
    out.push_back(starclean::load_entry(starclean::load_spec_file(f.string())));
  return out;
}

}  // namespace testing_corpus
