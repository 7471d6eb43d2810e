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

#include <cstddef>
#include <cstdlib>
#include <string>

#include "starclean/errors.hpp"

namespace starclean {

/// Size guards for the exhaustive algorithms.
struct Limits {
  std::size_t max_ring_order = 4096;
  std::size_t max_involution_search_order = 16;
  std::size_t max_ideal_enumeration_order = 256;
};

/// Defaults, with STARCLEAN_MAX_ORDER overriding the construction guard.
inline Limits default_limits() {
  Limits limits;
  if (const char* env = std::getenv("STARCLEAN_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      limits.max_ring_order = static_cast<std::size_t>(value);
    }
  }
  return limits;
}

inline void check_order(const std::string& what, double requested,
                        std::size_t bound) {
  if (requested > static_cast<double>(bound)) {
    throw OrderBoundExceeded(what, requested, bound);
  }
}

}  // namespace starclean
