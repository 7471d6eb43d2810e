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

// Builds T2(Z2 x Z2, swap) in code, decides two cleanness variants and
// repairs a non-projection idempotent into a projection.

#include <iostream>

#include "starclean/cleanness.hpp"
#include "starclean/constructors.hpp"

int main() {
  using namespace starclean;
  StarRing base = make_product({make_modular(2), make_modular(2)});
  Automorphism swap = build_automorphism(base.ring(), {0, 2, 1, 3});
  StarRing T = make_trivial_extension(base.ring(), swap);
  const FiniteRing& R = T.ring();

  for (Variant v : {Variant::JStarClean, Variant::StronglyJStarClean}) {
    DecisionReport d = decide(T, v);
    std::cout << variant_name(v) << ": " << (d.holds ? "holds" : "fails");
    if (d.first_failure)
      std::cout << " at " << R.label(d.first_failure->element);
    std::cout << '\n';
  }

  Element e = *R.find("((1,0),(1,0))");
  std::cout << "e = " << R.label(e) << ", e* = " << R.label(T.star(e))
            << ", projection f = " << R.label(projectionize(T, e)) << '\n';
}
