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

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace starclean {

using Element = std::uint32_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation tables have the wrong shape or contain out-of-range entries.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A ring axiom fails; `witness` is the offending triple (unused slots repeat).
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::array<Element, 3> witness)
      : Error("ring axiom violated: " + axiom + " at (" +
              std::to_string(witness[0]) + ", " + std::to_string(witness[1]) +
              ", " + std::to_string(witness[2]) + ")"),
        axiom_(std::move(axiom)),
        witness_(witness) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<Element, 3>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::array<Element, 3> witness_;
};

/// A candidate map is not an involution (or automorphism) of the ring.
class NotInvolution : public Error {
 public:
  NotInvolution(std::string axiom, std::pair<Element, Element> witness)
      : Error("not an involution: " + axiom + " fails at (" +
              std::to_string(witness.first) + ", " +
              std::to_string(witness.second) + ")"),
        axiom_(std::move(axiom)),
        witness_(witness) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::pair<Element, Element>& witness() const noexcept {
    return witness_;
  }

 private:
  std::string axiom_;
  std::pair<Element, Element> witness_;
};

class OrderBoundExceeded : public Error {
 public:
  OrderBoundExceeded(std::string what, double requested, std::size_t bound)
      : Error(what + ": order " + format_order(requested) +
              " exceeds bound " + std::to_string(bound)),
        bound_(bound) {}

  std::size_t bound() const noexcept { return bound_; }

 private:
  static std::string format_order(double requested) {
    if (requested < 1e18) {
      return std::to_string(static_cast<unsigned long long>(requested));
    }
    return std::to_string(requested);
  }
  std::size_t bound_;
};

/// Malformed declarative ring description.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// The requested star does not descend to the constructed ring.
class StarUndefined : public Error {
 public:
  using Error::Error;
};

class SigmaNotInvolutiveAutomorphism : public Error {
 public:
  using Error::Error;
};

class NotIdeal : public Error {
 public:
  using Error::Error;
};

class NotStarIdeal : public Error {
 public:
  explicit NotStarIdeal(Element witness)
      : Error("ideal is not closed under the involution: element " +
              std::to_string(witness) + " has its star outside the ideal"),
        witness_(witness) {}

  Element witness() const noexcept { return witness_; }

 private:
  Element witness_;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class RadicalPreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A theorem check needs auxiliary data that was not supplied or is invalid.
class AuxMissing : public Error {
 public:
  using Error::Error;
};

}  // namespace starclean
