// Copyright 2026 The lindobs Authors
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

#include <stdexcept>
#include <string>

namespace lindobs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error { using Error::Error; };
class NonHermitianInput : public Error { using Error::Error; };
class NegativeTime : public Error { using Error::Error; };
class InvalidState : public Error { using Error::Error; };
class InvalidProjectorFamily : public Error { using Error::Error; };
class ModelMismatch : public Error { using Error::Error; };
class NotEnvironmentInduced : public Error { using Error::Error; };
class NotAnAlgebra : public Error { using Error::Error; };
class NotWanCase : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

/// Raised when a numerical rank decision cannot be made safely: some
/// singular value sits inside the ambiguity band around the threshold.
class NumericalRankAmbiguity : public Error {
 public:
  NumericalRankAmbiguity(const std::string& what, double band_lo, double band_hi, double offending)
      : Error(what), band_lo_(band_lo), band_hi_(band_hi), offending_(offending) {}
  double band_lo() const noexcept { return band_lo_; }
  double band_hi() const noexcept { return band_hi_; }
  double offending() const noexcept { return offending_; }

 private:
  double band_lo_;
  double band_hi_;
  double offending_;
};

class NonIntegralStructure : public Error { using Error::Error; };
class CenterSeparationFailure : public Error { using Error::Error; };

}  // namespace lindobs
