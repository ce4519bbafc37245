// Copyright 2026 The ringcav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RINGCAV_ERROR_HPP
#define RINGCAV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ringcav {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: port count below 2, reflectivity outside [0,1], wrong
/// number of phases, bad port index, non-positive amplitude.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

/// |A_n| vanished: perfect mirrors with the ring exactly on resonance.
class SingularCavity : public Error {
 public:
  using Error::Error;
};

/// The beam-splitter cascade system could not be solved.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// The response is stationary in the total phase, so the sensitivity diverges.
class StationaryPoint : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace ringcav

#endif  // RINGCAV_ERROR_HPP
