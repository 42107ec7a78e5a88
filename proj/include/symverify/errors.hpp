// Copyright 2026 The symverify Authors
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

namespace symverify {

/// Bad input: malformed partition, degree mismatch, non-unit state, ...
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A requested object would exceed the configured size caps.
class ResourceLimit : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A quantity that is integral (or idempotent, ...) in exact arithmetic
/// drifted beyond tolerance.
class NumericalConsistency : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The input has no component in the requested subspace.
class DegenerateInput : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

} // namespace symverify
