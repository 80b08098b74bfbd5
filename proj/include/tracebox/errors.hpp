// Copyright 2026 The tracebox authors
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

namespace tracebox {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (matrix sides, party counts, scenario).
struct DimensionMismatch : Error {
    using Error::Error;
};

/// The Gram matrix of an operator family is numerically singular; signals a
/// bad vector draw during measurement synthesis.
struct GramSingular : Error {
    using Error::Error;
};

/// A correlation box violates the no-signalling equalities beyond tolerance.
struct SignallingInput : Error {
    using Error::Error;
};

/// Repeated draws failed to produce a linearly independent family.
struct IndependenceFailure : Error {
    using Error::Error;
};

/// |e> coincides with a computational basis vector.
struct DegenerateBasis : Error {
    using Error::Error;
};

/// A derived quantity fell outside its admissible range.
struct RangeViolation : Error {
    using Error::Error;
};

struct NotUnitTrace : Error {
    using Error::Error;
};

struct NonOrthonormal : Error {
    using Error::Error;
};

/// Malformed or structurally invalid JSON input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace tracebox
