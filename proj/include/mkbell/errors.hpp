// Copyright 2026 The mkbell Authors
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

#ifndef MKBELL_ERRORS_HPP
#define MKBELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mkbell {

/// Base class for all mkbell errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficients of a family state do not sum to one.
struct NormalizationError : Error {
    using Error::Error;
};

/// A split/basis/coefficient index is outside its admissible range.
struct IndexRangeError : Error {
    using Error::Error;
};

/// A family coefficient is negative.
struct NegativeCoefficientError : Error {
    using Error::Error;
};

/// Rejection sampling exhausted its retry budget.
struct SamplingTimeoutError : Error {
    using Error::Error;
};

/// Requested qubit count exceeds the dense-matrix (or eigensolver) cap.
struct DimensionCapError : Error {
    using Error::Error;
};

/// Matrix handed to a density-matrix operation fails validity checks.
struct NotADensityMatrixError : Error {
    using Error::Error;
};

/// Split and operator refer to different party counts.
struct SplitMismatchError : Error {
    using Error::Error;
};

/// A measurement direction is not a unit vector.
struct NonUnitVectorError : Error {
    using Error::Error;
};

/// Local phase alignment did not reach the canonical projector form.
struct AlignmentFailedError : Error {
    using Error::Error;
};

/// Malformed input file or rational literal.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace mkbell

#endif  // MKBELL_ERRORS_HPP
