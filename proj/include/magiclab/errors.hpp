/*
   Copyright 2026 The magiclab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAGICLAB_ERRORS_HPP
#define MAGICLAB_ERRORS_HPP

#include <stdexcept>

namespace magiclab {

struct ZeroConstantTermError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LengthMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Brute-force enumeration refused: too many variables or too large a magic sum.
struct InstanceTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownIdentityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Cleared series still has nonzero coefficients past the numerator degree bound.
struct NotStabilizedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Samples do not fit phi(s) + (-1)^s psi at the requested degree.
struct InconsistentSamplesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvenNError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace magiclab

#endif  // MAGICLAB_ERRORS_HPP
