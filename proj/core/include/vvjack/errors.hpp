/*
 * Copyright (c) 2026 vvjack contributors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef VVJACK_ERRORS_HPP
#define VVJACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vvjack {

// Base for all errors arising from the mathematical domain (as opposed to
// malformed input, which is reported with std::invalid_argument).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : DomainError {
    DivisionByZero() : DomainError("division by zero in Q(a)") {}
};

// Evaluation of a fraction at a rational point where the denominator vanishes.
struct SingularValue : DomainError {
    explicit SingularValue(const std::string& what) : DomainError(what) {}
};

struct InvalidShape : DomainError {
    explicit InvalidShape(const std::string& what) : DomainError(what) {}
};

struct InvalidFilling : DomainError {
    explicit InvalidFilling(const std::string& what) : DomainError(what) {}
};

struct ShapeMismatch : DomainError {
    explicit ShapeMismatch(const std::string& what) : DomainError(what) {}
};

// Filling is not column-strict (symmetrization) or not row-strict
// (antisymmetrization).
struct NotCompatible : DomainError {
    explicit NotCompatible(const std::string& what) : DomainError(what) {}
};

// Tableau restriction requested for a tableau without the translated-shape
// property for the given M.
struct PropertyRViolation : DomainError {
    explicit PropertyRViolation(const std::string& what) : DomainError(what) {}
};

// Restriction of a polynomial whose weight has nonzero entries past M.
struct NonzeroTail : DomainError {
    explicit NonzeroTail(const std::string& what) : DomainError(what) {}
};

}  // namespace vvjack

#endif
