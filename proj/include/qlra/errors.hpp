// Copyright 2026 The QLRA Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qlra {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A value that must be finite was NaN or infinite.
class NonFiniteError : public Error {
   public:
    using Error::Error;
};

/// A result exceeded the floating point range (e.g. cosh of a huge phase).
class OverflowError : public Error {
   public:
    using Error::Error;
};

/// The argument lies outside the domain of the function (e.g. arg off the positive cone).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Division by an element on the null cone |z|^2 = 0.
class ZeroDivisorError : public Error {
   public:
    using Error::Error;
};

/// A computation degenerated: vanishing denominator or all components null.
class DegenerateError : public Error {
   public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// A transition matrix is required to be doubly stochastic but is not.
class StochasticityError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
};

/// The interference regime of the data is not hyperbolic.
class RegimeError : public Error {
   public:
    using Error::Error;
};

/// Requested generation parameters cannot produce a probability in (0, 1).
class InfeasibleError : public Error {
   public:
    using Error::Error;
};

}  // namespace qlra
