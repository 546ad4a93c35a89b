/*
 * Copyright 2026 The sepdef Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEPDEF_ERRORS_HPP_
#define SEPDEF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sepdef {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element does not belong to the field context it is used with.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A truncated series is indistinguishable from zero where a nonzero value is
// required, or a decision needs more t-adic digits than are known.
class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

// A documented precondition on an operation's arguments does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Invalid run parameters (field too small, n out of range, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A structural check of the construction failed; `check()` names it.
class CertificationError : public Error {
 public:
  CertificationError(std::string check, const std::string& what)
      : Error(what), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

}  // namespace sepdef

#endif  // SEPDEF_ERRORS_HPP_
