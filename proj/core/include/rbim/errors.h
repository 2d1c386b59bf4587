// Copyright 2026 The rbim Authors.
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

#ifndef RBIM_ERRORS_H_
#define RBIM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbim {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grammar violation in rule-base text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  // The message without the "line:column:" prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

// An exponential search was asked to run beyond its configured guard.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidAtom : public Error {
 public:
  using Error::Error;
};

class UnknownAtom : public Error {
 public:
  using Error::Error;
};

class ElementNotInBase : public Error {
 public:
  using Error::Error;
};

class NotARule : public Error {
 public:
  using Error::Error;
};

class UnknownMeasure : public Error {
 public:
  using Error::Error;
};

class UnknownPostulate : public Error {
 public:
  using Error::Error;
};

class ShapeInfeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace rbim

#endif  // RBIM_ERRORS_H_
