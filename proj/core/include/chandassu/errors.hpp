/*
 * Copyright 2026 The Chandassu Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chandassu {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A virama-final cluster with nothing before it to attach to.
class InputShapeError : public Error {
 public:
  using Error::Error;
};

// Text that contains no Telugu letters once cleaned.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// A token ends in a codepoint with no laghuvu/guruvu weight.
class LookupMissError : public Error {
 public:
  LookupMissError(const std::string& token, char32_t codepoint);
  char32_t codepoint() const { return codepoint_; }

 private:
  char32_t codepoint_;
};

class UnknownGanamError : public Error {
 public:
  using Error::Error;
};

class UnknownTypeError : public Error {
 public:
  using Error::Error;
};

class ConfigValidationError : public Error {
 public:
  using Error::Error;
};

// A yati position that falls outside the ganam cells of a paadam.
class ConfigShapeError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  SchemaError(std::size_t row, const std::string& message);
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

}  // namespace chandassu
