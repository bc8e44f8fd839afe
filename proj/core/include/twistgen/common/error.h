// Copyright (c) 2026 twistgen contributors
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

#ifndef TWISTGEN_COMMON_ERROR_H_
#define TWISTGEN_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace twistgen {

// Base class for all twistgen errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid or inconsistent configuration (bad flag, bad override, bad value).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Malformed, missing, or inconsistent input data.
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

// A model or pipeline stage failed at runtime.
class BackendError : public Error {
 public:
  explicit BackendError(const std::string& msg) : Error(msg) {}
};

}  // namespace twistgen

#endif  // TWISTGEN_COMMON_ERROR_H_
