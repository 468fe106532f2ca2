// Copyright 2026 The Infosens Authors. All Rights Reserved.
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

#ifndef INFOSENS_ERRORS_HPP_
#define INFOSENS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace infosens {

// Failures of the numerical layer. The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPositiveDefinite : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Removing an observation would leave a (numerically) singular posterior.
class DegenerateDowndate : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DimMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BadGrid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NegativeInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid experiment configuration. The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientGrid : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace infosens

#endif  // INFOSENS_ERRORS_HPP_
