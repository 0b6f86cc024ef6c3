// Copyright 2026 The apnforge Authors
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

#ifndef APNFORGE_ERROR_HPP_
#define APNFORGE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace apnforge {

// Bad input: unsupported degree, zero inversion, malformed parameters.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical claim the library checks did not hold. Either the data
// contradicts a theorem or there is a bug; callers should treat it as a
// failed verification rather than a usage problem.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Emits a non-fatal diagnostic on stderr. Tests silence these.
void warn(const std::string& message);
void set_warnings_enabled(bool enabled);

}  // namespace apnforge

#endif  // APNFORGE_ERROR_HPP_
