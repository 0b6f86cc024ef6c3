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

// Built-in invariant suite run by `apnforge selftest`.

#ifndef APNFORGE_SELFTEST_HPP_
#define APNFORGE_SELFTEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace apnforge {

enum class SelftestLevel { kQuick, kFull };

struct SelftestCheck {
  std::string name;
  bool ok = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool ok() const;
};

// kQuick: m <= 4. kFull: m <= 5 and curve counts of h2 for k <= 4.
SelftestReport run_selftest(SelftestLevel level, std::uint64_t seed = 0);

}  // namespace apnforge

#endif  // APNFORGE_SELFTEST_HPP_
