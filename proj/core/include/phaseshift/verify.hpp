// Copyright 2026 The phaseshift Authors
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

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace phaseshift::verify {

struct CheckResult {
    std::string module; ///< "analytics", "simulator" or "harness"
    std::string name;
    bool pass = false;
    std::string detail; ///< worst error or first counterexample
    double seconds = 0.0;
};

struct Report {
    std::vector<CheckResult> checks;
    double seconds = 0.0;
    bool all_pass() const;
};

/// Runs every invariant of the analytics, simulator and harness modules:
/// closed-form identities, oracle equivalence against the dense simulator,
/// recursion consistency and sweep determinism. `on_check` is called after
/// each check finishes.
Report run_all(const std::function<void(const CheckResult &)> &on_check = {});

} // namespace phaseshift::verify
