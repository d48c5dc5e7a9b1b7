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

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phaseshift::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kDomain = 3,
    kVerifyFailed = 4,
};

/// Malformed command-line input (exit code 2).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Angle grammar: a bare number is radians; `deg` / `rad` suffixes select the
/// unit; `pi` multiples such as `pi/3`, `2pi/3` or `5*pi/6` are accepted in
/// radians. Throws UsageError on malformed text. No range check.
double parse_angle(std::string_view text);

/// A real number or a fraction `a/b`.
double parse_real(std::string_view text);

/// `beta:alpha`.
std::pair<double, double> parse_range(std::string_view text);

/// Runs one subcommand. `args` excludes the program name. Data goes to `out`
/// (or the --out file); diagnostics and usage text go to `err`.
int dispatch(const std::vector<std::string> &args, std::ostream &out,
             std::ostream &err);

} // namespace phaseshift::cli
