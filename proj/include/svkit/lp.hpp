// Copyright 2026 The svkit developers
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

#include <vector>

namespace svkit::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct Result {
  Status status = Status::kIterationLimit;
  double objective = 0.0;
  std::vector<double> x;
  int iterations = 0;
};

/// Minimizes c.x subject to A x = b, x >= 0, with a dense two-phase simplex
/// using Bland's anti-cycling rule. Intended for small systems (tens of rows,
/// a few hundred columns); every pivot touches the full tableau.
Result solve(const std::vector<std::vector<double>>& a,
             const std::vector<double>& b, const std::vector<double>& c,
             int max_iterations = 20000);

}  // namespace svkit::lp
