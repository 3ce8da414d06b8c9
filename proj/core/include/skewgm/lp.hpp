// Copyright 2026 The skewgm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "skewgm/types.hpp"

namespace skewgm {

struct L1BoxSolution {
  Vector x;
  double objective = 0.0;
  /// max(0, ||A x - b||_inf - radius) after refinement.
  double max_violation = 0.0;
  int pivots = 0;
  bool feasible = false;
};

/// Solves  min ||x||_1  subject to  ||A x - b||_inf <= radius.
///
/// The problem is split into x = u - v with u, v >= 0 and solved with a
/// dense dual simplex started from the all-slack basis (dual feasible
/// because every cost is 1). The final basic solution is recomputed from
/// the original constraint columns with an LU solve, so the returned point
/// does not carry tableau round-off.
L1BoxSolution solve_l1_box(const Matrix& A, const Vector& b, double radius);

}  // namespace skewgm
