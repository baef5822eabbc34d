#pragma once

#include <optional>
#include <vector>

#include "tribox/linalg.hpp"

namespace tribox {

/// Outcome of an exact feasibility question: does A·x = b admit x ≥ 0?
/// Exactly one of `solution` / `farkas` is set. The Farkas vector satisfies
/// yᵀA_j ≤ 0 for every column j and yᵀb > 0, so infeasibility can be
/// re-checked with dot products alone.
struct FeasibilityResult {
  bool feasible = false;
  std::vector<Scalar> solution;
  std::vector<Scalar> farkas;
};

/// Phase-1 simplex over Q(√2) with Bland's rule. Redundant equality rows
/// are pruned by exact Gaussian elimination first; duals are mapped back to
/// the original rows through the recorded row combinations.
FeasibilityResult solve_feasibility(const Matrix& a,
                                    const std::vector<Scalar>& b);

}  // namespace tribox
