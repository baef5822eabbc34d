#pragma once

#include <optional>
#include <string>

#include "tribox/membership.hpp"

namespace tribox {

struct NotInRError : BoxError {
  explicit NotInRError(const std::string& what) : BoxError(what) {}
};
struct StrengthError : BoxError {
  explicit StrengthError(const std::string& what) : BoxError(what) {}
};

/// Nested absolute-difference witness of canonicality over the 8 Svetlichny
/// values S_{αβγ} (ε = 0 representatives): minimum over the six groupings
/// obtained by permuting which label position varies at the inner, middle
/// and outer level. Satisfies G = 8·(Svetlichny strength).
Scalar g_quantity(const TripartiteBox& box);

/// Same construction over the Mermin values M_{αβγ}; Q = 4·(Mermin strength).
Scalar q_quantity(const TripartiteBox& box);

enum class StrengthMethod { Formula, LP };

/// Canonical-decomposition report: box = μ·Sv↑ + ν·M↑ + (1−μ−ν)·residual
/// with G(residual) = Q(residual) = 0 and residual Svetlichny-local.
/// μ and ν come from the G/Q identities; `method` is LP when every step was
/// certified by exact LP (residuals inside the 112-vertex polytope) and the
/// mixture identity re-verified. When certification fails the report is
/// flagged inconsistent instead of resolved (formula values are returned).
struct StrengthReport {
  Scalar mu, nu;
  std::optional<VertexLabel> dominant_sv;
  std::optional<VertexLabel> dominant_mermin;
  TripartiteBox residual;
  StrengthMethod method = StrengthMethod::Formula;
  bool consistent = false;
  std::string note;
};

/// Throws NotInRError when the box is outside the Svetlichny-box polytope.
StrengthReport strength_lp(const TripartiteBox& box);

struct CanonicalDecomposition {
  Scalar mu, nu;
  std::optional<VertexLabel> sv_label;
  std::optional<VertexLabel> mermin_variant;
  TripartiteBox residual;
};

/// strength_lp with the postcondition enforced: throws StrengthError when
/// the certified decomposition could not be produced.
CanonicalDecomposition canonical_decomposition(const TripartiteBox& box);

}  // namespace tribox
