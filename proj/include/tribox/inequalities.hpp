#pragma once

#include <array>
#include <vector>

#include "tribox/box.hpp"

namespace tribox {

/// Signed sum over the 8 triple correlators with Svetlichny sign pattern
/// (−1)^{xy⊕xz⊕yz⊕αx⊕βy⊕γz⊕ε}. Local bound 4, algebraic maximum 8.
Scalar svetlichny_value(const TripartiteBox& box, int al, int be, int ga,
                        int ep);

/// Mermin expression M_{αβγε}: the M⁺ branch when α⊕β⊕γ = 0, else M⁻.
/// Local bound 2, algebraic maximum 4.
Scalar mermin_value(const TripartiteBox& box, int al, int be, int ga, int ep);

/// The 8 CHSH expressions Σ_{yz}(−1)^{yz⊕αy⊕βz⊕γ}⟨B_yC_z⟩, indexed
/// 4α+2β+γ. Local bound 2, algebraic maximum 4.
std::array<Scalar, 8> chsh_values(const BipartiteBox& box);

enum class InequalityFamily { Svetlichny, Mermin, CHSH };

struct InequalityValue {
  InequalityFamily family;
  std::array<int, 4> label;  // (α,β,γ,ε); CHSH uses (α,β,γ,0)
  Scalar value;
  Scalar bound;          // local bound
  Scalar algebraic_max;  // nonsignaling maximum
  bool violates_local_bound;
  bool at_algebraic_max;
};

/// All 16 Svetlichny and 16 Mermin values of a tripartite box, with flags.
std::vector<InequalityValue> violation_report(const TripartiteBox& box);
/// The 8 CHSH values of a bipartite box, with flags.
std::vector<InequalityValue> violation_report(const BipartiteBox& box);

}  // namespace tribox
