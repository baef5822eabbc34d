#pragma once

#include <map>
#include <optional>

#include "tribox/simplex.hpp"
#include "tribox/vertices.hpp"

namespace tribox {

enum class Polytope { L, L2, R };
const char* polytope_name(Polytope p);  // "L", "L2", "R"
const std::vector<VertexLabel>& polytope_vertices(Polytope p);

/// Feasibility answer for `box ∈ conv(vertices of polytope)`. When feasible
/// the weights are an exact convex decomposition; when not, `farkas` is an
/// exact separating functional over the 64 entry rows plus the
/// normalization row (yᵀ(v,1) ≤ 0 for every vertex, yᵀ(box,1) > 0).
struct MembershipWitness {
  Polytope polytope = Polytope::L;
  bool feasible = false;
  std::map<VertexLabel, Scalar> weights;
  std::vector<Scalar> farkas;  // 65 entries when infeasible
};

MembershipWitness lp_feasible(const TripartiteBox& box, Polytope polytope);

/// Re-checks a witness with arithmetic only (no solver): exact mixture
/// reconstruction for feasible witnesses, exact separation for Farkas.
bool verify_witness(const MembershipWitness& w, const TripartiteBox& box);

struct MembershipReport {
  bool in_ns = false;
  bool in_r = false;
  bool in_l2 = false;
  bool in_l = false;
  MembershipWitness witness_l, witness_l2, witness_r;
};

/// Membership in NS (validation), R, L₂ and L, with nesting asserted:
/// in_L ⇒ in_L2 ⇒ … and in_L ⇒ in_R.
MembershipReport membership_report(const TripartiteBox& box);

}  // namespace tribox
