#include "tribox/membership.hpp"

namespace tribox {

const char* polytope_name(Polytope p) {
  switch (p) {
    case Polytope::L:
      return "L";
    case Polytope::L2:
      return "L2";
    case Polytope::R:
    default:
      return "R";
  }
}

const std::vector<VertexLabel>& polytope_vertices(Polytope p) {
  switch (p) {
    case Polytope::L:
      return vertices_L();
    case Polytope::L2:
      return vertices_L2();
    case Polytope::R:
    default:
      return vertices_R();
  }
}

namespace {

// System: 64 entry equalities plus one normalization row (columns are
// vertex weights). The box entries carry the √2 parts; vertices are rational.
void build_system(const std::vector<VertexLabel>& verts,
                  const TripartiteBox& box, Matrix& a,
                  std::vector<Scalar>& b) {
  const int n = static_cast<int>(verts.size());
  a = Matrix(65, n);
  b.assign(65, Scalar(0));
  for (int j = 0; j < n; ++j) {
    TripartiteBox v = make_vertex(verts[j]);
    for (int e = 0; e < 64; ++e) a.at(e, j) = v.p[e];
    a.at(64, j) = Scalar(1);
  }
  for (int e = 0; e < 64; ++e) b[e] = box.p[e];
  b[64] = Scalar(1);
}

}  // namespace

MembershipWitness lp_feasible(const TripartiteBox& box, Polytope polytope) {
  const auto& verts = polytope_vertices(polytope);
  Matrix a;
  std::vector<Scalar> b;
  build_system(verts, box, a, b);
  FeasibilityResult r = solve_feasibility(a, b);

  MembershipWitness w;
  w.polytope = polytope;
  w.feasible = r.feasible;
  if (r.feasible) {
    for (size_t j = 0; j < verts.size(); ++j)
      if (!r.solution[j].is_zero()) w.weights[verts[j]] = r.solution[j];
  } else {
    w.farkas = std::move(r.farkas);
  }
  if (!verify_witness(w, box))
    throw std::logic_error("membership witness failed verification");
  return w;
}

bool verify_witness(const MembershipWitness& w, const TripartiteBox& box) {
  if (w.feasible) {
    Scalar total(0);
    TripartiteBox sum;
    for (const auto& [label, weight] : w.weights) {
      if (weight.sign() < 0) return false;
      total += weight;
      TripartiteBox v = make_vertex(label);
      for (int e = 0; e < 64; ++e) sum.p[e] += weight * v.p[e];
    }
    return total == Scalar(1) && sum == box;
  }
  if (w.farkas.size() != 65) return false;
  // Separation: nonpositive on every vertex, positive on the box.
  for (const auto& label : polytope_vertices(w.polytope)) {
    TripartiteBox v = make_vertex(label);
    Scalar dot = w.farkas[64];
    for (int e = 0; e < 64; ++e) dot += w.farkas[e] * v.p[e];
    if (dot.sign() > 0) return false;
  }
  Scalar dot = w.farkas[64];
  for (int e = 0; e < 64; ++e) dot += w.farkas[e] * box.p[e];
  return dot.sign() > 0;
}

MembershipReport membership_report(const TripartiteBox& box) {
  MembershipReport rep;
  rep.in_ns = validate(box).ok();
  rep.witness_l = lp_feasible(box, Polytope::L);
  rep.witness_l2 = lp_feasible(box, Polytope::L2);
  rep.witness_r = lp_feasible(box, Polytope::R);
  rep.in_l = rep.witness_l.feasible;
  rep.in_l2 = rep.witness_l2.feasible;
  rep.in_r = rep.witness_r.feasible;
  // Nesting L ⊆ L₂ ⊆ NS and L ⊆ R ⊆ NS must hold on every report.
  if (rep.in_l && (!rep.in_l2 || !rep.in_r))
    throw std::logic_error("polytope nesting violated: L ⊄ L2/R");
  if ((rep.in_l2 || rep.in_r) && !rep.in_ns)
    throw std::logic_error("polytope nesting violated: L2/R ⊄ NS");
  return rep;
}

}  // namespace tribox
