#include "tribox/strengths.hpp"

#include <array>

#include "tribox/inequalities.hpp"

namespace tribox {

namespace {

// g = 4α+2β+γ. set_bit(g, position, value) with position 0 = α.
int with_bit(int g, int pos, int val) {
  int shift = 2 - pos;
  return (g & ~(1 << shift)) | (val << shift);
}

Scalar nested_min(const std::array<Scalar, 8>& v) {
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::optional<Scalar> best;
  for (const auto& perm : perms) {
    auto leaf = [&](int o, int m, int i) {
      int g = 0;
      g = with_bit(g, perm[0], o);
      g = with_bit(g, perm[1], m);
      g = with_bit(g, perm[2], i);
      return v[g];
    };
    auto inner = [&](int o, int m) { return (leaf(o, m, 0) - leaf(o, m, 1)).abs(); };
    auto middle = [&](int o) { return (inner(o, 0) - inner(o, 1)).abs(); };
    Scalar val = (middle(0) - middle(1)).abs();
    if (!best || val < *best) best = val;
  }
  return *best;
}

std::array<Scalar, 8> sv_base_values(const TripartiteBox& box) {
  std::array<Scalar, 8> v;
  for (int g = 0; g < 8; ++g)
    v[g] = svetlichny_value(box, g >> 2 & 1, g >> 1 & 1, g & 1, 0);
  return v;
}

std::array<Scalar, 8> mermin_base_values(const TripartiteBox& box) {
  std::array<Scalar, 8> v;
  for (int g = 0; g < 8; ++g)
    v[g] = mermin_value(box, g >> 2 & 1, g >> 1 & 1, g & 1, 0);
  return v;
}

bool nonnegative(const TripartiteBox& box) {
  for (const auto& e : box.p)
    if (e.sign() < 0) return false;
  return true;
}

// (box − w·part)/(1−w); caller checks nonnegativity.
TripartiteBox peel(const TripartiteBox& box, const TripartiteBox& part,
                   const Scalar& w) {
  TripartiteBox out;
  Scalar rest = Scalar(1) - w;
  for (int e = 0; e < 64; ++e) out.p[e] = (box.p[e] - w * part.p[e]) / rest;
  return out;
}

}  // namespace

Scalar g_quantity(const TripartiteBox& box) {
  return nested_min(sv_base_values(box));
}

Scalar q_quantity(const TripartiteBox& box) {
  return nested_min(mermin_base_values(box));
}

StrengthReport strength_lp(const TripartiteBox& box) {
  MembershipWitness in_r = lp_feasible(box, Polytope::R);
  if (!in_r.feasible)
    throw NotInRError("box is not in the Svetlichny-box polytope");

  StrengthReport rep;
  rep.method = StrengthMethod::LP;
  rep.consistent = true;
  auto fail = [&](const std::string& why) {
    rep.method = StrengthMethod::Formula;
    rep.consistent = false;
    if (!rep.note.empty()) rep.note += "; ";
    rep.note += why;
  };

  // Svetlichny strength from the G identity, dominant label from the
  // largest-magnitude value; ε orients the vertex along the violation.
  auto sv = sv_base_values(box);
  rep.mu = nested_min(sv) / Scalar(8);
  TripartiteBox residual1 = box;
  if (rep.mu.sign() > 0) {
    int gstar = 0;
    for (int g = 1; g < 8; ++g)
      if (sv[g].abs() > sv[gstar].abs()) gstar = g;
    int eps = sv[gstar].sign() < 0 ? 1 : 0;
    VertexLabel dom =
        VertexLabel::svetlichny(gstar >> 2 & 1, gstar >> 1 & 1, gstar & 1, eps);
    rep.dominant_sv = dom;
    if (rep.mu > Scalar(1)) {
      fail("G/8 exceeds 1");
      rep.mu = Scalar(1);
    }
    if (rep.mu == Scalar(1)) {
      if (box == make_vertex(dom)) {
        rep.residual = white_noise();
        rep.nu = Scalar(0);
        return rep;
      }
      fail("G/8 = 1 but box is not the dominant Svetlichny box");
      rep.residual = box;
      rep.nu = Scalar(0);
      return rep;
    }
    residual1 = peel(box, make_vertex(dom), rep.mu);
    if (!nonnegative(residual1)) {
      fail("Svetlichny extraction leaves negative entries");
      rep.residual = box;
      rep.nu = Scalar(0);
      return rep;
    }
    if (g_quantity(residual1) != Scalar(0))
      fail("residual after Svetlichny extraction has G != 0");
    if (!lp_feasible(residual1, Polytope::L2).feasible)
      fail("residual after Svetlichny extraction is not Svetlichny-local");
  }

  // Mermin strength of the Svetlichny-local part, via the Q identity.
  Scalar q1 = q_quantity(residual1);
  Scalar nu1 = q1 / Scalar(4);
  TripartiteBox residual2 = residual1;
  if (nu1.sign() > 0) {
    auto mv = mermin_base_values(residual1);
    int gstar = 0;
    for (int g = 1; g < 8; ++g)
      if (mv[g].abs() > mv[gstar].abs()) gstar = g;
    int eps = mv[gstar].sign() < 0 ? 1 : 0;
    VertexLabel dom =
        VertexLabel::mermin(gstar >> 2 & 1, gstar >> 1 & 1, gstar & 1, eps);
    rep.dominant_mermin = dom;
    if (nu1 > Scalar(1)) {
      fail("Q/4 exceeds 1");
      nu1 = Scalar(1);
    }
    if (nu1 == Scalar(1)) {
      residual2 = white_noise();
      if (residual1 != make_vertex(dom))
        fail("Q/4 = 1 but the Svetlichny-local part is not the Mermin box");
    } else {
      residual2 = peel(residual1, make_vertex(dom), nu1);
      if (!nonnegative(residual2)) {
        fail("Mermin extraction leaves negative entries");
        residual2 = residual1;
        nu1 = Scalar(0);
      }
    }
  }
  rep.nu = (Scalar(1) - rep.mu) * nu1;

  if (rep.consistent) {
    if (q_quantity(residual2) != Scalar(0) ||
        g_quantity(residual2) != Scalar(0))
      fail("final residual has nonzero G or Q");
    else if (!lp_feasible(residual2, Polytope::L2).feasible)
      fail("final residual is not Svetlichny-local");
  }
  rep.residual = residual2;

  // Mixture identity: μ·Sv↑ + ν·M↑ + (1−μ−ν)·residual = box, exactly.
  if (rep.consistent) {
    TripartiteBox rebuilt;
    Scalar rest = Scalar(1) - rep.mu - rep.nu;
    if (rest.sign() < 0) {
      fail("mu + nu exceeds 1");
    } else {
      TripartiteBox sv_part, m_part;
      if (rep.dominant_sv) sv_part = make_vertex(*rep.dominant_sv);
      if (rep.dominant_mermin) m_part = make_vertex(*rep.dominant_mermin);
      for (int e = 0; e < 64; ++e) {
        Scalar v = rest * rep.residual.p[e];
        if (rep.dominant_sv) v += rep.mu * sv_part.p[e];
        if (rep.dominant_mermin) v += rep.nu * m_part.p[e];
        rebuilt.p[e] = v;
      }
      if (!(rebuilt == box)) fail("mixture identity failed");
    }
  }
  return rep;
}

CanonicalDecomposition canonical_decomposition(const TripartiteBox& box) {
  StrengthReport rep = strength_lp(box);
  if (!rep.consistent)
    throw StrengthError("canonical decomposition not certified: " + rep.note);
  return {rep.mu, rep.nu, rep.dominant_sv, rep.dominant_mermin, rep.residual};
}

}  // namespace tribox
