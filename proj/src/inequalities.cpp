#include "tribox/inequalities.hpp"

namespace tribox {

Scalar svetlichny_value(const TripartiteBox& box, int al, int be, int ga,
                        int ep) {
  Correlators c = correlators_of(box);
  Scalar out(0);
  for (int in = 0; in < 8; ++in) {
    int x = in >> 2 & 1, y = in >> 1 & 1, z = in & 1;
    int s = (x & y) ^ (x & z) ^ (y & z) ^ (al & x) ^ (be & y) ^ (ga & z) ^ ep;
    out += (s ? Scalar(-1) : Scalar(1)) * c.triples[in];
  }
  return out;
}

Scalar mermin_value(const TripartiteBox& box, int al, int be, int ga, int ep) {
  Correlators c = correlators_of(box);
  auto t = [&](int x, int y, int z) { return c.triples[4 * x + 2 * y + z]; };
  auto sgn = [](int bit) { return bit ? Scalar(-1) : Scalar(1); };
  if (((al ^ be ^ ga) & 1) == 0) {
    // M⁺
    return sgn(ga ^ ep) * t(0, 0, 1) + sgn(be ^ ep) * t(0, 1, 0) +
           sgn(al ^ ep) * t(1, 0, 0) + sgn(al ^ be ^ ga ^ ep ^ 1) * t(1, 1, 1);
  }
  // M⁻
  return sgn(al ^ be ^ ep ^ 1) * t(1, 1, 0) + sgn(al ^ ga ^ ep ^ 1) * t(1, 0, 1) +
         sgn(be ^ ga ^ ep ^ 1) * t(0, 1, 1) + sgn(ep) * t(0, 0, 0);
}

std::array<Scalar, 8> chsh_values(const BipartiteBox& box) {
  // ⟨B_yC_z⟩
  std::array<Scalar, 4> corr;
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z) {
      Scalar e(0);
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          e += ((b ^ c) ? Scalar(-1) : Scalar(1)) * box.at(b, c, y, z);
      corr[2 * y + z] = e;
    }
  std::array<Scalar, 8> out;
  for (int i = 0; i < 8; ++i) {
    int al = i >> 2 & 1, be = i >> 1 & 1, ga = i & 1;
    Scalar v(0);
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        int s = (y & z) ^ (al & y) ^ (be & z) ^ ga;
        v += (s ? Scalar(-1) : Scalar(1)) * corr[2 * y + z];
      }
    out[i] = v;
  }
  return out;
}

std::vector<InequalityValue> violation_report(const TripartiteBox& box) {
  std::vector<InequalityValue> out;
  out.reserve(32);
  for (int i = 0; i < 16; ++i) {
    int al = i >> 3 & 1, be = i >> 2 & 1, ga = i >> 1 & 1, ep = i & 1;
    Scalar v = svetlichny_value(box, al, be, ga, ep);
    out.push_back({InequalityFamily::Svetlichny,
                   {al, be, ga, ep},
                   v,
                   Scalar(4),
                   Scalar(8),
                   v > Scalar(4),
                   v == Scalar(8)});
  }
  for (int i = 0; i < 16; ++i) {
    int al = i >> 3 & 1, be = i >> 2 & 1, ga = i >> 1 & 1, ep = i & 1;
    Scalar v = mermin_value(box, al, be, ga, ep);
    out.push_back({InequalityFamily::Mermin,
                   {al, be, ga, ep},
                   v,
                   Scalar(2),
                   Scalar(4),
                   v > Scalar(2),
                   v == Scalar(4)});
  }
  return out;
}

std::vector<InequalityValue> violation_report(const BipartiteBox& box) {
  std::vector<InequalityValue> out;
  out.reserve(8);
  auto vals = chsh_values(box);
  for (int i = 0; i < 8; ++i) {
    int al = i >> 2 & 1, be = i >> 1 & 1, ga = i & 1;
    out.push_back({InequalityFamily::CHSH,
                   {al, be, ga, 0},
                   vals[i],
                   Scalar(2),
                   Scalar(4),
                   vals[i] > Scalar(2),
                   vals[i] == Scalar(4)});
  }
  return out;
}

}  // namespace tribox
