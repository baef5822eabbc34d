#include "tribox/vertices.hpp"

#include <map>
#include <mutex>

#include "tribox/inequalities.hpp"

namespace tribox {

const char* pairing_name(Pairing p) {
  switch (p) {
    case Pairing::AB_C:
      return "AB";
    case Pairing::AC_B:
      return "AC";
    case Pairing::BC_A:
    default:
      return "BC";
  }
}

std::string VertexLabel::str() const {
  auto bitstr = [&](int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s.push_back(bits[i] ? '1' : '0');
    return s;
  };
  switch (kind) {
    case Kind::Deterministic:
      return "D:" + bitstr(6);
    case Kind::TwoLocal:
      return std::string("L2:") + pairing_name(pairing) + ":" + bitstr(4);
    case Kind::Svetlichny:
      return "Sv:" + bitstr(4);
    case Kind::Mermin:
    default:
      return "M:" + bitstr(4);
  }
}

VertexLabel VertexLabel::parse(const std::string& s) {
  auto bits_of = [&](const std::string& t, int n) {
    if (static_cast<int>(t.size()) != n)
      throw ParseError("bad vertex label: " + s);
    std::array<int, 6> b{};
    for (int i = 0; i < n; ++i) {
      if (t[i] != '0' && t[i] != '1') throw ParseError("bad vertex label: " + s);
      b[i] = t[i] - '0';
    }
    return b;
  };
  if (s.rfind("D:", 0) == 0) {
    auto b = bits_of(s.substr(2), 6);
    return deterministic(b[0], b[1], b[2], b[3], b[4], b[5]);
  }
  if (s.rfind("Sv:", 0) == 0) {
    auto b = bits_of(s.substr(3), 4);
    return svetlichny(b[0], b[1], b[2], b[3]);
  }
  if (s.rfind("M:", 0) == 0) {
    auto b = bits_of(s.substr(2), 4);
    return mermin(b[0], b[1], b[2], b[3]);
  }
  if (s.rfind("L2:", 0) == 0) {
    std::string rest = s.substr(3);
    Pairing pr;
    if (rest.rfind("AB:", 0) == 0)
      pr = Pairing::AB_C;
    else if (rest.rfind("AC:", 0) == 0)
      pr = Pairing::AC_B;
    else if (rest.rfind("BC:", 0) == 0)
      pr = Pairing::BC_A;
    else
      throw ParseError("bad vertex label: " + s);
    auto b = bits_of(rest.substr(3), 4);
    return two_local(pr, b[0], b[1], b[2], b[3]);
  }
  throw ParseError("bad vertex label: " + s);
}

SingleBox deterministic_single(int al, int be) {
  SingleBox out;
  for (int x = 0; x < 2; ++x) out.at((al & x) ^ be, x) = Scalar(1);
  return out;
}

BipartiteBox deterministic_pair(int ga, int ep, int ze, int et) {
  BipartiteBox out;
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z)
      out.at((ga & y) ^ ep, (ze & z) ^ et, y, z) = Scalar(1);
  return out;
}

BipartiteBox pr_box(int al, int be, int ga) {
  BipartiteBox out;
  Scalar half = Scalar::frac(1, 2);
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          if ((b ^ c) == ((y & z) ^ (al & y) ^ (be & z) ^ ga))
            out.at(b, c, y, z) = half;
  return out;
}

namespace {

TripartiteBox svetlichny_box(int al, int be, int ga, int ep) {
  TripartiteBox out;
  Scalar quarter = Scalar::frac(1, 4);
  for (int in = 0; in < 8; ++in) {
    int x = in >> 2 & 1, y = in >> 1 & 1, z = in & 1;
    int target =
        (x & y) ^ (x & z) ^ (y & z) ^ (al & x) ^ (be & y) ^ (ga & z) ^ ep;
    for (int o = 0; o < 8; ++o) {
      int a = o >> 2 & 1, b = o >> 1 & 1, c = o & 1;
      if ((a ^ b ^ c) == target) out.at(a, b, c, x, y, z) = quarter;
    }
  }
  return out;
}

TripartiteBox two_local_box(Pairing pr, int al, int be, int ga, int ep) {
  // PR^{αβγ} on the pair, deterministic D^{γε} for the lone party; the γ
  // bit is shared between the two factors (16 vertices per pairing).
  BipartiteBox prb = pr_box(al, be, ga);
  SingleBox det = deterministic_single(ga, ep);
  Cut cut = pr == Pairing::AB_C   ? Cut::C_AB
            : pr == Pairing::AC_B ? Cut::B_AC
                                  : Cut::A_BC;
  return product_box(det, prb, cut);
}

// Mermin boxes are the equal mixtures of two Svetlichny boxes whose labels
// differ by (1,1,1,0) or (1,1,1,1); each attains exactly one Mermin
// inequality at its algebraic maximum 4. Catalog built once by search.
const std::array<TripartiteBox, 16>& mermin_catalog() {
  static std::once_flag flag;
  static std::array<TripartiteBox, 16> catalog;
  std::call_once(flag, [] {
    std::array<bool, 16> found{};
    Scalar half = Scalar::frac(1, 2);
    for (int i = 0; i < 16; ++i)
      for (int j = i + 1; j < 16; ++j) {
        TripartiteBox bi = svetlichny_box(i >> 3 & 1, i >> 2 & 1, i >> 1 & 1,
                                          i & 1);
        TripartiteBox bj = svetlichny_box(j >> 3 & 1, j >> 2 & 1, j >> 1 & 1,
                                          j & 1);
        TripartiteBox m = mix({bi, bj}, {half, half});
        for (int l = 0; l < 16; ++l) {
          Scalar v = mermin_value(m, l >> 3 & 1, l >> 2 & 1, l >> 1 & 1, l & 1);
          if (v == Scalar(4)) {
            if (found[l])
              throw std::logic_error("duplicate Mermin-box maximizer");
            catalog[l] = m;
            found[l] = true;
          }
        }
      }
    for (bool f : found)
      if (!f) throw std::logic_error("incomplete Mermin-box catalog");
  });
  return catalog;
}

}  // namespace

const TripartiteBox& mermin_box(int al, int be, int ga, int ep) {
  return mermin_catalog()[8 * al + 4 * be + 2 * ga + ep];
}

TripartiteBox make_vertex(const VertexLabel& label) {
  const auto& b = label.bits;
  switch (label.kind) {
    case VertexLabel::Kind::Deterministic:
      return product_box(deterministic_single(b[0], b[1]),
                         deterministic_pair(b[2], b[3], b[4], b[5]),
                         Cut::A_BC);
    case VertexLabel::Kind::TwoLocal:
      return two_local_box(label.pairing, b[0], b[1], b[2], b[3]);
    case VertexLabel::Kind::Svetlichny:
      return svetlichny_box(b[0], b[1], b[2], b[3]);
    case VertexLabel::Kind::Mermin:
    default:
      return mermin_box(b[0], b[1], b[2], b[3]);
  }
}

const std::vector<VertexLabel>& vertices_L() {
  static const std::vector<VertexLabel> v = [] {
    std::vector<VertexLabel> out;
    out.reserve(64);
    for (int i = 0; i < 64; ++i)
      out.push_back(VertexLabel::deterministic(i >> 5 & 1, i >> 4 & 1,
                                               i >> 3 & 1, i >> 2 & 1,
                                               i >> 1 & 1, i & 1));
    return out;
  }();
  return v;
}

const std::vector<VertexLabel>& vertices_L2() {
  static const std::vector<VertexLabel> v = [] {
    std::vector<VertexLabel> out = vertices_L();
    out.reserve(112);
    for (Pairing pr : {Pairing::AB_C, Pairing::AC_B, Pairing::BC_A})
      for (int i = 0; i < 16; ++i)
        out.push_back(VertexLabel::two_local(pr, i >> 3 & 1, i >> 2 & 1,
                                             i >> 1 & 1, i & 1));
    return out;
  }();
  return v;
}

const std::vector<VertexLabel>& vertices_R() {
  static const std::vector<VertexLabel> v = [] {
    std::vector<VertexLabel> out = vertices_L2();
    out.reserve(128);
    for (int i = 0; i < 16; ++i)
      out.push_back(VertexLabel::svetlichny(i >> 3 & 1, i >> 2 & 1, i >> 1 & 1,
                                            i & 1));
    return out;
  }();
  return v;
}

TripartiteBox white_noise() {
  TripartiteBox out;
  Scalar eighth = Scalar::frac(1, 8);
  for (auto& v : out.p) v = eighth;
  return out;
}

BipartiteBox white_noise_pair() {
  BipartiteBox out;
  Scalar quarter = Scalar::frac(1, 4);
  for (auto& v : out.p) v = quarter;
  return out;
}

}  // namespace tribox
