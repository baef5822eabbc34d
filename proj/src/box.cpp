#include "tribox/box.hpp"

namespace tribox {

namespace {

// Relabeled coordinates across a cut: the lone party's (input, output) and
// the pair's (inputs, outputs) in fixed (first, second) order.
struct CutView {
  int lx, la;          // lone party
  int py, pz, pb, pc;  // pair
};

CutView view(Cut cut, int a, int b, int c, int x, int y, int z) {
  switch (cut) {
    case Cut::A_BC:
      return {x, a, y, z, b, c};
    case Cut::B_AC:
      return {y, b, x, z, a, c};
    case Cut::C_AB:
    default:
      return {z, c, x, y, a, b};
  }
}

// Inverse: given lone/pair coordinates, produce (a,b,c,x,y,z).
void unview(Cut cut, int lx, int la, int py, int pz, int pb, int pc, int& a,
            int& b, int& c, int& x, int& y, int& z) {
  switch (cut) {
    case Cut::A_BC:
      x = lx, a = la, y = py, z = pz, b = pb, c = pc;
      break;
    case Cut::B_AC:
      y = lx, b = la, x = py, z = pz, a = pb, c = pc;
      break;
    case Cut::C_AB:
    default:
      z = lx, c = la, x = py, y = pz, a = pb, b = pc;
      break;
  }
}

}  // namespace

const char* cut_name(Cut cut) {
  switch (cut) {
    case Cut::A_BC:
      return "A|BC";
    case Cut::B_AC:
      return "B|AC";
    case Cut::C_AB:
    default:
      return "C|AB";
  }
}

Party lone_party(Cut cut) {
  switch (cut) {
    case Cut::A_BC:
      return Party::A;
    case Cut::B_AC:
      return Party::B;
    case Cut::C_AB:
    default:
      return Party::C;
  }
}

bool SingleBox::normalized() const {
  for (int x = 0; x < 2; ++x) {
    if (at(0, x).sign() < 0 || at(1, x).sign() < 0) return false;
    if (at(0, x) + at(1, x) != Scalar(1)) return false;
  }
  return true;
}

bool SingleBox::deterministic() const {
  for (const auto& v : p)
    if (!v.is_zero() && v != Scalar(1)) return false;
  return true;
}

bool BipartiteBox::normalized() const {
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z) {
      Scalar sum(0);
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          if (at(b, c, y, z).sign() < 0) return false;
          sum += at(b, c, y, z);
        }
      if (sum != Scalar(1)) return false;
    }
  return true;
}

bool BipartiteBox::nonsignaling() const {
  for (int b = 0; b < 2; ++b)
    for (int y = 0; y < 2; ++y)
      if (at(b, 0, y, 0) + at(b, 1, y, 0) != at(b, 0, y, 1) + at(b, 1, y, 1))
        return false;
  for (int c = 0; c < 2; ++c)
    for (int z = 0; z < 2; ++z)
      if (at(0, c, 0, z) + at(1, c, 0, z) != at(0, c, 1, z) + at(1, c, 1, z))
        return false;
  return true;
}

ValidationReport validate(const BipartiteBox& box) {
  ValidationReport r;
  r.nonnegative = true;
  for (const auto& v : box.p)
    if (v.sign() < 0) r.nonnegative = false;
  r.normalized = box.normalized();
  r.nonsignaling = box.nonsignaling();
  return r;
}

ValidationReport validate(const TripartiteBox& box) {
  ValidationReport r;
  r.nonnegative = true;
  for (const auto& v : box.p)
    if (v.sign() < 0) r.nonnegative = false;

  r.normalized = true;
  for (int in = 0; in < 8; ++in) {
    Scalar sum(0);
    for (int out = 0; out < 8; ++out) sum += box.p[8 * in + out];
    if (sum != Scalar(1)) r.normalized = false;
  }

  // Nonsignaling: each pair marginal independent of the remaining input.
  // (Single-party marginals then follow; checked via the pair conditions.)
  r.nonsignaling = true;
  for (int a = 0; a < 2 && r.nonsignaling; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          Scalar m0(0), m1(0);
          for (int c = 0; c < 2; ++c) {
            m0 += box.at(a, b, c, x, y, 0);
            m1 += box.at(a, b, c, x, y, 1);
          }
          if (m0 != m1) r.nonsignaling = false;
        }
  for (int a = 0; a < 2 && r.nonsignaling; ++a)
    for (int c = 0; c < 2; ++c)
      for (int x = 0; x < 2; ++x)
        for (int z = 0; z < 2; ++z) {
          Scalar m0(0), m1(0);
          for (int b = 0; b < 2; ++b) {
            m0 += box.at(a, b, c, x, 0, z);
            m1 += box.at(a, b, c, x, 1, z);
          }
          if (m0 != m1) r.nonsignaling = false;
        }
  for (int b = 0; b < 2 && r.nonsignaling; ++b)
    for (int c = 0; c < 2; ++c)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z) {
          Scalar m0(0), m1(0);
          for (int a = 0; a < 2; ++a) {
            m0 += box.at(a, b, c, 0, y, z);
            m1 += box.at(a, b, c, 1, y, z);
          }
          if (m0 != m1) r.nonsignaling = false;
        }
  return r;
}

Correlators correlators_of(const TripartiteBox& box) {
  Correlators c;
  auto sgn = [](int bit) { return bit ? Scalar(-1) : Scalar(1); };
  // Reference inputs 0 for the parties traced out (exact for NS boxes).
  for (int x = 0; x < 2; ++x) {
    Scalar sa(0), sb(0), sc(0);
    for (int o = 0; o < 8; ++o) {
      int a = o >> 2 & 1, b = o >> 1 & 1, cc = o & 1;
      sa += sgn(a) * box.at(a, b, cc, x, 0, 0);
      sb += sgn(b) * box.at(a, b, cc, 0, x, 0);
      sc += sgn(cc) * box.at(a, b, cc, 0, 0, x);
    }
    c.singles[0 + x] = sa;
    c.singles[2 + x] = sb;
    c.singles[4 + x] = sc;
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Scalar ab(0), ac(0), bc(0);
      for (int o = 0; o < 8; ++o) {
        int a = o >> 2 & 1, b = o >> 1 & 1, cc = o & 1;
        ab += sgn(a ^ b) * box.at(a, b, cc, i, j, 0);
        ac += sgn(a ^ cc) * box.at(a, b, cc, i, 0, j);
        bc += sgn(b ^ cc) * box.at(a, b, cc, 0, i, j);
      }
      c.pairs[2 * i + j] = ab;
      c.pairs[4 + 2 * i + j] = ac;
      c.pairs[8 + 2 * i + j] = bc;
    }
  for (int in = 0; in < 8; ++in) {
    int x = in >> 2 & 1, y = in >> 1 & 1, z = in & 1;
    Scalar t(0);
    for (int o = 0; o < 8; ++o) {
      int a = o >> 2 & 1, b = o >> 1 & 1, cc = o & 1;
      t += sgn(a ^ b ^ cc) * box.at(a, b, cc, x, y, z);
    }
    c.triples[in] = t;
  }
  return c;
}

TripartiteBox from_correlators(const Correlators& c) {
  TripartiteBox box;
  Scalar eighth = Scalar::frac(1, 8);
  for (int in = 0; in < 8; ++in) {
    int x = in >> 2 & 1, y = in >> 1 & 1, z = in & 1;
    for (int o = 0; o < 8; ++o) {
      int a = o >> 2 & 1, b = o >> 1 & 1, cc = o & 1;
      auto sgn = [](int bit) { return bit ? Scalar(-1) : Scalar(1); };
      Scalar v = Scalar(1);
      v += sgn(a) * c.singles[x];
      v += sgn(b) * c.singles[2 + y];
      v += sgn(cc) * c.singles[4 + z];
      v += sgn(a ^ b) * c.pairs[2 * x + y];
      v += sgn(a ^ cc) * c.pairs[4 + 2 * x + z];
      v += sgn(b ^ cc) * c.pairs[8 + 2 * y + z];
      v += sgn(a ^ b ^ cc) * c.triples[in];
      v *= eighth;
      if (v.sign() < 0)
        throw NegativeProbabilityError(
            "correlators lie outside the nonsignaling polytope");
      box.at(a, b, cc, x, y, z) = v;
    }
  }
  return box;
}

namespace {

void check_weights(size_t n_boxes, const std::vector<Scalar>& weights) {
  if (weights.size() != n_boxes || n_boxes == 0)
    throw WeightError("mix: boxes and weights must match and be nonempty");
  Scalar sum(0);
  for (const auto& w : weights) {
    if (w.sign() < 0) throw WeightError("mix: negative weight");
    sum += w;
  }
  if (sum != Scalar(1)) throw WeightError("mix: weights must sum to 1");
}

}  // namespace

TripartiteBox mix(const std::vector<TripartiteBox>& boxes,
                  const std::vector<Scalar>& weights) {
  check_weights(boxes.size(), weights);
  TripartiteBox out;
  for (size_t k = 0; k < boxes.size(); ++k)
    for (int i = 0; i < 64; ++i) out.p[i] += weights[k] * boxes[k].p[i];
  return out;
}

BipartiteBox mix(const std::vector<BipartiteBox>& boxes,
                 const std::vector<Scalar>& weights) {
  check_weights(boxes.size(), weights);
  BipartiteBox out;
  for (size_t k = 0; k < boxes.size(); ++k)
    for (int i = 0; i < 16; ++i) out.p[i] += weights[k] * boxes[k].p[i];
  return out;
}

SingleBox marginal_single(const TripartiteBox& box, Party party) {
  // Compute at all other-input settings and require agreement.
  SingleBox out;
  for (int in = 0; in < 2; ++in)
    for (int o = 0; o < 2; ++o) {
      bool first = true;
      Scalar ref(0);
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) {
          Scalar m(0);
          for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t) {
              switch (party) {
                case Party::A:
                  m += box.at(o, s, t, in, u, v);
                  break;
                case Party::B:
                  m += box.at(s, o, t, u, in, v);
                  break;
                case Party::C:
                  m += box.at(s, t, o, u, v, in);
                  break;
              }
            }
          if (first) {
            ref = m;
            first = false;
          } else if (m != ref) {
            throw SignalingMarginalError(
                "single-party marginal depends on other inputs");
          }
        }
      out.at(o, in) = ref;
    }
  return out;
}

BipartiteBox marginal_pair(const TripartiteBox& box, Cut cut) {
  BipartiteBox out;
  for (int py = 0; py < 2; ++py)
    for (int pz = 0; pz < 2; ++pz)
      for (int pb = 0; pb < 2; ++pb)
        for (int pc = 0; pc < 2; ++pc) {
          bool first = true;
          Scalar ref(0);
          for (int lx = 0; lx < 2; ++lx) {
            Scalar m(0);
            for (int la = 0; la < 2; ++la) {
              int a, b, c, x, y, z;
              unview(cut, lx, la, py, pz, pb, pc, a, b, c, x, y, z);
              m += box.at(a, b, c, x, y, z);
            }
            if (first) {
              ref = m;
              first = false;
            } else if (m != ref) {
              throw SignalingMarginalError(
                  "pair marginal depends on the lone party's input");
            }
          }
          out.at(pb, pc, py, pz) = ref;
        }
  return out;
}

SingleBox marginal_single(const BipartiteBox& box, int party) {
  SingleBox out;
  for (int in = 0; in < 2; ++in)
    for (int o = 0; o < 2; ++o) {
      bool first = true;
      Scalar ref(0);
      for (int u = 0; u < 2; ++u) {
        Scalar m(0);
        for (int s = 0; s < 2; ++s)
          m += party == 0 ? box.at(o, s, in, u) : box.at(s, o, u, in);
        if (first) {
          ref = m;
          first = false;
        } else if (m != ref) {
          throw SignalingMarginalError("bipartite marginal is signaling");
        }
      }
      out.at(o, in) = ref;
    }
  return out;
}

Matrix flatten_cut(const TripartiteBox& box, Cut cut) {
  Matrix m(4, 16);
  for (int i = 0; i < 64; ++i) {
    int in = i / 8, out = i % 8;
    int x = in >> 2 & 1, y = in >> 1 & 1, z = in & 1;
    int a = out >> 2 & 1, b = out >> 1 & 1, c = out & 1;
    CutView v = view(cut, a, b, c, x, y, z);
    m.at(2 * v.lx + v.la, 4 * (2 * v.py + v.pz) + 2 * v.pb + v.pc) = box.p[i];
  }
  return m;
}

Matrix flatten_bipartite(const BipartiteBox& box) {
  Matrix m(4, 4);
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          m.at(2 * y + b, 2 * z + c) = box.at(b, c, y, z);
  return m;
}

TripartiteBox product_box(const SingleBox& single, const BipartiteBox& pair,
                          Cut cut) {
  TripartiteBox out;
  for (int lx = 0; lx < 2; ++lx)
    for (int la = 0; la < 2; ++la)
      for (int py = 0; py < 2; ++py)
        for (int pz = 0; pz < 2; ++pz)
          for (int pb = 0; pb < 2; ++pb)
            for (int pc = 0; pc < 2; ++pc) {
              int a, b, c, x, y, z;
              unview(cut, lx, la, py, pz, pb, pc, a, b, c, x, y, z);
              out.at(a, b, c, x, y, z) =
                  single.at(la, lx) * pair.at(pb, pc, py, pz);
            }
  return out;
}

BipartiteBox product_box(const SingleBox& bob, const SingleBox& charlie) {
  BipartiteBox out;
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z)
          out.at(b, c, y, z) = bob.at(b, y) * charlie.at(c, z);
  return out;
}

}  // namespace tribox
