#include "tribox/families.hpp"

namespace tribox {

namespace {

void check_param(const Scalar& p, const char* name) {
  if (p.sign() <= 0 || p > Scalar(1))
    throw ParamRangeError(std::string(name) + ": parameter must be in (0,1]");
}

}  // namespace

TripartiteBox svetlichny_family(const Scalar& mu) {
  check_param(mu, "svetlichny_family");
  TripartiteBox out;
  Scalar base = Scalar::frac(1, 8);
  Scalar amp = Scalar::frac2(0, 1, 1, 16) * mu;  // √2μ/16
  for (int in = 0; in < 8; ++in) {
    int x = in >> 2 & 1, y = in >> 1 & 1, z = in & 1;
    int q = (x & y) ^ (x & z) ^ (y & z);
    for (int o = 0; o < 8; ++o) {
      int a = o >> 2 & 1, b = o >> 1 & 1, c = o & 1;
      int s = a ^ b ^ c ^ q;
      out.at(a, b, c, x, y, z) = base + (s ? -amp : amp);
    }
  }
  return out;
}

TripartiteBox mermin_family(const Scalar& nu) {
  check_param(nu, "mermin_family");
  TripartiteBox out;
  Scalar base = Scalar::frac(1, 8);
  Scalar amp = Scalar::frac(1, 8) * nu;
  for (int in = 0; in < 8; ++in) {
    int x = in >> 2 & 1, y = in >> 1 & 1, z = in & 1;
    int q = (x & y) ^ (x & z) ^ (y & z);
    bool support = ((x ^ y) == z);
    for (int o = 0; o < 8; ++o) {
      int a = o >> 2 & 1, b = o >> 1 & 1, c = o & 1;
      int s = a ^ b ^ c ^ q;
      out.at(a, b, c, x, y, z) =
          support ? base + (s ? -amp : amp) : base;
    }
  }
  return out;
}

BipartiteBox bb84_family(const Scalar& v) {
  check_param(v, "bb84_family");
  BipartiteBox out;
  Scalar base = Scalar::frac(1, 4);
  Scalar amp = Scalar::frac(1, 4) * v;
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          if (y != z) {
            out.at(b, c, y, z) = base;
            continue;
          }
          int s = b ^ c ^ (y & z);
          out.at(b, c, y, z) = base + (s ? -amp : amp);
        }
  return out;
}

BipartiteBox chsh_family(const Scalar& v) {
  check_param(v, "chsh_family");
  BipartiteBox out;
  Scalar base = Scalar::frac(1, 4);
  Scalar amp = Scalar::frac2(0, 1, 1, 8) * v;  // √2V/8
  for (int y = 0; y < 2; ++y)
    for (int z = 0; z < 2; ++z)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          int s = b ^ c ^ (y & z);
          out.at(b, c, y, z) = base + (s ? -amp : amp);
        }
  return out;
}

}  // namespace tribox
