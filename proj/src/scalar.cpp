#include "tribox/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace tribox {

namespace {

int rat_sign(const Rat& r) {
  if (r == 0) return 0;
  return r > 0 ? 1 : -1;
}

std::string rat_str(const Rat& r) { return r.str(); }

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  // mpq_rational accepts "p/q" and "p"; guard against junk it would eat.
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' ||
          c == '+'))
      throw ParseError("bad rational: " + s);
  }
  try {
    Rat r(s);
    return r;
  } catch (const std::exception&) {
    throw ParseError("bad rational: " + s);
  }
}

}  // namespace

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar division by zero");
  // 1/(c+d√2) = (c−d√2)/(c²−2d²)
  Rat den = o.a_ * o.a_ - 2 * (o.b_ * o.b_);
  Scalar conj(o.a_ / den, -o.b_ / den);
  return *this *= conj;
}

int Scalar::sign() const {
  int sa = rat_sign(a_);
  int sb = rat_sign(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a² against 2b². Equality cannot happen for
  // nonzero rationals (√2 irrational).
  Rat lhs = a_ * a_;
  Rat rhs = 2 * (b_ * b_);
  if (lhs == rhs) throw std::logic_error("Scalar::sign: a² = 2b² with a,b ≠ 0");
  return lhs > rhs ? sa : sb;
}

double Scalar::to_double() const {
  return a_.convert_to<double>() +
         b_.convert_to<double>() * 1.4142135623730950488016887242097;
}

std::string Scalar::str() const {
  if (b_ == 0) return rat_str(a_);
  std::string st = rat_str(b_ >= 0 ? b_ : -b_) + "*sqrt2";
  if (a_ == 0) return (b_ < 0 ? "-" : "") + st;
  return rat_str(a_) + (b_ < 0 ? "-" : "+") + st;
}

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty scalar");

  auto parse_term = [](const std::string& t, Rat& rat, Rat& sq2) {
    auto pos = t.find("sqrt2");
    if (pos == std::string::npos) {
      rat += parse_rat(t);
      return;
    }
    if (pos + 5 != t.size()) throw ParseError("bad scalar term: " + t);
    std::string coeff = t.substr(0, pos);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    if (coeff.empty() || coeff == "+")
      sq2 += 1;
    else if (coeff == "-")
      sq2 -= 1;
    else
      sq2 += parse_rat(coeff);
  };

  // Split on '+'/'-' that are not leading and not right after '/', '*'
  // or another sign (those belong to the term).
  Rat rat(0), sq2(0);
  size_t start = 0;
  for (size_t i = 1; i <= s.size(); ++i) {
    if (i == s.size() ||
        ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*' &&
         s[i - 1] != '+' && s[i - 1] != '-')) {
      parse_term(s.substr(start, i - start), rat, sq2);
      start = i;
    }
  }
  return Scalar(rat, sq2);
}

}  // namespace tribox
