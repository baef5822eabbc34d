#pragma once

#include <array>
#include <vector>

#include "tribox/linalg.hpp"
#include "tribox/scalar.hpp"

namespace tribox {

struct BoxError : std::runtime_error {
  explicit BoxError(const std::string& what) : std::runtime_error(what) {}
};
struct NegativeProbabilityError : BoxError {
  explicit NegativeProbabilityError(const std::string& what) : BoxError(what) {}
};
struct SignalingMarginalError : BoxError {
  explicit SignalingMarginalError(const std::string& what) : BoxError(what) {}
};
struct WeightError : BoxError {
  explicit WeightError(const std::string& what) : BoxError(what) {}
};

/// One-party conditional distribution p(a|x), a,x ∈ {0,1}.
struct SingleBox {
  std::array<Scalar, 4> p{};

  Scalar& at(int a, int x) { return p[2 * x + a]; }
  const Scalar& at(int a, int x) const { return p[2 * x + a]; }

  bool normalized() const;
  bool deterministic() const;

  friend bool operator==(const SingleBox&, const SingleBox&) = default;
};

/// Two-party conditional distribution p(bc|yz); row index (y,z), column (b,c).
struct BipartiteBox {
  std::array<Scalar, 16> p{};

  Scalar& at(int b, int c, int y, int z) { return p[4 * (2 * y + z) + 2 * b + c]; }
  const Scalar& at(int b, int c, int y, int z) const {
    return p[4 * (2 * y + z) + 2 * b + c];
  }

  bool normalized() const;
  bool nonsignaling() const;

  friend bool operator==(const BipartiteBox&, const BipartiteBox&) = default;
};

/// Three-party conditional distribution p(abc|xyz). The central object.
struct TripartiteBox {
  std::array<Scalar, 64> p{};

  static int index(int a, int b, int c, int x, int y, int z) {
    return 8 * (4 * x + 2 * y + z) + 4 * a + 2 * b + c;
  }
  Scalar& at(int a, int b, int c, int x, int y, int z) {
    return p[index(a, b, c, x, y, z)];
  }
  const Scalar& at(int a, int b, int c, int x, int y, int z) const {
    return p[index(a, b, c, x, y, z)];
  }

  friend bool operator==(const TripartiteBox&, const TripartiteBox&) = default;
};

struct ValidationReport {
  bool nonnegative = false;
  bool normalized = false;
  bool nonsignaling = false;
  bool ok() const { return nonnegative && normalized && nonsignaling; }
};

ValidationReport validate(const TripartiteBox& box);
ValidationReport validate(const BipartiteBox& box);

/// Bipartition of {A,B,C}: the lone party vs the pair.
enum class Cut { A_BC, B_AC, C_AB };
inline constexpr std::array<Cut, 3> kAllCuts{Cut::A_BC, Cut::B_AC, Cut::C_AB};
const char* cut_name(Cut cut);  // "A|BC", "B|AC", "C|AB"

enum class Party { A, B, C };
Party lone_party(Cut cut);

/// The 6 single, 12 pair and 8 triple expectation values that fully specify
/// a nonsignaling box.
struct Correlators {
  std::array<Scalar, 6> singles{};   // ⟨A_x⟩,⟨B_y⟩,⟨C_z⟩: [2·party + input]
  std::array<Scalar, 12> pairs{};    // AB[2x+y], AC[4+2x+z], BC[8+2y+z]
  std::array<Scalar, 8> triples{};   // ⟨A_xB_yC_z⟩: [4x+2y+z]

  friend bool operator==(const Correlators&, const Correlators&) = default;
};

Correlators correlators_of(const TripartiteBox& box);

/// Inverse of correlators_of. Throws NegativeProbabilityError when the
/// expectations lie outside the nonsignaling polytope.
TripartiteBox from_correlators(const Correlators& c);

/// Entrywise convex combination. Weights must be ≥ 0 and sum to 1.
TripartiteBox mix(const std::vector<TripartiteBox>& boxes,
                  const std::vector<Scalar>& weights);
BipartiteBox mix(const std::vector<BipartiteBox>& boxes,
                 const std::vector<Scalar>& weights);

/// Marginal of one party / of the pair across a cut. Requires the marginal
/// to be independent of the other parties' inputs (throws otherwise).
SingleBox marginal_single(const TripartiteBox& box, Party party);
BipartiteBox marginal_pair(const TripartiteBox& box, Cut cut);
SingleBox marginal_single(const BipartiteBox& box, int party);  // 0=B, 1=C

/// 4×16 flattening across a cut: row (x̃,ã) of the lone party, column
/// (ỹz̃,b̃c̃) of the pair; entry = p(abc|xyz) under the cut's relabeling.
/// Any d-term cut-respecting decomposition writes this matrix as a sum of
/// d rank-1 terms, so its rank lower-bounds the hidden-variable dimension.
Matrix flatten_cut(const TripartiteBox& box, Cut cut);

/// 4×4 flattening of a bipartite box: rows (y,b), columns (z,c).
Matrix flatten_bipartite(const BipartiteBox& box);

/// Product box single ⊗ pair, with the lone party placed per the cut.
TripartiteBox product_box(const SingleBox& single, const BipartiteBox& pair,
                          Cut cut);
BipartiteBox product_box(const SingleBox& bob, const SingleBox& charlie);

}  // namespace tribox
