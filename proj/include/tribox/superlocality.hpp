#pragma once

#include <optional>

#include "tribox/simplex.hpp"
#include "tribox/vertices.hpp"

namespace tribox {

/// Constraint class imposed on the pair factors of a 2-sublocal
/// decomposition: Local adds the complete CHSH facet set on top of
/// nonsignaling; Unconstrained allows arbitrary conditional distributions.
enum class PairClass { Local, NS, Unconstrained };
const char* pair_class_name(PairClass c);

struct SublocalTerm {
  Scalar weight;
  SingleBox single;   // the lone party's response (may be non-deterministic)
  BipartiteBox pair;  // the pair's shared box
};

/// A d_λ-term model p(abc|xyz) = Σ_λ w_λ·single_λ(ã|x̃)·pair_λ(b̃c̃|ỹz̃)
/// across a cut. terms.size() is the hidden-variable dimension d_λ.
struct SublocalDecomposition {
  Cut cut = Cut::A_BC;
  PairClass pair_class = PairClass::NS;
  std::vector<SublocalTerm> terms;
  int dimension() const { return static_cast<int>(terms.size()); }
};

bool pair_in_class(const BipartiteBox& pair, PairClass c);
/// Exact re-check: weights form a distribution, factors are normalized and
/// in class, and the weighted products reconstruct the box entrywise.
bool verify_decomposition(const SublocalDecomposition& dec,
                          const TripartiteBox& box);

/// Exact rank of the 4×16 cut flattening, computed with two independent
/// elimination orders (throws if they disagree). Lower-bounds d_λ of any
/// cut-respecting decomposition.
int rank_lower_bound(const TripartiteBox& box, Cut cut);
/// Same for the 4×4 bipartite flattening.
int rank_lower_bound(const BipartiteBox& box);

/// Exhaustive exact search for a d-term decomposition across the cut:
/// product check, then every assignment of d deterministic lone-party
/// strategies (up to permutation) decided by exact LP, then the merge
/// analysis (grouping a feasible 4-term deterministic witness into ≤ d
/// non-deterministic terms). Every returned witness is re-verified; absence
/// is a result, not a certificate.
std::optional<SublocalDecomposition> search_decomposition(
    const TripartiteBox& box, Cut cut, int d, PairClass pair_class);

enum class VerdictStatus { Sublocal, Superlocal, Unknown };
const char* verdict_status_name(VerdictStatus s);

struct RankCertificate {
  int flattening_rank;
  int local_dim;  // the bound d the rank exceeds
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::optional<SublocalDecomposition> witness;   // Sublocal
  std::optional<RankCertificate> certificate;     // Superlocal
};

/// Sublocal when the search yields a verified witness with d_λ ≤ d;
/// Superlocal when the flattening rank exceeds d; Unknown otherwise.
/// A witness together with rank > d is a hard failure (soundness breach).
Verdict superlocality_verdict(const TripartiteBox& box, Cut cut, int d);

struct GenuineReport {
  std::array<Verdict, 3> per_cut;  // indexed per kAllCuts
  bool genuine = false;   // superlocal across all three cuts
  bool absolute = false;  // superlocal across at least one cut
};
GenuineReport genuine_report(const TripartiteBox& box, int d);

struct BipartiteTerm {
  Scalar weight;
  SingleBox left;   // Bob
  SingleBox right;  // Charlie
};
struct BipartiteDecomposition {
  std::vector<BipartiteTerm> terms;
  int dimension() const { return static_cast<int>(terms.size()); }
};
bool verify_decomposition(const BipartiteDecomposition& dec,
                          const BipartiteBox& box);
std::optional<BipartiteDecomposition> search_bipartite_decomposition(
    const BipartiteBox& box, int d);

struct BipartiteVerdict {
  VerdictStatus status = VerdictStatus::Unknown;
  std::optional<BipartiteDecomposition> witness;
  std::optional<RankCertificate> certificate;
};
BipartiteVerdict bipartite_verdict(const BipartiteBox& box, int d);

/// The appendix simulation protocols, as literal four-term tables:
///   SvF_A — 2-local form of the Svetlichny family, CHSH-local pair
///           factors, valid for 0 < μ ≤ 1/√2;
///   MF_C  — 2-local form of the Mermin family, CHSH-local factors,
///           valid for 0 < ν ≤ 1/2;
///   MF_D  — 2-local form of the Mermin family with nonsignaling PR-mixture
///           factors, valid for 0 < ν ≤ 1.
/// Each reconstructs the family box exactly (verified before returning).
enum class AppendixKind { SvF_A, MF_C, MF_D };
SublocalDecomposition appendix_decomposition(AppendixKind kind,
                                             const Scalar& param);

/// Auxiliary exact check for full (3-party) sublocality, d ≤ 2: exhaustive
/// enumeration of deterministic strategy triples per term.
struct FullProductTerm {
  Scalar weight;
  SingleBox alice, bob, charlie;
};
std::optional<std::vector<FullProductTerm>> search_full_sublocal(
    const TripartiteBox& box, int d);

}  // namespace tribox
