#include "tribox/superlocality.hpp"

#include <algorithm>

#include "tribox/families.hpp"
#include "tribox/inequalities.hpp"

namespace tribox {

namespace {

// Deterministic lone-party strategies a = αx⊕β, indexed s = 2α+β.
SingleBox strategy(int s) { return deterministic_single(s >> 1 & 1, s & 1); }
int strategy_output(int s, int x) { return ((s >> 1 & 1) & x) ^ (s & 1); }

std::vector<std::vector<int>> multisets(int from, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(size, 0);
  for (;;) {
    out.push_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[i] == from - 1) --i;
    if (i < 0) break;
    int v = cur[i] + 1;
    for (int j = i; j < size; ++j) cur[j] = v;
  }
  return out;
}

// Can the lone party's marginal be written over the multiset's strategies?
// Cheap necessary condition before the full LP (this is the marginal
// argument used to cut the appendix enumeration down to two choices).
bool marginal_expressible(const SingleBox& marg, const std::vector<int>& s) {
  const int d = static_cast<int>(s.size());
  Matrix a(3, d);
  std::vector<Scalar> b(3);
  for (int j = 0; j < d; ++j) {
    a.at(0, j) = strategy_output(s[j], 0) == 0 ? Scalar(1) : Scalar(0);
    a.at(1, j) = strategy_output(s[j], 1) == 0 ? Scalar(1) : Scalar(0);
    a.at(2, j) = Scalar(1);
  }
  b[0] = marg.at(0, 0);
  b[1] = marg.at(0, 1);
  b[2] = Scalar(1);
  return solve_feasibility(a, b).feasible;
}

// CHSH coefficient of cell (b,c|y,z) in expression (al,be,ga).
int chsh_coeff(int i, int b, int c, int y, int z) {
  int al = i >> 2 & 1, be = i >> 1 & 1, ga = i & 1;
  int sgn = (b ^ c) ^ (y & z) ^ (al & y) ^ (be & z) ^ ga;
  return sgn ? -1 : 1;
}

int cell_index(int b, int c, int y, int z) { return 4 * (2 * y + z) + 2 * b + c; }

// Feasibility system for p = Σ_λ strat_λ ⊗ T_λ with subnormalized tables
// T_λ = w_λ·pair_λ. Linear throughout: masses, NS and the scaled CHSH
// bounds are all linear in T.
std::optional<std::vector<BipartiteBox>> assignment_lp(
    const Matrix& flat, const std::vector<int>& strats, PairClass pc,
    std::vector<Scalar>* masses_out) {
  const int d = static_cast<int>(strats.size());
  const int nslack = pc == PairClass::Local ? 8 * d : 0;
  const int nv = 16 * d + nslack;
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  auto new_row = [&]() -> std::vector<Scalar>& {
    rows.emplace_back(nv, Scalar(0));
    rhs.emplace_back(0);
    return rows.back();
  };

  for (int lx = 0; lx < 2; ++lx)
    for (int la = 0; la < 2; ++la)
      for (int cell = 0; cell < 16; ++cell) {
        auto& row = new_row();
        for (int l = 0; l < d; ++l)
          if (strategy_output(strats[l], lx) == la)
            row[16 * l + cell] = Scalar(1);
        rhs.back() = flat.at(2 * lx + la, cell);
      }
  for (int l = 0; l < d; ++l) {
    for (int in = 1; in < 4; ++in) {  // equal mass on every input pair
      auto& row = new_row();
      for (int o = 0; o < 4; ++o) {
        row[16 * l + 4 * 0 + o] += Scalar(1);
        row[16 * l + 4 * in + o] -= Scalar(1);
      }
    }
    if (pc != PairClass::Unconstrained) {
      for (int b = 0; b < 2; ++b)
        for (int y = 0; y < 2; ++y) {
          auto& row = new_row();
          for (int c = 0; c < 2; ++c) {
            row[16 * l + cell_index(b, c, y, 0)] += Scalar(1);
            row[16 * l + cell_index(b, c, y, 1)] -= Scalar(1);
          }
        }
      for (int c = 0; c < 2; ++c)
        for (int z = 0; z < 2; ++z) {
          auto& row = new_row();
          for (int b = 0; b < 2; ++b) {
            row[16 * l + cell_index(b, c, 0, z)] += Scalar(1);
            row[16 * l + cell_index(b, c, 1, z)] -= Scalar(1);
          }
        }
    }
    if (pc == PairClass::Local) {
      for (int i = 0; i < 8; ++i) {
        // CHSH_i(T_λ) + slack = 2·mass_λ
        auto& row = new_row();
        for (int y = 0; y < 2; ++y)
          for (int z = 0; z < 2; ++z)
            for (int b = 0; b < 2; ++b)
              for (int c = 0; c < 2; ++c)
                row[16 * l + cell_index(b, c, y, z)] +=
                    Scalar(chsh_coeff(i, b, c, y, z));
        for (int o = 0; o < 4; ++o) row[16 * l + o] -= Scalar(2);
        row[16 * d + 8 * l + i] = Scalar(1);
      }
    }
  }

  Matrix a(static_cast<int>(rows.size()), nv);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < nv; ++j) a.at(static_cast<int>(i), j) = rows[i][j];
  FeasibilityResult r = solve_feasibility(a, rhs);
  if (!r.feasible) return std::nullopt;

  std::vector<BipartiteBox> tables(d);
  if (masses_out) masses_out->assign(d, Scalar(0));
  for (int l = 0; l < d; ++l) {
    for (int cell = 0; cell < 16; ++cell)
      tables[l].p[cell] = r.solution[16 * l + cell];
    if (masses_out) {
      Scalar m(0);
      for (int o = 0; o < 4; ++o) m += tables[l].p[o];
      (*masses_out)[l] = m;
    }
  }
  return tables;
}

// Grouped variant used by the merge analysis: pair factors are normalized
// boxes shared within each group, with fixed lone-party coefficients
// V_G(a|x) = Σ_{i∈G} p_i·[strat_i(x) = a].
std::optional<std::vector<BipartiteBox>> grouped_lp(
    const Matrix& flat, const std::vector<std::vector<int>>& groups,
    const std::vector<Scalar>& weights, PairClass pc) {
  const int k = static_cast<int>(groups.size());
  const int nslack = pc == PairClass::Local ? 8 * k : 0;
  const int nv = 16 * k + nslack;
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  auto new_row = [&]() -> std::vector<Scalar>& {
    rows.emplace_back(nv, Scalar(0));
    rhs.emplace_back(0);
    return rows.back();
  };

  for (int lx = 0; lx < 2; ++lx)
    for (int la = 0; la < 2; ++la)
      for (int cell = 0; cell < 16; ++cell) {
        auto& row = new_row();
        for (int g = 0; g < k; ++g) {
          Scalar v(0);
          for (int i : groups[g])
            if (strategy_output(i, lx) == la) v += weights[i];
          row[16 * g + cell] = v;
        }
        rhs.back() = flat.at(2 * lx + la, cell);
      }
  for (int g = 0; g < k; ++g) {
    for (int in = 0; in < 4; ++in) {  // proper normalization per input
      auto& row = new_row();
      for (int o = 0; o < 4; ++o) row[16 * g + 4 * in + o] = Scalar(1);
      rhs.back() = Scalar(1);
    }
    if (pc != PairClass::Unconstrained) {
      for (int b = 0; b < 2; ++b)
        for (int y = 0; y < 2; ++y) {
          auto& row = new_row();
          for (int c = 0; c < 2; ++c) {
            row[16 * g + cell_index(b, c, y, 0)] += Scalar(1);
            row[16 * g + cell_index(b, c, y, 1)] -= Scalar(1);
          }
        }
      for (int c = 0; c < 2; ++c)
        for (int z = 0; z < 2; ++z) {
          auto& row = new_row();
          for (int b = 0; b < 2; ++b) {
            row[16 * g + cell_index(b, c, 0, z)] += Scalar(1);
            row[16 * g + cell_index(b, c, 1, z)] -= Scalar(1);
          }
        }
    }
    if (pc == PairClass::Local) {
      for (int i = 0; i < 8; ++i) {
        auto& row = new_row();
        for (int y = 0; y < 2; ++y)
          for (int z = 0; z < 2; ++z)
            for (int b = 0; b < 2; ++b)
              for (int c = 0; c < 2; ++c)
                row[16 * g + cell_index(b, c, y, z)] +=
                    Scalar(chsh_coeff(i, b, c, y, z));
        row[16 * k + 8 * g + i] = Scalar(1);
        rhs.back() = Scalar(2);
      }
    }
  }

  Matrix a(static_cast<int>(rows.size()), nv);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < nv; ++j) a.at(static_cast<int>(i), j) = rows[i][j];
  FeasibilityResult r = solve_feasibility(a, rhs);
  if (!r.feasible) return std::nullopt;
  std::vector<BipartiteBox> tables(k);
  for (int g = 0; g < k; ++g)
    for (int cell = 0; cell < 16; ++cell)
      tables[g].p[cell] = r.solution[16 * g + cell];
  return tables;
}

const std::vector<std::vector<std::vector<int>>>& partitions_two() {
  static const std::vector<std::vector<std::vector<int>>> p = {
      {{0}, {1, 2, 3}}, {{1}, {0, 2, 3}}, {{2}, {0, 1, 3}}, {{3}, {0, 1, 2}},
      {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
  return p;
}

const std::vector<std::vector<std::vector<int>>>& partitions_three() {
  static const std::vector<std::vector<std::vector<int>>> p = {
      {{0, 1}, {2}, {3}}, {{0, 2}, {1}, {3}}, {{0, 3}, {1}, {2}},
      {{1, 2}, {0}, {3}}, {{1, 3}, {0}, {2}}, {{2, 3}, {0}, {1}}};
  return p;
}

}  // namespace

const char* pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::Local:
      return "local";
    case PairClass::NS:
      return "ns";
    case PairClass::Unconstrained:
    default:
      return "unconstrained";
  }
}

const char* verdict_status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Sublocal:
      return "sublocal";
    case VerdictStatus::Superlocal:
      return "superlocal";
    case VerdictStatus::Unknown:
    default:
      return "unknown";
  }
}

bool pair_in_class(const BipartiteBox& pair, PairClass c) {
  if (c == PairClass::Unconstrained) return pair.normalized();
  if (!pair.normalized() || !pair.nonsignaling()) return false;
  if (c == PairClass::NS) return true;
  for (const Scalar& v : chsh_values(pair))
    if (v > Scalar(2)) return false;
  return true;
}

bool verify_decomposition(const SublocalDecomposition& dec,
                          const TripartiteBox& box) {
  if (dec.terms.empty()) return false;
  Scalar total(0);
  TripartiteBox sum;
  for (const auto& term : dec.terms) {
    if (term.weight.sign() <= 0) return false;
    if (!term.single.normalized()) return false;
    if (!pair_in_class(term.pair, dec.pair_class)) return false;
    total += term.weight;
    TripartiteBox prod = product_box(term.single, term.pair, dec.cut);
    for (int e = 0; e < 64; ++e) sum.p[e] += term.weight * prod.p[e];
  }
  return total == Scalar(1) && sum == box;
}

int rank_lower_bound(const TripartiteBox& box, Cut cut) {
  Matrix flat = flatten_cut(box, cut);
  int r1 = rank(flat, EliminationOrder::Forward);
  int r2 = rank(flat, EliminationOrder::Reverse);
  if (r1 != r2)
    throw std::logic_error("rank mismatch between elimination orders");
  return r1;
}

int rank_lower_bound(const BipartiteBox& box) {
  Matrix flat = flatten_bipartite(box);
  int r1 = rank(flat, EliminationOrder::Forward);
  int r2 = rank(flat, EliminationOrder::Reverse);
  if (r1 != r2)
    throw std::logic_error("rank mismatch between elimination orders");
  return r1;
}

std::optional<SublocalDecomposition> search_decomposition(
    const TripartiteBox& box, Cut cut, int d, PairClass pair_class) {
  if (d < 1) return std::nullopt;

  // d_λ = 1: product of the cut marginals.
  {
    SingleBox single = marginal_single(box, lone_party(cut));
    BipartiteBox pair = marginal_pair(box, cut);
    if (product_box(single, pair, cut) == box &&
        pair_in_class(pair, pair_class)) {
      SublocalDecomposition dec{cut, pair_class,
                                {{Scalar(1), single, pair}}};
      if (!verify_decomposition(dec, box))
        throw std::logic_error("product witness failed verification");
      return dec;
    }
    if (d == 1) return std::nullopt;
  }

  Matrix flat = flatten_cut(box, cut);
  SingleBox lone_marg = marginal_single(box, lone_party(cut));
  const int dd = std::min(d, 4);  // >4 deterministic strategies always repeat

  for (const auto& strats : multisets(4, dd)) {
    if (!marginal_expressible(lone_marg, strats)) continue;
    std::vector<Scalar> masses;
    auto tables = assignment_lp(flat, strats, pair_class, &masses);
    if (!tables) continue;
    SublocalDecomposition dec;
    dec.cut = cut;
    dec.pair_class = pair_class;
    for (size_t l = 0; l < strats.size(); ++l) {
      if (masses[l].is_zero()) continue;
      BipartiteBox pair;
      for (int cell = 0; cell < 16; ++cell)
        pair.p[cell] = (*tables)[l].p[cell] / masses[l];
      dec.terms.push_back({masses[l], strategy(strats[l]), pair});
    }
    if (verify_decomposition(dec, box)) return dec;
    throw std::logic_error("assignment witness failed verification");
  }

  if (d >= 4) return std::nullopt;

  // Merge analysis: group a feasible 4-term witness with distinct
  // deterministic strategies into ≤ d non-deterministic terms. The grouped
  // factor LPs stay linear because the weights are fixed by the witness.
  const std::vector<int> full{0, 1, 2, 3};
  if (!marginal_expressible(lone_marg, full)) return std::nullopt;
  std::vector<Scalar> weights;
  auto base = assignment_lp(flat, full, pair_class, &weights);
  if (!base) return std::nullopt;

  std::vector<std::vector<std::vector<int>>> patterns = partitions_two();
  if (d >= 3)
    for (const auto& p : partitions_three()) patterns.push_back(p);

  for (const auto& groups : patterns) {
    auto tables = grouped_lp(flat, groups, weights, pair_class);
    if (!tables) continue;
    SublocalDecomposition dec;
    dec.cut = cut;
    dec.pair_class = pair_class;
    for (size_t g = 0; g < groups.size(); ++g) {
      Scalar q(0);
      SingleBox single;
      for (int i : groups[g]) {
        q += weights[i];
        for (int x = 0; x < 2; ++x)
          single.at(strategy_output(i, x), x) += weights[i];
      }
      if (q.is_zero()) continue;
      for (auto& v : single.p) v = v / q;
      dec.terms.push_back({q, single, (*tables)[g]});
    }
    if (verify_decomposition(dec, box)) return dec;
    throw std::logic_error("merged witness failed verification");
  }
  return std::nullopt;
}

Verdict superlocality_verdict(const TripartiteBox& box, Cut cut, int d) {
  int r = rank_lower_bound(box, cut);
  auto witness = search_decomposition(box, cut, d, PairClass::NS);
  if (witness && witness->dimension() <= d && r > d)
    throw std::logic_error(
        "soundness breach: verified witness coexists with rank certificate");
  Verdict v;
  if (witness && witness->dimension() <= d) {
    v.status = VerdictStatus::Sublocal;
    v.witness = std::move(witness);
  } else if (r > d) {
    v.status = VerdictStatus::Superlocal;
    v.certificate = RankCertificate{r, d};
  } else {
    v.status = VerdictStatus::Unknown;
  }
  return v;
}

GenuineReport genuine_report(const TripartiteBox& box, int d) {
  GenuineReport rep;
  for (size_t i = 0; i < kAllCuts.size(); ++i)
    rep.per_cut[i] = superlocality_verdict(box, kAllCuts[i], d);
  rep.genuine = true;
  rep.absolute = false;
  for (const auto& v : rep.per_cut) {
    if (v.status != VerdictStatus::Superlocal) rep.genuine = false;
    if (v.status == VerdictStatus::Superlocal) rep.absolute = true;
  }
  return rep;
}

bool verify_decomposition(const BipartiteDecomposition& dec,
                          const BipartiteBox& box) {
  if (dec.terms.empty()) return false;
  Scalar total(0);
  BipartiteBox sum;
  for (const auto& term : dec.terms) {
    if (term.weight.sign() <= 0) return false;
    if (!term.left.normalized() || !term.right.normalized()) return false;
    total += term.weight;
    BipartiteBox prod = product_box(term.left, term.right);
    for (int e = 0; e < 16; ++e) sum.p[e] += term.weight * prod.p[e];
  }
  return total == Scalar(1) && sum == box;
}

namespace {

BipartiteBox transpose_box(const BipartiteBox& box) {
  BipartiteBox out;
  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z) out.at(c, b, z, y) = box.at(b, c, y, z);
  return out;
}

// Search with deterministic strategies on the left party.
std::optional<BipartiteDecomposition> bipartite_search_left(
    const BipartiteBox& box, int d) {
  SingleBox marg = marginal_single(box, 0);
  const int dd = std::min(d, 4);
  auto lp = [&](const std::vector<int>& strats,
                const std::vector<std::vector<int>>* groups,
                const std::vector<Scalar>* fixed_weights)
      -> std::optional<BipartiteDecomposition> {
    const int k = groups ? static_cast<int>(groups->size())
                         : static_cast<int>(strats.size());
    const int nv = 4 * k;
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    auto new_row = [&]() -> std::vector<Scalar>& {
      rows.emplace_back(nv, Scalar(0));
      rhs.emplace_back(0);
      return rows.back();
    };
    for (int y = 0; y < 2; ++y)
      for (int b = 0; b < 2; ++b)
        for (int z = 0; z < 2; ++z)
          for (int c = 0; c < 2; ++c) {
            auto& row = new_row();
            for (int t = 0; t < k; ++t) {
              Scalar v(0);
              if (groups) {
                for (int i : (*groups)[t])
                  if (strategy_output(i, y) == b) v += (*fixed_weights)[i];
              } else if (strategy_output(strats[t], y) == b) {
                v = Scalar(1);
              }
              row[4 * t + 2 * z + c] = v;
            }
            rhs.back() = box.at(b, c, y, z);
          }
    for (int t = 0; t < k; ++t) {
      if (groups) {  // normalized right factors
        for (int z = 0; z < 2; ++z) {
          auto& row = new_row();
          row[4 * t + 2 * z + 0] = Scalar(1);
          row[4 * t + 2 * z + 1] = Scalar(1);
          rhs.back() = Scalar(1);
        }
      } else {  // equal subnormalized mass across inputs
        auto& row = new_row();
        row[4 * t + 0] = row[4 * t + 1] = Scalar(1);
        row[4 * t + 2] = row[4 * t + 3] = Scalar(-1);
      }
    }
    Matrix a(static_cast<int>(rows.size()), nv);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < nv; ++j) a.at(static_cast<int>(i), j) = rows[i][j];
    FeasibilityResult r = solve_feasibility(a, rhs);
    if (!r.feasible) return std::nullopt;

    BipartiteDecomposition dec;
    for (int t = 0; t < k; ++t) {
      Scalar w(0);
      SingleBox left;
      if (groups) {
        for (int i : (*groups)[t]) {
          w += (*fixed_weights)[i];
          for (int y = 0; y < 2; ++y)
            left.at(strategy_output(i, y), y) += (*fixed_weights)[i];
        }
        if (w.is_zero()) continue;
        for (auto& v : left.p) v = v / w;
      } else {
        w = r.solution[4 * t + 0] + r.solution[4 * t + 1];
        if (w.is_zero()) continue;
        left = strategy(strats[t]);
      }
      SingleBox right;
      for (int z = 0; z < 2; ++z)
        for (int c = 0; c < 2; ++c) {
          Scalar v = r.solution[4 * t + 2 * z + c];
          right.at(c, z) = groups ? v : v / w;
        }
      dec.terms.push_back({w, left, right});
    }
    return dec;
  };

  for (const auto& strats : multisets(4, dd)) {
    if (!marginal_expressible(marg, strats)) continue;
    auto dec = lp(strats, nullptr, nullptr);
    if (!dec) continue;
    if (!verify_decomposition(*dec, box))
      throw std::logic_error("bipartite witness failed verification");
    return dec;
  }

  if (d >= 4) return std::nullopt;
  const std::vector<int> full{0, 1, 2, 3};
  if (!marginal_expressible(marg, full)) return std::nullopt;
  // Recover a 4-term witness and its weights, then try groupings.
  auto base = lp(full, nullptr, nullptr);
  if (!base) return std::nullopt;
  std::vector<Scalar> weights(4, Scalar(0));
  for (size_t t = 0; t < base->terms.size(); ++t) {
    // identify each term's strategy index by its deterministic outputs
    const SingleBox& s = base->terms[t].left;
    for (int i = 0; i < 4; ++i)
      if (strategy(i) == s) weights[i] = base->terms[t].weight;
  }
  std::vector<std::vector<std::vector<int>>> patterns = partitions_two();
  if (d >= 3)
    for (const auto& p : partitions_three()) patterns.push_back(p);
  for (const auto& groups : patterns) {
    auto dec = lp(full, &groups, &weights);
    if (!dec) continue;
    if (!verify_decomposition(*dec, box))
      throw std::logic_error("bipartite merged witness failed verification");
    return dec;
  }
  return std::nullopt;
}

}  // namespace

std::optional<BipartiteDecomposition> search_bipartite_decomposition(
    const BipartiteBox& box, int d) {
  if (d < 1) return std::nullopt;
  {
    SingleBox left = marginal_single(box, 0);
    SingleBox right = marginal_single(box, 1);
    if (product_box(left, right) == box) {
      BipartiteDecomposition dec{{{Scalar(1), left, right}}};
      return dec;
    }
    if (d == 1) return std::nullopt;
  }
  if (auto dec = bipartite_search_left(box, d)) return dec;
  // Symmetric role: deterministic strategies on the right party.
  if (auto dec = bipartite_search_left(transpose_box(box), d)) {
    BipartiteDecomposition out;
    for (auto& t : dec->terms) out.terms.push_back({t.weight, t.right, t.left});
    if (!verify_decomposition(out, box))
      throw std::logic_error("transposed bipartite witness failed");
    return out;
  }
  return std::nullopt;
}

BipartiteVerdict bipartite_verdict(const BipartiteBox& box, int d) {
  int r = rank_lower_bound(box);
  auto witness = search_bipartite_decomposition(box, d);
  if (witness && witness->dimension() <= d && r > d)
    throw std::logic_error(
        "soundness breach: verified witness coexists with rank certificate");
  BipartiteVerdict v;
  if (witness && witness->dimension() <= d) {
    v.status = VerdictStatus::Sublocal;
    v.witness = std::move(witness);
  } else if (r > d) {
    v.status = VerdictStatus::Superlocal;
    v.certificate = RankCertificate{r, d};
  } else {
    v.status = VerdictStatus::Unknown;
  }
  return v;
}

namespace {

BipartiteBox table_from_signs(const Scalar& plus, const Scalar& minus,
                              const std::array<std::array<int, 4>, 4>& sign) {
  // sign[row yz][col bc]: +1 → plus, −1 → minus, 0 → 1/4.
  BipartiteBox out;
  Scalar quarter = Scalar::frac(1, 4);
  for (int in = 0; in < 4; ++in)
    for (int o = 0; o < 4; ++o)
      out.p[4 * in + o] =
          sign[in][o] > 0 ? plus : (sign[in][o] < 0 ? minus : quarter);
  return out;
}

}  // namespace

SublocalDecomposition appendix_decomposition(AppendixKind kind,
                                             const Scalar& param) {
  SublocalDecomposition dec;
  dec.cut = Cut::A_BC;
  Scalar quarter = Scalar::frac(1, 4);
  TripartiteBox target;

  if (kind == AppendixKind::SvF_A) {
    if (param.sign() <= 0 || Scalar::sqrt2() * param > Scalar(1))
      throw ParamRangeError("appendix SvF_A: μ must be in (0, 1/√2]");
    dec.pair_class = PairClass::Local;
    target = svetlichny_family(param);
    Scalar s = Scalar::sqrt2() * param;
    Scalar plus = (Scalar(1) + s) / Scalar(4);
    Scalar minus = (Scalar(1) - s) / Scalar(4);
    const std::array<std::array<std::array<int, 4>, 4>, 4> signs = {{
        {{{1, -1, -1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 1, 1, -1}}},
        {{{-1, 1, 1, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, -1, -1, 1}}},
        {{{0, 0, 0, 0}, {1, -1, -1, 1}, {1, -1, -1, 1}, {0, 0, 0, 0}}},
        {{{0, 0, 0, 0}, {-1, 1, 1, -1}, {-1, 1, 1, -1}, {0, 0, 0, 0}}},
    }};
    for (int l = 0; l < 4; ++l)
      dec.terms.push_back(
          {quarter, strategy(l), table_from_signs(plus, minus, signs[l])});
  } else if (kind == AppendixKind::MF_C) {
    if (param.sign() <= 0 || param > Scalar::frac(1, 2))
      throw ParamRangeError("appendix MF_C: ν must be in (0, 1/2]");
    dec.pair_class = PairClass::Local;
    target = mermin_family(param);
    Scalar plus = (Scalar(1) + param) / Scalar(4);
    Scalar minus = (Scalar(1) - param) / Scalar(4);
    const int P = 1, M = -1;
    const std::array<std::array<std::array<int, 4>, 4>, 4> signs = {{
        {{{P, M, M, P}, {M, P, P, M}, {M, P, P, M}, {M, P, P, M}}},
        {{{M, P, P, M}, {P, M, M, P}, {P, M, M, P}, {P, M, M, P}}},
        {{{P, M, M, P}, {P, M, M, P}, {P, M, M, P}, {M, P, P, M}}},
        {{{M, P, P, M}, {M, P, P, M}, {M, P, P, M}, {P, M, M, P}}},
    }};
    for (int l = 0; l < 4; ++l)
      dec.terms.push_back(
          {quarter, strategy(l), table_from_signs(plus, minus, signs[l])});
  } else {
    if (param.sign() <= 0 || param > Scalar(1))
      throw ParamRangeError("appendix MF_D: ν must be in (0, 1]");
    dec.pair_class = PairClass::NS;
    target = mermin_family(param);
    const int pr_labels[4][3] = {{1, 1, 0}, {1, 1, 1}, {0, 0, 0}, {0, 0, 1}};
    for (int l = 0; l < 4; ++l) {
      BipartiteBox pair =
          mix({pr_box(pr_labels[l][0], pr_labels[l][1], pr_labels[l][2]),
               white_noise_pair()},
              {param, Scalar(1) - param});
      dec.terms.push_back({quarter, strategy(l), pair});
    }
  }

  if (!verify_decomposition(dec, target))
    throw std::logic_error("appendix decomposition failed to reconstruct");
  return dec;
}

std::optional<std::vector<FullProductTerm>> search_full_sublocal(
    const TripartiteBox& box, int d) {
  if (d < 1 || d > 2) return std::nullopt;
  // d = 1: product of the three single-party marginals.
  {
    SingleBox a = marginal_single(box, Party::A);
    SingleBox b = marginal_single(box, Party::B);
    SingleBox c = marginal_single(box, Party::C);
    TripartiteBox prod = product_box(a, product_box(b, c), Cut::A_BC);
    if (prod == box) return std::vector<FullProductTerm>{{Scalar(1), a, b, c}};
    if (d == 1) return std::nullopt;
  }
  // d = 2 with deterministic strategy triples: box = w·D_i + (1−w)·D_j.
  const auto& dets = vertices_L();
  std::vector<TripartiteBox> det_boxes;
  det_boxes.reserve(64);
  for (const auto& l : dets) det_boxes.push_back(make_vertex(l));
  for (int i = 0; i < 64; ++i)
    for (int j = i + 1; j < 64; ++j) {
      std::optional<Scalar> w;
      bool ok = true;
      for (int e = 0; e < 64 && ok; ++e) {
        const Scalar &di = det_boxes[i].p[e], &dj = det_boxes[j].p[e];
        if (di == dj) {
          if (box.p[e] != di) ok = false;
          continue;
        }
        // box = w·di + (1−w)·dj  ⇒  w = (box − dj)/(di − dj)
        Scalar cand = (box.p[e] - dj) / (di - dj);
        if (!w)
          w = cand;
        else if (*w != cand)
          ok = false;
      }
      if (!ok || !w || w->sign() <= 0 || *w >= Scalar(1)) continue;
      const auto& li = dets[i].bits;
      const auto& lj = dets[j].bits;
      return std::vector<FullProductTerm>{
          {*w, deterministic_single(li[0], li[1]),
           deterministic_single(li[2], li[3]),
           deterministic_single(li[4], li[5])},
          {Scalar(1) - *w, deterministic_single(lj[0], lj[1]),
           deterministic_single(lj[2], lj[3]),
           deterministic_single(lj[4], lj[5])}};
    }
  return std::nullopt;
}

}  // namespace tribox
