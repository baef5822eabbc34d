#include "tribox/simplex.hpp"

#include <stdexcept>

namespace tribox {

namespace {

// Map a dual over the (sign-adjusted) pruned rows back to the original rows.
std::vector<Scalar> map_dual(const std::vector<Scalar>& y_hat,
                             const std::vector<int>& sign,
                             const std::vector<std::vector<Scalar>>& combos,
                             int original_rows) {
  std::vector<Scalar> y(original_rows, Scalar(0));
  for (size_t i = 0; i < y_hat.size(); ++i) {
    Scalar f = (sign[i] < 0 ? -y_hat[i] : y_hat[i]);
    if (f.is_zero()) continue;
    for (int k = 0; k < original_rows; ++k) y[k] += f * combos[i][k];
  }
  return y;
}

}  // namespace

FeasibilityResult solve_feasibility(const Matrix& a,
                                    const std::vector<Scalar>& b) {
  const int m0 = a.rows(), n = a.cols();
  if (static_cast<int>(b.size()) != m0)
    throw std::invalid_argument("solve_feasibility: size mismatch");

  ReducedSystem red = reduce_equalities(a, b);
  FeasibilityResult out;
  if (red.inconsistency) {
    out.feasible = false;
    out.farkas = *red.inconsistency;  // yᵀA = 0, yᵀb = 1
    return out;
  }

  const int m = red.a.rows();
  std::vector<int> row_sign(m, 1);
  // Tableau: columns [0,n) structural, [n,n+m) artificial, column n+m = rhs.
  // Row m holds reduced costs (phase-1 objective: minimise Σ artificials).
  const int width = n + m + 1;
  std::vector<std::vector<Scalar>> t(m + 1, std::vector<Scalar>(width));
  for (int i = 0; i < m; ++i) {
    bool neg = red.b[i].sign() < 0;
    row_sign[i] = neg ? -1 : 1;
    for (int j = 0; j < n; ++j)
      t[i][j] = neg ? -red.a.at(i, j) : red.a.at(i, j);
    t[i][n + i] = Scalar(1);
    t[i][n + m] = neg ? -red.b[i] : red.b[i];
  }
  for (int j = 0; j < width; ++j) {
    Scalar s(0);
    for (int i = 0; i < m; ++i) s += t[i][j];
    t[m][j] = -s;  // reduced cost c_j − Σ rows (c = 0 structural, 1 artificial)
  }
  for (int i = 0; i < m; ++i) t[m][n + i] = Scalar(0);

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  for (;;) {
    // Bland: entering column = smallest index with negative reduced cost.
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (t[m][j].sign() < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;

    int leave = -1;
    Scalar best_ratio(0);
    for (int i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Scalar ratio = t[i][n + m] / t[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0)
      throw std::logic_error("phase-1 unbounded: objective bounded below by 0");

    Scalar inv = Scalar(1) / t[leave][enter];
    for (int j = 0; j < width; ++j) t[leave][j] *= inv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      Scalar f = t[i][enter];
      for (int j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Scalar objective = -t[m][n + m];
  if (objective.sign() > 0) {
    // Dual from the artificial columns: reduced cost there is 1 − ŷ_i.
    std::vector<Scalar> y_hat(m);
    for (int i = 0; i < m; ++i) y_hat[i] = Scalar(1) - t[m][n + i];
    out.feasible = false;
    out.farkas = map_dual(y_hat, row_sign, red.row_combo, m0);
    // Exactness check: yᵀA_j ≤ 0 for all j and yᵀb > 0.
    for (int j = 0; j < n; ++j) {
      Scalar dot(0);
      for (int k = 0; k < m0; ++k) dot += out.farkas[k] * a.at(k, j);
      if (dot.sign() > 0)
        throw std::logic_error("invalid Farkas certificate (column)");
    }
    Scalar dotb(0);
    for (int k = 0; k < m0; ++k) dotb += out.farkas[k] * b[k];
    if (dotb.sign() <= 0)
      throw std::logic_error("invalid Farkas certificate (rhs)");
    return out;
  }

  out.feasible = true;
  out.solution.assign(n, Scalar(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) out.solution[basis[i]] = t[i][n + m];
  // Exactness check: A·x = b.
  for (int k = 0; k < m0; ++k) {
    Scalar dot(0);
    for (int j = 0; j < n; ++j)
      if (!out.solution[j].is_zero()) dot += out.solution[j] * a.at(k, j);
    if (dot != b[k]) throw std::logic_error("invalid basic solution");
  }
  return out;
}

}  // namespace tribox
