#include "tribox/linalg.hpp"

namespace tribox {

int rank(Matrix m, EliminationOrder order) {
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int step = 0; step < cols && r < rows; ++step) {
    int c = order == EliminationOrder::Forward ? step : cols - 1 - step;
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        if (order == EliminationOrder::Forward) break;  // Reverse keeps last
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    Scalar inv = Scalar(1) / m.at(r, c);
    for (int i = r + 1; i < rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c) * inv;
      for (int j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

ReducedSystem reduce_equalities(const Matrix& a, const std::vector<Scalar>& b) {
  const int m = a.rows(), n = a.cols();
  Matrix w = a;
  std::vector<Scalar> rhs = b;
  // combo[i] tracks row i of the working system as a combination of the
  // original rows, so duals over the reduced system map back exactly.
  std::vector<std::vector<Scalar>> combo(m, std::vector<Scalar>(m));
  for (int i = 0; i < m; ++i) combo[i][i] = Scalar(1);

  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int pivot = -1;
    for (int i = r; i < m; ++i)
      if (!w.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < n; ++j) std::swap(w.at(r, j), w.at(pivot, j));
      std::swap(rhs[r], rhs[pivot]);
      std::swap(combo[r], combo[pivot]);
    }
    Scalar inv = Scalar(1) / w.at(r, c);
    for (int i = r + 1; i < m; ++i) {
      if (w.at(i, c).is_zero()) continue;
      Scalar f = w.at(i, c) * inv;
      for (int j = 0; j < n; ++j) w.at(i, j) -= f * w.at(r, j);
      rhs[i] -= f * rhs[r];
      for (int k = 0; k < m; ++k) combo[i][k] -= f * combo[r][k];
    }
    ++r;
  }

  ReducedSystem out;
  // Rows past r are identically zero in A; a nonzero rhs there certifies
  // inconsistency, and its combo row is the Farkas vector (scaled to yᵀb=1).
  for (int i = r; i < m; ++i) {
    if (!rhs[i].is_zero()) {
      Scalar inv = Scalar(1) / rhs[i];
      std::vector<Scalar> y(m);
      for (int k = 0; k < m; ++k) y[k] = combo[i][k] * inv;
      out.inconsistency = std::move(y);
      return out;
    }
  }
  out.a = Matrix(r, n);
  out.b.resize(r);
  out.row_combo.resize(r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n; ++j) out.a.at(i, j) = w.at(i, j);
    out.b[i] = rhs[i];
    out.row_combo[i] = combo[i];
  }
  return out;
}

}  // namespace tribox
