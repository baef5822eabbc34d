#pragma once

#include <optional>
#include <vector>

#include "tribox/scalar.hpp"

namespace tribox {

/// Dense matrix over Q(√2). Row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return d_[r * cols_ + c]; }
  const Scalar& at(int r, int c) const { return d_[r * cols_ + c]; }

  friend bool operator==(const Matrix& l, const Matrix& r) {
    return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.d_ == r.d_;
  }

 private:
  int rows_, cols_;
  std::vector<Scalar> d_;
};

enum class EliminationOrder { Forward, Reverse };

/// Exact rank by Gaussian elimination. Forward scans columns left to right
/// picking the first nonzero pivot; Reverse scans right to left picking the
/// last — an independent elimination path for certificate recomputation.
int rank(Matrix m, EliminationOrder order = EliminationOrder::Forward);

/// Result of reducing the equality system A·x = b to independent rows.
struct ReducedSystem {
  Matrix a;                         // r independent rows
  std::vector<Scalar> b;            // matching right-hand sides
  std::vector<std::vector<Scalar>> row_combo;  // row i of `a` = combo·original
  // Set when elimination exposes 0 = nonzero: y with yᵀA = 0, yᵀb = 1.
  std::optional<std::vector<Scalar>> inconsistency;
};

ReducedSystem reduce_equalities(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace tribox
