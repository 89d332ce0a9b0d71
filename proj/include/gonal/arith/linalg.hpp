#pragma once

#include "gonal/arith/field.hpp"

#include <optional>
#include <vector>

namespace gonal {

/// Dense matrix over a Field, row-major.
class Mat {
 public:
  Mat(FieldPtr k, int rows, int cols);
  static Mat identity(const FieldPtr& k, int n);

  const FieldPtr& field() const { return k_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::vector<Scalar> row(int i) const;
  void append_row(const std::vector<Scalar>& r);

  Mat operator*(const Mat& o) const;
  Mat transpose() const;
  bool is_zero() const;

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref();
  int rank() const;
  /// Basis of {x : A x = 0}, one vector per row of the result.
  Mat kernel() const;
  /// Basis of {y : y A = 0}.
  Mat left_kernel() const { return transpose().kernel(); }
  Scalar det() const;
  Mat inverse() const;
  /// Some solution of A x = b, if any.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
  /// Characteristic polynomial coefficients det(xI - A), low to high.
  std::vector<Scalar> charpoly() const;

 private:
  FieldPtr k_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

}  // namespace gonal
