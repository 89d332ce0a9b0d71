#pragma once

#include "gonal/mpoly/mpoly.hpp"

#include <vector>

namespace gonal {

/// Rectangular matrix of polynomials over one ring, row-major.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr r, int rows, int cols);
  static PolyMatrix from_rows(const RingPtr& r, const std::vector<std::vector<MPoly>>& rows);

  const RingPtr& ring() const { return r_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  MPoly& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const MPoly& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::vector<MPoly> row(int i) const;
  std::vector<MPoly> col(int j) const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix drop_col(int j) const;
  bool is_zero() const;
  /// Every entry has total degree at most 1 and no constant term.
  bool is_linear() const;
  /// Each entry mapped into another ring (same variable names).
  PolyMatrix in_ring(const RingPtr& target) const;
  std::string to_string() const;

 private:
  RingPtr r_;
  int rows_, cols_;
  std::vector<MPoly> a_;
};

/// Fraction-free Bareiss elimination for size >= 4, cofactor expansion below.
MPoly det(const PolyMatrix& m);
/// Plain Laplace expansion along the first row.
MPoly det_cofactor(const PolyMatrix& m);
MPoly det_bareiss(const PolyMatrix& m);

/// Sylvester resultant in variable var, f's rows first.
MPoly resultant(const MPoly& f, const MPoly& g, int var);
PolyMatrix sylvester_matrix(const MPoly& f, const MPoly& g, int var);

/// Rows = generators, columns = ring variables.
PolyMatrix jacobian(const std::vector<MPoly>& gens);

/// All k x k minors: row subsets in lexicographic order, and for each,
/// column subsets in lexicographic order.
std::vector<MPoly> minors(const PolyMatrix& m, int k);

/// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace gonal
