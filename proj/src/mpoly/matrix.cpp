#include "gonal/mpoly/matrix.hpp"

#include <sstream>

namespace gonal {

PolyMatrix::PolyMatrix(RingPtr r, int rows, int cols)
    : r_(std::move(r)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, MPoly(r_)) {}

PolyMatrix PolyMatrix::from_rows(const RingPtr& r, const std::vector<std::vector<MPoly>>& rows) {
  const int nr = static_cast<int>(rows.size());
  const int nc = nr ? static_cast<int>(rows[0].size()) : 0;
  PolyMatrix m(r, nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc) throw Error("ragged matrix rows");
    for (int j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<MPoly> PolyMatrix::row(int i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_, a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_};
}

std::vector<MPoly> PolyMatrix::col(int j) const {
  std::vector<MPoly> c;
  for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
  PolyMatrix r(r_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      MPoly s(r_);
      for (int l = 0; l < cols_; ++l) {
        if (at(i, l).is_zero() || o.at(l, j).is_zero()) continue;
        s += at(i, l) * o.at(l, j);
      }
      r.at(i, j) = std::move(s);
    }
  }
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(r_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix r(r_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  }
  return r;
}

PolyMatrix PolyMatrix::drop_col(int j) const {
  std::vector<int> rows, cols;
  for (int i = 0; i < rows_; ++i) rows.push_back(i);
  for (int c = 0; c < cols_; ++c) {
    if (c != j) cols.push_back(c);
  }
  return submatrix(rows, cols);
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : a_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::is_linear() const {
  for (const auto& e : a_) {
    for (const auto& t : e.terms()) {
      if (t.m.deg != 1) return false;
    }
  }
  return true;
}

PolyMatrix PolyMatrix::in_ring(const RingPtr& target) const {
  PolyMatrix r(target, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].in_ring(target);
  return r;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",\n [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

MPoly det_cofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return MPoly::from_int(m.ring(), 1);
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  MPoly d(m.ring());
  std::vector<int> rows;
  for (int i = 1; i < n; ++i) rows.push_back(i);
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    std::vector<int> cols;
    for (int c = 0; c < n; ++c) {
      if (c != j) cols.push_back(c);
    }
    MPoly t = m.at(0, j) * det_cofactor(m.submatrix(rows, cols));
    d = (j % 2 == 0) ? d + t : d - t;
  }
  return d;
}

MPoly det_bareiss(const PolyMatrix& m0) {
  if (m0.rows() != m0.cols()) throw Error("determinant of non-square matrix");
  const int n = m0.rows();
  if (n == 0) return MPoly::from_int(m0.ring(), 1);
  PolyMatrix m = m0;
  bool negate = false;
  MPoly prev = MPoly::from_int(m.ring(), 1);
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!m.at(i, k).is_zero()) {
          p = i;
          break;
        }
      }
      if (p < 0) return MPoly(m.ring());
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MPoly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = divide_exact(num, prev);
      }
    }
    prev = m.at(k, k);
  }
  MPoly d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

MPoly det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  return m.rows() >= 4 ? det_bareiss(m) : det_cofactor(m);
}

PolyMatrix sylvester_matrix(const MPoly& f, const MPoly& g, int var) {
  const int m = f.degree_in(var), n = g.degree_in(var);
  if (f.is_zero() || g.is_zero()) throw Error("resultant of zero polynomial");
  if (m == 0 && n == 0) throw Error("resultant: both polynomials are constant in " + f.ring()->var(var));
  PolyMatrix s(f.ring(), m + n, m + n);
  for (int i = 0; i < n; ++i) {
    for (int d = 0; d <= m; ++d) s.at(i, i + m - d) = f.coeff_of(var, d);
  }
  for (int i = 0; i < m; ++i) {
    for (int d = 0; d <= n; ++d) s.at(n + i, i + n - d) = g.coeff_of(var, d);
  }
  return s;
}

MPoly resultant(const MPoly& f, const MPoly& g, int var) { return det(sylvester_matrix(f, g, var)); }

PolyMatrix jacobian(const std::vector<MPoly>& gens) {
  if (gens.empty()) throw Error("jacobian of empty list");
  const RingPtr& r = gens[0].ring();
  PolyMatrix j(r, static_cast<int>(gens.size()), r->nvars());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int v = 0; v < r->nvars(); ++v) j.at(static_cast<int>(i), v) = gens[i].derivative(v);
  }
  return j;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::vector<MPoly> minors(const PolyMatrix& m, int k) {
  if (k > std::min(m.rows(), m.cols())) throw Error("minor size exceeds matrix shape");
  std::vector<MPoly> out;
  auto cs = subsets(m.cols(), k);
  for (const auto& rs : subsets(m.rows(), k)) {
    for (const auto& c : cs) out.push_back(det(m.submatrix(rs, c)));
  }
  return out;
}

}  // namespace gonal
