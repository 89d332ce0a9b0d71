#include "gonal/arith/linalg.hpp"

namespace gonal {

Mat::Mat(FieldPtr k, int rows, int cols)
    : k_(std::move(k)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, k_->zero()) {}

Mat Mat::identity(const FieldPtr& k, int n) {
  Mat m(k, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = k->one();
  return m;
}

std::vector<Scalar> Mat::row(int i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_, a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_};
}

void Mat::append_row(const std::vector<Scalar>& r) {
  if (static_cast<int>(r.size()) != cols_) throw Error("row length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
  Mat r(k_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int l = 0; l < cols_; ++l) {
      const Scalar& x = at(i, l);
      if (k_->is_zero(x)) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (k_->is_zero(o.at(l, j))) continue;
        k_->add_to(r.at(i, j), k_->mul(x, o.at(l, j)));
      }
    }
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(k_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : a_) {
    if (!k_->is_zero(x)) return false;
  }
  return true;
}

std::vector<int> Mat::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i) {
      if (!k_->is_zero(at(i, c))) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    }
    Scalar inv = k_->inv(at(r, c));
    for (int j = c; j < cols_; ++j) at(r, j) = k_->mul(at(r, j), inv);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || k_->is_zero(at(i, c))) continue;
      Scalar f = at(i, c);
      for (int j = c; j < cols_; ++j) {
        if (k_->is_zero(at(r, j))) continue;
        at(i, j) = k_->sub(at(i, j), k_->mul(f, at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int Mat::rank() const {
  Mat m = *this;
  return static_cast<int>(m.rref().size());
}

Mat Mat::kernel() const {
  Mat m = *this;
  std::vector<int> piv = m.rref();
  std::vector<bool> is_piv(cols_, false);
  for (int c : piv) is_piv[c] = true;
  Mat out(k_, 0, cols_);
  for (int f = 0; f < cols_; ++f) {
    if (is_piv[f]) continue;
    std::vector<Scalar> v(cols_, k_->zero());
    v[f] = k_->one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = k_->neg(m.at(static_cast<int>(r), f));
    out.append_row(v);
  }
  return out;
}

Scalar Mat::det() const {
  if (rows_ != cols_) throw Error("determinant of non-square matrix");
  Mat m = *this;
  Scalar d = k_->one();
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int i = c; i < rows_; ++i) {
      if (!k_->is_zero(m.at(i, c))) {
        p = i;
        break;
      }
    }
    if (p < 0) return k_->zero();
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = k_->neg(d);
    }
    d = k_->mul(d, m.at(c, c));
    Scalar inv = k_->inv(m.at(c, c));
    for (int i = c + 1; i < rows_; ++i) {
      if (k_->is_zero(m.at(i, c))) continue;
      Scalar f = k_->mul(m.at(i, c), inv);
      for (int j = c; j < cols_; ++j) m.at(i, j) = k_->sub(m.at(i, j), k_->mul(f, m.at(c, j)));
    }
  }
  return d;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) throw Error("inverse of non-square matrix");
  const int n = rows_;
  Mat aug(k_, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = k_->one();
  }
  std::vector<int> piv = aug.rref();
  if (static_cast<int>(piv.size()) < n || piv[n - 1] >= n) throw Error("matrix is singular");
  Mat r(k_, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  }
  return r;
}

std::optional<std::vector<Scalar>> Mat::solve(const std::vector<Scalar>& b) const {
  Mat aug(k_, rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> piv = aug.rref();
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  std::vector<Scalar> x(cols_, k_->zero());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<int>(r), cols_);
  return x;
}

std::vector<Scalar> Mat::charpoly() const {
  if (rows_ != cols_) throw Error("characteristic polynomial of non-square matrix");
  const int n = rows_;
  // Reduce to upper Hessenberg form by similarity, then use the
  // standard recurrence on leading principal submatrices.
  Mat h = *this;
  for (int m = 1; m + 1 < n; ++m) {
    int p = -1;
    for (int i = m; i < n; ++i) {
      if (!k_->is_zero(h.at(i, m - 1))) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != m) {
      for (int j = 0; j < n; ++j) std::swap(h.at(p, j), h.at(m, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, p), h.at(i, m));
    }
    Scalar inv = k_->inv(h.at(m, m - 1));
    for (int i = m + 1; i < n; ++i) {
      if (k_->is_zero(h.at(i, m - 1))) continue;
      Scalar u = k_->mul(h.at(i, m - 1), inv);
      for (int j = 0; j < n; ++j) h.at(i, j) = k_->sub(h.at(i, j), k_->mul(u, h.at(m, j)));
      for (int j = 0; j < n; ++j) h.at(j, m) = k_->add(h.at(j, m), k_->mul(u, h.at(j, i)));
    }
  }
  auto pmul_x_minus = [&](const std::vector<Scalar>& p, const Scalar& c) {
    std::vector<Scalar> r(p.size() + 1, k_->zero());
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i + 1] = k_->add(r[i + 1], p[i]);
      r[i] = k_->sub(r[i], k_->mul(c, p[i]));
    }
    return r;
  };
  std::vector<std::vector<Scalar>> P(n + 1);
  P[0] = {k_->one()};
  for (int m = 1; m <= n; ++m) {
    P[m] = pmul_x_minus(P[m - 1], h.at(m - 1, m - 1));
    Scalar t = k_->one();
    for (int i = 1; i < m; ++i) {
      t = k_->mul(t, h.at(m - i, m - i - 1));
      Scalar c = k_->mul(t, h.at(m - i - 1, m - 1));
      for (std::size_t j = 0; j < P[m - i - 1].size(); ++j) {
        P[m][j] = k_->sub(P[m][j], k_->mul(c, P[m - i - 1][j]));
      }
    }
  }
  return P[n];
}

}  // namespace gonal
