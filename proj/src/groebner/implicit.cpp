#include "gonal/groebner/implicit.hpp"

#include "gonal/arith/linalg.hpp"

namespace gonal {

std::vector<MPoly> image_forms(const MPoly& curve, const std::vector<MPoly>& forms, const RingPtr& target,
                               int degree) {
  const RingPtr& S = curve.ring();
  const int n = target->nvars();
  if (static_cast<int>(forms.size()) != n) throw Error("image_forms: one form per target variable required");
  const int fd = forms[0].total_degree();
  for (const auto& f : forms) {
    if (!f.is_homogeneous() || f.total_degree() != fd) throw Error("image_forms: forms must share one degree");
  }
  const auto mons = monomials_of_degree(n, degree);
  const int d = degree * fd;
  const auto img_basis = monomials_of_degree(S->nvars(), d);
  std::vector<MPoly> cols;
  for (const auto& m : mons) {
    MPoly g = MPoly::from_int(S, 1);
    for (int v = 0; v < n; ++v) {
      if (m.e[v]) g = g * forms[v].pow(m.e[v]);
    }
    cols.push_back(std::move(g));
  }
  if (d >= curve.total_degree()) {
    for (const auto& m : monomials_of_degree(S->nvars(), d - curve.total_degree())) {
      cols.push_back(curve * MPoly::monomial(S, m, S->field()->one()));
    }
  }
  Mat A(S->field(), static_cast<int>(img_basis.size()), static_cast<int>(cols.size()));
  for (int j = 0; j < A.cols(); ++j) {
    auto v = coeff_vector(cols[j], img_basis);
    for (int i = 0; i < A.rows(); ++i) A.at(i, j) = v[i];
  }
  Mat K = A.kernel();
  Mat Q(S->field(), 0, static_cast<int>(mons.size()));
  for (int i = 0; i < K.rows(); ++i) {
    auto r = K.row(i);
    r.resize(mons.size());
    Q.append_row(r);
  }
  Q.rref();
  std::vector<MPoly> out;
  for (int i = 0; i < Q.rows(); ++i) {
    MPoly f = from_coeff_vector(target, mons, Q.row(i));
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace gonal
