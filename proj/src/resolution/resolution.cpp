#include "gonal/resolution/resolution.hpp"

#include "gonal/groebner/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gonal {

std::vector<std::pair<int, int>> GradedFreeModule::summands() const {
  std::map<int, int> count;
  for (int d : degrees) ++count[d];
  std::vector<std::pair<int, int>> out;
  for (const auto& [d, n] : count) out.emplace_back(-d, n);
  return out;
}

std::string GradedFreeModule::to_string() const {
  if (degrees.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [twist, n] : summands()) {
    if (!first) os << " + ";
    first = false;
    os << "R";
    if (twist != 0) os << "(" << twist << ")";
    if (n != 1) os << "^" << n;
  }
  return os.str();
}

BettiDiagram BettiDiagram::from_rows(const std::vector<std::vector<int>>& rows) {
  BettiDiagram b;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    for (int i = 0; i < static_cast<int>(rows[r].size()); ++i) {
      if (rows[r][i] != 0) b.add(i, i + r, rows[r][i]);
    }
  }
  return b;
}

int BettiDiagram::at(int i, int j) const {
  auto it = b_.find({i, j});
  return it == b_.end() ? 0 : it->second;
}

void BettiDiagram::add(int i, int j, int count) {
  if (count == 0) return;
  int& v = b_[{i, j}];
  v += count;
  if (v == 0) b_.erase({i, j});
}

int BettiDiagram::total(int i) const {
  int t = 0;
  for (const auto& [k, v] : b_) {
    if (k.first == i) t += v;
  }
  return t;
}

int BettiDiagram::length() const {
  int n = -1;
  for (const auto& [k, v] : b_) n = std::max(n, k.first);
  return n;
}

int BettiDiagram::max_row() const {
  int r = 0;
  for (const auto& [k, v] : b_) r = std::max(r, k.second - k.first);
  return r;
}

std::string BettiDiagram::compact() const {
  std::ostringstream os;
  for (int i = 0; i <= length(); ++i) {
    if (i) os << "; ";
    bool first = true;
    for (const auto& [k, v] : b_) {
      if (k.first != i) continue;
      if (!first) os << ", ";
      first = false;
      os << v;
    }
    if (first) os << 0;
  }
  return os.str();
}

std::string BettiDiagram::to_string() const {
  const int len = length();
  if (len < 0) return "0\n";
  std::vector<std::string> head{"", "total:"};
  std::vector<std::vector<std::string>> cols;
  for (int i = 0; i <= len; ++i) {
    std::vector<std::string> c{std::to_string(i), std::to_string(total(i))};
    for (int r = 0; r <= max_row(); ++r) {
      int v = at(i, i + r);
      c.push_back(v ? std::to_string(v) : ".");
    }
    cols.push_back(std::move(c));
  }
  for (int r = 0; r <= max_row(); ++r) head.push_back(std::to_string(r) + ":");
  std::size_t hw = 0;
  for (const auto& h : head) hw = std::max(hw, h.size());
  std::ostringstream os;
  for (std::size_t line = 0; line < head.size(); ++line) {
    os << std::string(hw - head[line].size(), ' ') << head[line];
    for (const auto& c : cols) {
      std::size_t w = 0;
      for (const auto& s : c) w = std::max(w, s.size());
      os << ' ' << std::string(w - c[line].size(), ' ') << c[line];
    }
    os << '\n';
  }
  return os.str();
}

namespace {

using Row = std::vector<MPoly>;
using Key = std::pair<int, Monomial>;
using Sparse = std::map<Key, Scalar>;

int row_degree(const Row& s, const std::vector<int>& degs) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].is_zero()) return s[i].total_degree() + degs[i];
  }
  return -1;
}

bool row_is_zero(const Row& s) {
  return std::all_of(s.begin(), s.end(), [](const MPoly& p) { return p.is_zero(); });
}

Sparse to_sparse(const Row& s, const Monomial& mult) {
  Sparse v;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    for (const auto& t : s[i].terms()) v.emplace(Key{i, t.m * mult}, t.c);
  }
  return v;
}

// Incremental row echelon form over sparse vectors; pivot = smallest key.
class Echelon {
 public:
  explicit Echelon(FieldPtr k) : k_(std::move(k)) {}

  /// Reduces v; inserts it if independent. Returns true when inserted.
  bool insert(Sparse v) {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = rows_.find(it->first);
      if (p == rows_.end()) {
        ++it;
        continue;
      }
      const Scalar c = it->second;
      const Key at = it->first;
      for (const auto& [key, val] : p->second) {
        auto [slot, fresh] = v.try_emplace(key, k_->zero());
        slot->second = k_->sub(slot->second, k_->mul(c, val));
        if (k_->is_zero(slot->second)) v.erase(slot);
      }
      it = v.upper_bound(at);
    }
    if (v.empty()) return false;
    const Scalar inv = k_->inv(v.begin()->second);
    for (auto& [key, val] : v) val = k_->mul(val, inv);
    const Key piv = v.begin()->first;
    rows_.emplace(piv, std::move(v));
    return true;
  }

 private:
  FieldPtr k_;
  std::map<Key, Sparse> rows_;
};

// Minimal generators among homogeneous candidates, by linear algebra in
// each degree against the span of the lower-degree generators kept so far.
std::vector<Row> minimal_generators(const RingPtr& R, const std::vector<int>& degs, std::vector<Row> cand) {
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (!row_is_zero(cand[i])) order.emplace_back(row_degree(cand[i], degs), i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Row> kept;
  std::vector<int> kept_deg;
  std::size_t pos = 0;
  while (pos < order.size()) {
    const int D = order[pos].first;
    Echelon ech(R->field());
    for (std::size_t g = 0; g < kept.size(); ++g) {
      for (const auto& mu : monomials_of_degree(R->nvars(), D - kept_deg[g])) ech.insert(to_sparse(kept[g], mu));
    }
    for (; pos < order.size() && order[pos].first == D; ++pos) {
      Row& c = cand[order[pos].second];
      if (ech.insert(to_sparse(c, Monomial{}))) {
        kept.push_back(std::move(c));
        kept_deg.push_back(D);
      }
    }
  }
  return kept;
}

// A generating set (not minimal) of the syzygies of the rows of M, from a
// Groebner basis with cofactors (Schreyer's construction).
std::vector<Row> syzygy_candidates(const GradedMap& M) {
  const RingPtr& R = M.matrix.ring();
  const Field& k = *R->field();
  const int m = M.matrix.rows(), r = M.matrix.cols();
  ModuleArith A(ModuleOrder::top(R, r, M.target.degrees));
  std::vector<Vec> gens;
  for (int i = 0; i < m; ++i) {
    std::vector<MTerm> t;
    for (int j = 0; j < r; ++j) {
      for (const auto& term : M.matrix.at(i, j).terms()) t.push_back({term.m, j, term.c});
    }
    gens.push_back(A.make(std::move(t)));
  }
  ModuleGB gb = module_groebner(A, gens, true);
  const std::size_t n = gb.basis.size();

  // lift(c) = sum_a c_a * cofactors[a]
  auto lift = [&](const std::vector<MPoly>& c) {
    Row out(m, MPoly(R));
    for (std::size_t a = 0; a < n; ++a) {
      if (c[a].is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        if (!gb.cofactors[a][j].is_zero()) out[j] += c[a] * gb.cofactors[a][j];
      }
    }
    return out;
  };

  std::vector<Row> out;
  for (int j = 0; j < m; ++j) {
    std::vector<MPoly> q;
    Vec rem = module_normal_form(A, gens[j], gb.basis, &q);
    if (!rem.is_zero()) throw Error("syzygies: input row not reduced by its Groebner basis");
    if (q.empty()) q.assign(n, MPoly(R));
    Row s = lift(q);
    for (auto& p : s) p = -p;
    s[j] += MPoly::from_int(R, 1);
    out.push_back(std::move(s));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const MTerm& la = gb.basis[a].lt();
      const MTerm& lb = gb.basis[b].lt();
      if (la.comp != lb.comp) continue;
      std::vector<MPoly> q;
      Vec rem = module_normal_form(A, s_vector(A, gb.basis[a], gb.basis[b]), gb.basis, &q);
      if (!rem.is_zero()) throw Error("syzygies: Groebner basis check failed");
      const Monomial l = la.m.lcm(lb.m);
      std::vector<MPoly> c(n, MPoly(R));
      for (std::size_t e = 0; e < n; ++e) c[e] = -q[e];
      c[a] += MPoly::monomial(R, l / la.m, k.inv(la.c));
      c[b] -= MPoly::monomial(R, l / lb.m, k.inv(lb.c));
      out.push_back(lift(c));
    }
  }
  return out;
}

GradedMap map_from_rows(const RingPtr& R, const GradedFreeModule& target, const std::vector<Row>& rows) {
  GradedFreeModule source;
  for (const auto& s : rows) source.degrees.push_back(row_degree(s, target.degrees));
  PolyMatrix mat(R, static_cast<int>(rows.size()), target.rank());
  for (int i = 0; i < mat.rows(); ++i) {
    for (int j = 0; j < mat.cols(); ++j) mat.at(i, j) = rows[i][j];
  }
  return {std::move(source), target, std::move(mat)};
}

}  // namespace

GradedMap syzygies(const GradedMap& M) {
  const RingPtr& R = M.matrix.ring();
  auto rows = minimal_generators(R, M.source.degrees, syzygy_candidates(M));
  return map_from_rows(R, M.source, rows);
}

std::vector<MPoly> minimal_generators(const Ideal& I) {
  if (!I.is_homogeneous()) throw Error("ideal is not homogeneous");
  std::vector<Row> cand;
  for (const auto& g : I.gens()) cand.push_back({g});
  std::vector<MPoly> out;
  for (auto& r : minimal_generators(I.ring(), {0}, std::move(cand))) out.push_back(std::move(r[0]));
  return out;
}

Resolution minimal_resolution(const Ideal& I) {
  if (!I.is_homogeneous()) throw Error("ideal is not homogeneous");
  Resolution res;
  res.ring = I.ring();
  const RingPtr& R = res.ring;
  if (I.is_unit()) return res;
  res.betti.add(0, 0, 1);
  GradedFreeModule F0{{0}};
  std::vector<Row> gens;
  for (auto& g : minimal_generators(I)) gens.push_back({std::move(g)});
  if (gens.empty()) return res;
  GradedMap cur = map_from_rows(R, F0, gens);
  for (int stage = 1;; ++stage) {
    for (int d : cur.source.degrees) res.betti.add(stage, d, 1);
    res.maps.push_back(cur);
    GradedMap next = syzygies(cur);
    if (next.source.rank() == 0) break;
    cur = std::move(next);
  }
  return res;
}

PolyMatrix phi_matrix(const Resolution& res) {
  static const BettiDiagram generic = BettiDiagram::from_rows({{1}, {0, 6, 5}, {0, 0, 5, 6}, {0, 0, 0, 0, 1}});
  if (res.betti != generic || res.maps.size() < 2) throw Error("not generic genus-6 shape");
  const GradedMap& second = res.maps[1];
  std::vector<int> rows;
  for (int i = 0; i < second.source.rank(); ++i) {
    if (second.source.degrees[i] == 3) rows.push_back(i);
  }
  std::vector<int> cols(second.target.rank());
  std::iota(cols.begin(), cols.end(), 0);
  return second.matrix.submatrix(rows, cols);
}

std::vector<MPoly> first_generators(const Resolution& res) {
  if (res.maps.empty()) return {};
  return res.maps[0].matrix.col(0);
}

}  // namespace gonal
