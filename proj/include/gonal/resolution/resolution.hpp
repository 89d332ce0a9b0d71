#pragma once

#include "gonal/groebner/ideal.hpp"
#include "gonal/mpoly/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gonal {

/// Free module with basis elements e_i of degree degrees[i], i.e. a sum of
/// R(-degrees[i]).
struct GradedFreeModule {
  std::vector<int> degrees;

  int rank() const { return static_cast<int>(degrees.size()); }
  /// (twist, multiplicity) pairs with twist = -degree, sorted by decreasing twist.
  std::vector<std::pair<int, int>> summands() const;
  /// "R(-2)^6 + R(-3)^5"
  std::string to_string() const;
};

/// Map source -> target in the row convention: row i holds the image of the
/// i-th source basis element, so entry (i, j) has degree
/// source.degrees[i] - target.degrees[j]. Maps compose as M_{k+1} * M_k.
struct GradedMap {
  GradedFreeModule source;
  GradedFreeModule target;
  PolyMatrix matrix;
};

/// Graded Betti numbers with the Macaulay layout: row r, column i holds
/// beta_{i, i+r}.
class BettiDiagram {
 public:
  BettiDiagram() = default;
  /// rows[r][i] = beta_{i, i+r}
  static BettiDiagram from_rows(const std::vector<std::vector<int>>& rows);

  int at(int i, int j) const;
  void add(int i, int j, int count);
  /// Total rank of the i-th module.
  int total(int i) const;
  int length() const;
  int max_row() const;
  bool operator==(const BettiDiagram& o) const { return b_ == o.b_; }
  bool operator!=(const BettiDiagram& o) const { return b_ != o.b_; }
  /// Compact "1; 6; 5, 5; 6; 1" form (column by column, nonzero entries by row).
  std::string compact() const;
  std::string to_string() const;
  const std::map<std::pair<int, int>, int>& entries() const { return b_; }

 private:
  std::map<std::pair<int, int>, int> b_;
};

struct Resolution {
  RingPtr ring;
  /// maps[k] : F_{k+1} -> F_k, with F_0 = R.
  std::vector<GradedMap> maps;
  BettiDiagram betti;
};

/// Minimal homogeneous generators of the kernel of M, i.e. of the vectors s
/// with s * M = 0. Rows of the result are the generators, ordered by degree
/// then by discovery order.
GradedMap syzygies(const GradedMap& M);

/// Minimal homogeneous generators of I, ordered by degree.
std::vector<MPoly> minimal_generators(const Ideal& I);

/// Minimal graded free resolution of R/I for homogeneous I.
Resolution minimal_resolution(const Ideal& I);

/// The linear syzygies among the six quadrics of a generic canonical genus-6
/// ideal: rows = the R(-3)^5 summand of F_2, columns = quadric generators.
PolyMatrix phi_matrix(const Resolution& res);

/// The quadric generators of a resolution (first map as a list).
std::vector<MPoly> first_generators(const Resolution& res);

}  // namespace gonal
