#pragma once

#include "gonal/arith/factor.hpp"
#include "gonal/arith/linalg.hpp"
#include "gonal/groebner/ideal.hpp"

#include <vector>

namespace gonal {

/// One Galois orbit of solutions, given by a representative over its
/// field of definition.
struct SolutionPoint {
  FieldPtr field;
  std::vector<Scalar> coords;
  int multiplicity = 1;
  /// Minimal polynomial over the base field of the separating coordinate.
  UPoly eliminant_factor;
  /// Number of geometric points in the orbit.
  int orbit_size() const { return eliminant_factor.degree(); }
};

struct ZeroDimSolution {
  FieldPtr base;
  std::vector<SolutionPoint> points;
  /// dim_k R/I, the total multiplicity.
  long degree = 0;
  /// Coefficients of the separating linear form used.
  std::vector<Scalar> separating_form;

  int geometric_count() const;
  bool is_radical() const;
};

constexpr std::uint64_t kDefaultSolveSeed = 0x736f6c76ULL;

/// All points of a zero-dimensional ideal over the algebraic closure,
/// grouped into Galois orbits. Throws "not zero-dimensional" otherwise.
/// Over Q the shape-lemma data is computed modulo large primes and
/// reconstructed; every returned point is checked exactly against the
/// generators.
ZeroDimSolution solve_zero_dim(const Ideal& I, std::uint64_t seed = kDefaultSolveSeed);

/// Krull dimension of R/I, -1 for the unit ideal. Over Q it is read off
/// reductions modulo two large primes that agree (the larger value wins on
/// disagreement), avoiding a Groebner basis over Q.
int dimension_by_reduction(const Ideal& I);

/// Matrix of multiplication by f on R/I in the basis of standard
/// monomials; row i holds the coordinates of f * basis[i].
Mat multiplication_matrix(const MPoly& f, const std::vector<MPoly>& gb, const std::vector<Monomial>& basis);

/// Lex Groebner basis of a zero-dimensional ideal by change of order (FGLM).
std::vector<MPoly> lex_groebner_fglm(const Ideal& I);

}  // namespace gonal
