#pragma once

#include "gonal/arith/upoly.hpp"

#include <string>
#include <vector>

namespace gonal {

struct Factor {
  UPoly poly;  // monic
  int multiplicity;
};

constexpr std::uint64_t kDefaultFactorSeed = 0x6f6e616cULL;

/// Squarefree decomposition into pairwise coprime monic parts.
std::vector<Factor> squarefree_decomposition(const UPoly& f);

/// Complete factorization into monic irreducibles, sorted by degree and
/// then by coefficients. The unit (leading coefficient) is dropped.
/// Supported: Q, F_p, extensions of either.
std::vector<Factor> factor(const UPoly& f, std::uint64_t seed = kDefaultFactorSeed);

bool is_irreducible(const UPoly& f);

/// Roots of f lying in K (K must contain f's coefficient field), with
/// multiplicity.
std::vector<FieldElement> roots_in(const UPoly& f, const FieldPtr& K);

/// K[a]/(f) for monic irreducible f. A linear f gives K itself. Throws
/// "reducible minimal polynomial" otherwise.
FieldPtr extend(const FieldPtr& K, const UPoly& f, std::string generator = "");

/// Norm of an element of an extension down to its immediate base.
Scalar norm_to_base(const Field& K, const Scalar& a);

}  // namespace gonal
