#pragma once

#include "gonal/groebner/solve.hpp"

#include <optional>
#include <vector>

namespace gonal {

/// Map to P^n given by n+1 forms of one degree on the ambient projective
/// space of a source ideal. The forms may live over an extension of the
/// source field.
struct RationalMap {
  std::vector<MPoly> forms;

  int target_dim() const { return static_cast<int>(forms.size()) - 1; }
  const RingPtr& ring() const { return forms.at(0).ring(); }
  std::string to_string() const;
};

/// I with its generators embedded over the field of r (same variable names).
Ideal extend_scalars(const Ideal& I, const RingPtr& r);

/// Projective degree of the fiber of the map on V(I) over the target point,
/// taken in the closure of the graph so base points of the forms count
/// wherever the map extends.
long fiber_degree(const Ideal& I, const RationalMap& m, const std::vector<Scalar>& target_point);

/// Points of V(I) on a random hyperplane, as projective representatives
/// normalized on a second random linear form. I must define a curve.
ZeroDimSolution hyperplane_section(const Ideal& I, std::uint64_t seed);

/// Coordinates of another point in the Galois orbit: the generator of the
/// point's field (a root of the eliminant factor) is replaced by `root`.
std::vector<Scalar> conjugate_point(const SolutionPoint& p, const Scalar& root);

struct PlaneSingularity {
  SolutionPoint point;
  /// Rank of the Hessian at the point; 2 means an ordinary node.
  int hessian_rank = 0;
  bool is_node() const { return hessian_rank == 2; }
};

/// Singular points of a plane curve F(x, y, z) = 0, one entry per Galois
/// orbit, found chart by chart (z = 1, then z = 0 and y = 1, then x = 1).
std::vector<PlaneSingularity> plane_singularities(const MPoly& F, std::uint64_t seed = kDefaultSolveSeed);

/// Homogeneous forms of the least degree up to max_degree in the target
/// variables that vanish on the image of V(I) under the map. Empty when
/// none exists up to max_degree.
std::vector<MPoly> image_equations(const Ideal& I, const RationalMap& m, const RingPtr& target, int max_degree);

struct PlaneImage {
  MPoly equation;
  int degree = 0;
  /// Degree of the map onto its image.
  int map_degree = 0;
};

/// Image of a curve V(I) under a map to P^2 (equation of degree at most
/// max_degree) and the degree of the map onto it, from the pullback of a
/// random line with the base locus removed.
PlaneImage plane_image(const Ideal& I, const RationalMap& m, const RingPtr& target, int max_degree, std::uint64_t seed);

/// Points of a projective scheme with finitely many points, one entry per
/// Galois orbit; each representative has its first nonzero coordinate 1.
std::vector<SolutionPoint> projective_points(const Ideal& I, std::uint64_t seed = kDefaultSolveSeed);

/// Jacobian criterion for a projective scheme of pure codimension codim:
/// I plus the codim-minors of the Jacobian of the generators defines the
/// empty set.
bool is_smooth(const Ideal& I, int codim);

/// Subspace basis in reduced echelon form; if every entry lies in `base`,
/// the coefficients are returned over `base` (Galois descent of a stable
/// subspace). Rows are coefficient vectors.
std::vector<std::vector<Scalar>> descend_rows(const FieldPtr& from, const std::vector<std::vector<Scalar>>& rows,
                                              const FieldPtr& base, bool* descended = nullptr);

}  // namespace gonal
