#pragma once

#include "gonal/geometry/geometry.hpp"
#include "gonal/mpoly/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gonal {

/// The rank-5 summand of the quadric term that receives the linear
/// syzygies, and the surface cut out by its quadrics.
struct SummandData {
  /// Spans the common right kernel of the linear-syzygy coefficients.
  std::vector<Scalar> kernel;
  /// 5 x 6 reduced echelon basis of the complement orthogonal to kernel.
  Mat basis;
  /// Ideal of the surface: images of the basis rows under the quadrics.
  Ideal surface;
  /// Column of basis outside the identity block (0-based).
  int complementary = 0;
  /// The linear-syzygy matrix with that column removed (5 x 5).
  PolyMatrix m5;
};

/// m_phi: 5 x 6 matrix of linear forms (rows = linear syzygies among the
/// six quadrics); quadrics: the generators the columns refer to.
/// Throws "image of phi not in a rank-5 summand" unless the kernel is a line.
SummandData rank5_summand(const PolyMatrix& m_phi, const std::vector<MPoly>& quadrics);

struct ConeTest {
  bool is_cone = false;
  /// Singular points of the surface (one per Galois orbit); empty when the
  /// singular locus is empty or not finite.
  std::vector<SolutionPoint> singular_points;
  bool singular_locus_finite = true;
  /// Set when is_cone: the base curve in P^4 and the projection to it.
  std::optional<Ideal> base_curve;
  std::optional<RationalMap> projection;
  std::vector<Scalar> apex;
};

/// Decides whether the surface is a cone over a quintic curve in P^4.
ConeTest elliptic_cone_test(const Ideal& surface, std::uint64_t seed = kDefaultSolveSeed);

/// Unknowns for one pair of affine Grassmannian patches: the rank-3
/// summand F of F5 has the identity at columns f_pivots, the rank-2
/// summand G of the syzygy term has the identity at g_pivots.
struct PatchSystem {
  std::vector<int> f_pivots, g_pivots;
  RingPtr ring;  // u1 u2 v1 v2 w1 w2 r1 r2 r3 s1 s2 s3
  /// Images of the two rows of G: mu[c][j], nu[c][j] is the coefficient of
  /// x_j in column c, a polynomial of degree <= 1 in the unknowns.
  std::vector<std::vector<MPoly>> mu, nu;
  std::vector<MPoly> equations;
};

PatchSystem patch_system(const PolyMatrix& m5, const std::vector<int>& f_pivots, const std::vector<int>& g_pivots);

/// A scroll through the curve, from one solution orbit of a patch system.
struct ScrollPresentation {
  /// Field of the representative point; its generator is a root of eliminant.
  FieldPtr field;
  UPoly eliminant;
  int orbit_size = 1;
  Mat f_sol;         // 3 x 5
  Mat g_sol;         // 2 x 5
  PolyMatrix t_sol;  // 2 x 3 linear forms over field
  /// 2 x 2 minors of t_sol.
  std::vector<MPoly> minors;
  /// Reduced Groebner basis over the base field of the ideal of the whole
  /// orbit; equal keys mean the same scrolls.
  std::string key;
  std::vector<int> f_pivots, g_pivots;
  int multiplicity = 1;

  Ideal ideal() const;
};

struct PatchResult {
  enum Status { NoSolution, Finite, Infinite };
  Status status = NoSolution;
  long degree = 0;
  std::vector<ScrollPresentation> scrolls;
};

/// Solves one patch system. x_ring is the coordinate ring of P^5.
PatchResult scrolls_on_patch(const PolyMatrix& m5, const std::vector<int>& f_pivots, const std::vector<int>& g_pivots,
                             std::uint64_t seed = kDefaultSolveSeed);

struct ScrollSearchOptions {
  int jobs = 1;
  /// Stop once this many geometric scrolls are known (0: never).
  int stop_at = 5;
  std::uint64_t seed = kDefaultSolveSeed;
  /// Restrict to a single patch pair.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> only_patch;
};

struct ScrollSearch {
  /// Distinct orbits in patch order.
  std::vector<ScrollPresentation> scrolls;
  int patches_tried = 0;
  bool infinite_family = false;
  /// Number of scrolls over the algebraic closure.
  int geometric_count() const;
};

ScrollSearch all_scrolls(const PolyMatrix& m5, const ScrollSearchOptions& opts = {});

/// The pencil (L0 : L1) read off the first column of t_sol. Throws
/// "presentation degenerate on curve" unless random fibers have degree 4.
RationalMap gonal_function(const ScrollPresentation& s, const Ideal& curve, std::uint64_t seed = kDefaultSolveSeed);

struct Genus6PlaneModel {
  RationalMap map;
  MPoly image;
  int image_degree = 0;
  int map_degree = 0;
  bool birational() const { return image_degree == 6 && map_degree == 1; }
};

/// Hyperplanes through the residual of a pencil member: the degree-1 part
/// of (I + <L0>) : L1^infinity.
std::vector<MPoly> residual_hyperplanes(const RationalMap& pencil, const Ideal& curve);

/// Same for the member L0 - value * L1 (the fiber of L0/L1 over value).
std::vector<MPoly> residual_hyperplanes(const RationalMap& pencil, const Ideal& curve, const Scalar& value);

/// Plane model from the residual hyperplanes (or the given basis of them).
Genus6PlaneModel plane_model6(const RationalMap& pencil, const Ideal& curve,
                              std::optional<std::vector<MPoly>> basis = std::nullopt,
                              std::uint64_t seed = kDefaultSolveSeed);

/// Conics through the singular points of a plane curve, as a k-basis
/// (Galois orbits contribute their base-field conditions).
std::vector<MPoly> conics_through(const std::vector<SolutionPoint>& points, const RingPtr& plane);

}  // namespace gonal
