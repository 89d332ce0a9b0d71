#pragma once

#include "gonal/geometry/geometry.hpp"

#include <optional>
#include <vector>

namespace gonal {

/// Symmetric matrix G with q = x^T G x (characteristic not 2).
Mat gram_matrix(const MPoly& q);
MPoly quadric_from_gram(const RingPtr& r, const Mat& g);

/// Basis Q_1, Q_2, Q_3 of the quadrics of a genus-5 canonical ideal, with
/// their Gram matrices.
struct QuadricNet {
  RingPtr ring;
  std::vector<MPoly> quadrics;
  std::vector<Mat> gram;
};

QuadricNet quadric_net(const Ideal& I);

/// det(x G_1 + y G_2 + z G_3) in k[x, y, z]; throws when it vanishes
/// identically.
MPoly determinant_quintic(const QuadricNet& net);

struct SingularQuadric {
  FieldPtr field;
  /// (x0 : y0 : z0) on the quintic.
  std::vector<Scalar> point;
  /// x0 Q_1 + y0 Q_2 + z0 Q_3 over field.
  MPoly quadric;
  Mat gram;
  int rank = 0;
  /// Kernel basis: the vertex point (rank 4) or two points spanning the
  /// vertex line (rank 3).
  std::vector<std::vector<Scalar>> vertex;
};

constexpr std::uint64_t kDefaultGenus5Seed = 0x67356b31ULL;

/// Restricts F to lines (random over F_p, small height over Q), factors,
/// and takes the point from a linear factor when one exists, otherwise
/// from the lowest-degree factor over its extension.
SingularQuadric find_singular_quadric(const MPoly& F, const QuadricNet& net,
                                      std::uint64_t seed = kDefaultGenus5Seed, int max_lines = 25);

struct Genus5GonalMap {
  int rank = 0;
  FieldPtr field;
  /// Rank 4: forms (x0, x1, x2, x3) with Q = x0 x1 - x2 x3.
  /// Rank 3: forms (y0, y1, y2) of the projection from the vertex line.
  std::vector<MPoly> coords;
  /// Degree-4 maps to P^1; both ruling classes when they are defined over
  /// the same field, otherwise one representative.
  std::vector<RationalMap> maps;
};

Genus5GonalMap gonal_map_genus5(const SingularQuadric& sq, const Ideal& I, std::uint64_t seed = kDefaultGenus5Seed);

struct Genus5PlaneModel {
  FieldPtr field;
  std::vector<Scalar> p, q;
  /// Linear forms vanishing on the secant line through p and q.
  RationalMap map;
  /// Image curve in X, Y, Z.
  MPoly image;
  int image_degree = 0;
  int map_degree = 0;
  /// Degree 3 image under a 2:1 map.
  bool bielliptic = false;
};

/// Projection from the secant line through two points of the curve. Without
/// points, two are taken from a random hyperplane section.
Genus5PlaneModel plane_model6_genus5(const Ideal& I,
                                     std::optional<std::pair<std::vector<Scalar>, std::vector<Scalar>>> points = {},
                                     FieldPtr points_field = nullptr, std::uint64_t seed = kDefaultGenus5Seed);

}  // namespace gonal
