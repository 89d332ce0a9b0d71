#pragma once

#include "gonal/arith/linalg.hpp"
#include "gonal/groebner/ideal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gonal {

enum class Stratum {
  Hyperelliptic,
  Trigonal,
  PlaneQuintic,
  Genus5Generic,
  /// Genus 6, quadrics only, not yet refined by the elliptic cone test.
  Genus6Generic,
  Genus6EllipticCone,
  Genus6DelPezzo,
  NotCanonicalInput,
};

/// Stable token used in reports, e.g. "Genus6Generic-DelPezzo".
std::string to_string(Stratum s);

struct Sanity {
  /// Projective dimension of the scheme.
  int dim = -1;
  long degree = 0;
  /// Arithmetic genus 1 - P(0), meaningful for curves.
  long genus = 0;
  bool is_canonical = false;
};

/// Degree and arithmetic genus from the Hilbert polynomial; is_canonical
/// when the scheme is a curve of degree 2g-2 and genus g.
Sanity sanity(const Ideal& I, int g);

/// True iff the scheme is a curve of arithmetic genus 0.
bool detect_hyperelliptic(const Ideal& I);

struct LieAlgebraReport {
  int n = 0;
  /// Trace-zero matrices A whose derivation preserves the degree-2 part.
  std::vector<Mat> basis;
  int dimension = 0;
  /// Dimensions of the derived series, starting with the algebra itself,
  /// until it stabilizes.
  std::vector<int> derived_series;
  bool is_soluble = false;
};

/// Stabilizer Lie algebra of a quadric-generated ideal inside sl_n.
LieAlgebraReport lie_algebra(const Ideal& I);

struct Classification {
  Stratum stratum = Stratum::NotCanonicalInput;
  Sanity sanity;
  /// beta_{1,j} for each degree j of a minimal generator.
  std::vector<std::pair<int, int>> generator_degrees;
  /// Present when the trigonal/plane-quintic branch ran.
  std::optional<LieAlgebraReport> lie;
};

/// Gonality stratum of a canonical ideal of genus g in {5, 6}. Genus-6
/// ideals generated by quadrics come back as Genus6Generic; the elliptic
/// cone test refines them.
Classification classify(const Ideal& I, int g);

}  // namespace gonal
