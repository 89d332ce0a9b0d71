#pragma once

#include "gonal/mpoly/mpoly.hpp"

#include <vector>

namespace gonal {

/// Basis (in echelon form) of the forms of the given degree on `target`
/// that vanish on the image of the hypersurface {curve = 0} under the map
/// given by `forms` (all of one degree, one per target variable).
std::vector<MPoly> image_forms(const MPoly& curve, const std::vector<MPoly>& forms, const RingPtr& target,
                               int degree);

}  // namespace gonal
