#pragma once

#include <array>
#include <vector>

#include "arithcx/complex.hpp"
#include "arithcx/smith.hpp"

namespace arithcx {

// Reference data for d = 3, transcribed by hand: the differentials of the
// complexes with weights (x,1,1,1) and (-x-6,1,1,1) and the four matrices of
// the isomorphism between them.  Golden tests and `iso --golden` compare
// computed output against these entry for entry.
const std::array<Matrix<IVPoly>, 3>& golden_d3_diffs_x();    // d_1, d_2, d_3 of C(x,1,1,1)
const std::array<Matrix<IVPoly>, 3>& golden_d3_diffs_neg();  // d_1, d_2, d_3 of C(-x-6,1,1,1)
const std::array<ZMatrix, 4>& golden_d3_alpha();             // degrees 0..3

} // namespace arithcx
