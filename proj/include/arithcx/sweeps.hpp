#pragma once

#include <cstdint>
#include <string>

namespace arithcx {

// Seeded sweep over weight vectors: for each d up to dmax, samples_per_d
// draws of (w0, tail) with w0 uniform over {x, -x-2d} ∪ {-10..10} and tail
// uniform over {0..5}^d, plus the all-ones tail with every w0 choice.
// Each draw builds the complex (symbolically when w0 is affine), which
// verifies the vanishing of composite differentials on construction.
struct SweepResult {
  long built = 0;
  bool pass = true;
  std::string first_failure;
};

SweepResult dd_zero_sweep(std::uint64_t seed, int dmax, int samples_per_d);

} // namespace arithcx
