#include "arithcx/sweeps.hpp"

#include <vector>

#include "arithcx/complex.hpp"
#include "arithcx/rng.hpp"

namespace arithcx {

namespace {

// w0 choice index 0 = x, 1 = -x-2d, 2.. = integers -10..10
WeightVector make_weights(int choice, int d, std::vector<int> tail) {
  if (choice == 0) return WeightVector::affine(+1, 0, std::move(tail));
  if (choice == 1) return WeightVector::affine(-1, -2 * d, std::move(tail));
  return WeightVector::integer(choice - 2 - 10, std::move(tail));
}

bool try_build(const WeightVector& w, SweepResult& result) {
  try {
    if (w.affine_w0())
      build_complex(w);
    else
      build_complex_over_Z(w);
  } catch (const std::exception& e) {
    result.pass = false;
    if (result.first_failure.empty())
      result.first_failure = w.to_string() + ": " + e.what();
    return false;
  }
  ++result.built;
  return true;
}

} // namespace

SweepResult dd_zero_sweep(std::uint64_t seed, int dmax, int samples_per_d) {
  Rng rng(seed);
  SweepResult result;
  constexpr int kChoices = 2 + 21; // x, -x-2d, -10..10
  for (int d = 1; d <= dmax; ++d) {
    for (int choice = 0; choice < kChoices; ++choice)
      try_build(make_weights(choice, d, std::vector<int>(static_cast<std::size_t>(d), 1)),
                result);
    for (int s = 0; s < samples_per_d; ++s) {
      int choice = static_cast<int>(rng.uniform(0, kChoices - 1));
      std::vector<int> tail(static_cast<std::size_t>(d));
      for (int& t : tail) t = static_cast<int>(rng.uniform(0, 5));
      try_build(make_weights(choice, d, std::move(tail)), result);
    }
  }
  return result;
}

} // namespace arithcx
