#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace arithcx {

// Finitely generated abelian group in invariant-factor form: free rank plus
// torsion factors d_1 | d_2 | ... | d_s, each > 1.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<mpz_class> invariant_factors;

  AbelianGroup() = default;
  AbelianGroup(long free_rank, std::vector<mpz_class> factors);

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  // "0", "Z", "Z^2 ⊕ Z/2 ⊕ Z/4" style rendering.
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

} // namespace arithcx
