#include "arithcx/abelian.hpp"

#include <stdexcept>

namespace arithcx {

AbelianGroup::AbelianGroup(long free_rank, std::vector<mpz_class> factors)
    : free_rank(free_rank), invariant_factors(std::move(factors)) {
  if (free_rank < 0) throw std::invalid_argument("AbelianGroup: negative free rank");
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (invariant_factors[i] <= 1)
      throw std::invalid_argument("AbelianGroup: invariant factors must exceed 1");
    if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
      throw std::invalid_argument("AbelianGroup: invariant factors must form a divisibility chain");
  }
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank == 1) out = "Z";
  if (free_rank >= 2) out = "Z^" + std::to_string(free_rank);
  for (const mpz_class& d : invariant_factors) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z/" + d.get_str();
  }
  return out;
}

} // namespace arithcx
