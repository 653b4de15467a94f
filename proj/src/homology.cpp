#include "arithcx/homology.hpp"

#include <stdexcept>

namespace arithcx {

AbelianGroup homology_Z(const ChainComplex<mpz_class>& c, int k) {
  const long n_k = c.rank_at(k);
  if (n_k == 0) return {};
  ZMatrix d_out = c.diff_at(k);
  ZMatrix d_in = c.diff_at(k + 1);
  if (!(d_out * d_in).is_zero())
    throw std::invalid_argument("homology_Z: differentials do not compose to zero");

  SmithDecomposition snf_out = smith_normal_form(d_out);
  const long r = snf_out.rank;
  const long kernel_rank = n_k - r;

  // Incoming differential in the kernel basis (tail columns of V).
  ZMatrix w = snf_out.v_inverse * d_in;
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < w.cols(); ++j)
      if (w(i, j) != 0) throw std::logic_error("homology_Z: image escapes the kernel");
  ZMatrix restricted = w.block(r, 0, kernel_rank, w.cols());

  SmithDecomposition snf_in = smith_normal_form(restricted);
  return {kernel_rank - snf_in.rank, snf_in.invariant_factors()};
}

std::map<int, AbelianGroup> homology_table_Z(const ChainComplex<mpz_class>& c) {
  std::map<int, AbelianGroup> table;
  for (int k = c.lo; k <= c.hi(); ++k) table[k] = homology_Z(c, k);
  return table;
}

namespace {

template <typename F>
long homology_field_generic(const ChainComplex<F>& c, int k) {
  const long n_k = c.rank_at(k);
  if (n_k == 0) return 0;
  long rank_out = rank_over_field(c.diff_at(k));
  long rank_in = rank_over_field(c.diff_at(k + 1));
  return n_k - rank_out - rank_in;
}

} // namespace

long homology_field(const ChainComplex<mpq_class>& c, int k) {
  return homology_field_generic(c, k);
}

long homology_field(const ChainComplex<Fp>& c, int k) { return homology_field_generic(c, k); }

std::map<int, long> homology_table_field(const ChainComplex<Fp>& c) {
  std::map<int, long> table;
  for (int k = c.lo; k <= c.hi(); ++k) table[k] = homology_field(c, k);
  return table;
}

bool is_exact_over_Q(const ChainComplex<mpz_class>& c) {
  for (int k = c.lo; k <= c.hi(); ++k) {
    long rank_out = rank_over_Q(c.diff_at(k));
    long rank_in = rank_over_Q(c.diff_at(k + 1));
    if (c.rank_at(k) != rank_out + rank_in) return false;
  }
  return true;
}

long euler_characteristic(const ChainComplex<mpz_class>& c) {
  long chi = 0;
  for (int k = c.lo; k <= c.hi(); ++k) chi += (k % 2 == 0) ? c.rank_at(k) : -c.rank_at(k);
  return chi;
}

} // namespace arithcx
