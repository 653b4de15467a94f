#pragma once

#include <gmpxx.h>

#include <map>

#include "arithcx/abelian.hpp"
#include "arithcx/complex.hpp"
#include "arithcx/fp.hpp"
#include "arithcx/smith.hpp"

namespace arithcx {

// ker/im at degree k of a complex of free abelian groups, via two Smith
// decompositions: the incoming differential is rewritten in a kernel basis
// of the outgoing one (the tail columns of its V transform), and the Smith
// form of that restriction carries the invariant factors.  Throws
// std::invalid_argument if the two differentials do not compose to zero.
AbelianGroup homology_Z(const ChainComplex<mpz_class>& c, int k);

// All degrees of the support; trivial groups are included so callers can
// see explicit zeros.
std::map<int, AbelianGroup> homology_table_Z(const ChainComplex<mpz_class>& c);

// dim ker - rank of the incoming differential.
long homology_field(const ChainComplex<mpq_class>& c, int k);
long homology_field(const ChainComplex<Fp>& c, int k);

std::map<int, long> homology_table_field(const ChainComplex<Fp>& c);

// True iff every rational homology group vanishes, i.e. rank C_k equals
// rank d_k + rank d_{k+1} for all k.
bool is_exact_over_Q(const ChainComplex<mpz_class>& c);

// sum (-1)^k rank C_k; equals the alternating sum of homology free ranks.
long euler_characteristic(const ChainComplex<mpz_class>& c);

} // namespace arithcx
