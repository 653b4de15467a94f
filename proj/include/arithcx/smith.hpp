#pragma once

#include <gmpxx.h>

#include <vector>

#include "arithcx/fp.hpp"
#include "arithcx/matrix.hpp"

namespace arithcx {

using ZMatrix = Matrix<mpz_class>;
using QMatrix = Matrix<mpq_class>;
using FpMatrix = Matrix<Fp>;

// u * input * v = s with u, v unimodular and s diagonal, every diagonal
// entry nonnegative and dividing the next, zeros trailing.  v_inverse is
// carried along because homology computations change basis through v.
struct SmithDecomposition {
  ZMatrix u, s, v, v_inverse;
  long rank = 0; // number of nonzero diagonal entries

  std::vector<mpz_class> diagonal() const;
  // Diagonal entries > 1: the canonical torsion data.
  std::vector<mpz_class> invariant_factors() const;
};

// Pivots always on a minimal-absolute-value nonzero entry (row-then-column
// tie break), which bounds coefficient growth and is deterministic.
SmithDecomposition smith_normal_form(ZMatrix a);

// Exact determinant by Bareiss fraction-free elimination.
mpz_class det_int(const ZMatrix& a);

// Row rank by exact Gaussian elimination over the field.
long rank_over_field(const QMatrix& a);
long rank_over_field(const FpMatrix& a);

long rank_over_Q(const ZMatrix& a);
long rank_mod_p(const ZMatrix& a, long p);

QMatrix to_rational(const ZMatrix& a);
FpMatrix to_mod_p(const ZMatrix& a, long p);

} // namespace arithcx
