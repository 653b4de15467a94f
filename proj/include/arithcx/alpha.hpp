#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

#include "arithcx/complex.hpp"
#include "arithcx/composition.hpp"
#include "arithcx/report.hpp"
#include "arithcx/smith.hpp"

namespace arithcx {

// Degreewise integer matrices of the isomorphism C(x,1^d) -> C(-x-2d,1^d).
//
// Layout convention (fixed once, golden-tested): entry (r, c) of
// alpha_map(d, k) is the coefficient of the r-th codomain basis label in the
// image of the c-th domain basis label, both in enumerate_compositions
// order.  Under this layout the matrices are upper triangular with diagonal
// entries (-1)^(d - leading part), and the chain-map identity reads
// alpha_{k-1} * d_k(x) = d_k(-x-2d) * alpha_k with ordinary products.

// Coefficient of f_mu in the image of f_lam; lam and mu must have the same
// length t and the same sum d-t+1.
mpz_class alpha_entry(int d, const Composition& lam, const Composition& mu);

// The degree-k matrix, size C(d,k) x C(d,k); requires 0 <= k <= d.
ZMatrix alpha_map(int d, int k);

// alpha_{k-1} * d_k(x) == d_k(-x-2d) * alpha_k over the symbolic ring, every
// degree; coefficientwise polynomial equality.
Report verify_chain_map(int d);

// Upper triangularity, diagonal signs, and the support criterion: a nonzero
// entry at (mu, lam) forces mu_j >= lam_j for all j <= t-1 (counted from the
// right).
Report verify_triangular(int d);

// Splits each alpha_map(d, k) by the (leading part = 0 | >= 1) partition:
// top-left must be (-1)^d * identity, bottom-left zero, bottom-right
// alpha_map(d-1, k-1).  gamma[k] is the extracted top-right block.
struct BlockReport {
  Report report;
  std::vector<ZMatrix> gamma; // index = degree k = 0..d
};
BlockReport verify_block_structure(int d);

// Sign pattern of the homotopy identity
//   a*(-1)^d * phi_x + b * phi_{-x-2d} . alpha^{d-1} = dA . h + c * h . dB,
// resolved by exhaustive search at d = 2 and frozen.
inline constexpr std::array<int, 3> kHomotopySigns = {-1, +1, +1};

// Verifies the identity above with the frozen signs, h taken degreewise
// from the gamma blocks; requires d >= 2.
Report verify_homotopy(int d);

// All (a,b,c) sign patterns in {±1}^3 satisfying the homotopy identity at
// this d; the freeze test asserts uniqueness at d = 2.
std::vector<std::array<int, 3>> homotopy_sign_search(int d);

// det(alpha_map(d, k)) for every degree, each required to be +1 or -1.
struct IsoCertificate {
  int d = 0;
  std::vector<mpz_class> determinants; // index = degree
  bool all_unit() const;
};
IsoCertificate iso_certificate(int d);

} // namespace arithcx
