#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "arithcx/composition.hpp"
#include "arithcx/fp.hpp"
#include "arithcx/ivpoly.hpp"
#include "arithcx/matrix.hpp"

namespace arithcx {

// Vertex weights of a path graph with d edges (d+1 vertices).  The leftmost
// weight w0 is either an affine symbol s*x + c with s = ±1 or a plain
// integer; the remaining weights w_1..w_d are nonnegative integers.
struct WeightVector {
  int x_coeff = 0; // +1, -1, or 0 when w0 is a plain integer
  mpz_class w0_const = 0;
  std::vector<int> tail; // w_1 .. w_d

  static WeightVector affine(int x_coeff, long c, std::vector<int> tail);
  static WeightVector integer(mpz_class w0, std::vector<int> tail);

  int d() const { return static_cast<int>(tail.size()); }
  bool affine_w0() const { return x_coeff != 0; }

  std::string w0_string() const; // "x", "-x-6", "5"
  std::string to_string() const; // "(x, 1, 1, 1)"
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// Parses w0 ::= "x" | "-x" | ("x"|"-x")("+"|"-")uint | int together with a
// comma-separated tail ("" for d = 0).  Throws std::invalid_argument.
WeightVector parse_weight_vector(const std::string& w0_text, const std::string& tail_csv);

// Weight of a set of consecutive vertices: x_coeff is nonzero exactly when
// the interval contains vertex 0 and w0 is affine.
struct IntervalWeight {
  int x_coeff = 0;
  mpz_class constant = 0;
};

// Sum of the vertex weights over [start_vertex, start_vertex + length].
// Throws std::out_of_range if the interval leaves 0..d.
IntervalWeight interval_weight(const WeightVector& w, int start_vertex, int length);

// Bounded complex of free modules: ranks per degree and the differentials
// between them.  ranks[i] is the rank at degree lo + i, and diffs[i] maps
// degree lo+i+1 to degree lo+i.  Queries outside the support see rank-zero
// terms and empty differentials.
template <typename T>
struct ChainComplex {
  int lo = 0;
  std::vector<long> ranks;
  std::vector<Matrix<T>> diffs;

  int hi() const { return lo + static_cast<int>(ranks.size()) - 1; }

  long rank_at(int k) const {
    if (k < lo || k > hi()) return 0;
    return ranks[static_cast<std::size_t>(k - lo)];
  }

  // The differential leaving degree k.
  Matrix<T> diff_at(int k) const {
    if (k > lo && k <= hi()) return diffs[static_cast<std::size_t>(k - lo - 1)];
    return Matrix<T>(rank_at(k - 1), rank_at(k));
  }

  bool dd_zero() const {
    for (int k = lo + 2; k <= hi(); ++k)
      if (!(diff_at(k - 1) * diff_at(k)).is_zero()) return false;
    return true;
  }

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;
};

// The arithmetic complex of a weight vector: degree-k term free of rank
// C(d,k) with basis all weak compositions of k into d-k+1 parts in the
// enumerate_compositions order.  The differential splits one interval of a
// basis decomposition at each of its edges; the coefficient on splitting
// interval I at its i-th edge is C(weight(I), weight(right piece)), with
// sign +1 on the leftmost interval, alternating to the right.
template <typename T>
struct ArithmeticComplex {
  WeightVector weights;
  std::vector<std::vector<Composition>> bases; // index = degree 0..d
  ChainComplex<T> chain;

  int d() const { return weights.d(); }
};

// Symbolic build over the integer-valued polynomial ring; accepts affine or
// plain-integer w0.  The composite of consecutive differentials is checked
// to vanish on construction.
ArithmeticComplex<IVPoly> build_complex(const WeightVector& w);

// Same construction with integer entries; requires a plain-integer w0.
ArithmeticComplex<mpz_class> build_complex_over_Z(const WeightVector& w);

// Entrywise evaluation at x = m.
ArithmeticComplex<mpz_class> specialize(const ArithmeticComplex<IVPoly>& c, const mpz_class& m);

// Entrywise reduction mod a prime.
ArithmeticComplex<Fp> reduce_mod(const ArithmeticComplex<mpz_class>& c, long p);

// Degree-k term of the dual is the dual of the degree-(-k) term; the
// differential leaving degree k is the transpose of the one leaving degree
// -k+1, with no extra sign.
template <typename T>
ChainComplex<T> dual(const ChainComplex<T>& c) {
  ChainComplex<T> out;
  out.lo = -c.hi();
  out.ranks.assign(c.ranks.rbegin(), c.ranks.rend());
  for (int k = out.lo + 1; k <= out.hi(); ++k)
    out.diffs.push_back(c.diff_at(-k + 1).transpose());
  return out;
}

// Degree-k term of shift(c, s) is the degree-(k+s) term of c; differentials
// pick up the sign (-1)^s.  This is the convention under which the
// dual-shift reindexing of homology used by the cohomology tables comes out
// exactly right, and a dedicated test pins it.
template <typename T>
ChainComplex<T> shift(const ChainComplex<T>& c, int s) {
  ChainComplex<T> out;
  out.lo = c.lo - s;
  out.ranks = c.ranks;
  out.diffs = c.diffs;
  if (s % 2 != 0)
    for (Matrix<T>& m : out.diffs) m = -m;
  return out;
}

// Block decomposition of C(w0, 1^d) by the leading part of each basis
// label.  With A = C(1^d) (labels with leading part 0, dropped) and
// B = C(w0+1, 1^{d-1}) (labels with leading part >= 1, decremented), the
// differential splits as
//     [ -dA   phi ]
//     [  0     dB ]
// in that block order; the diagonal signs were reconciled once at d = 2 and
// are frozen (and re-checked) here.  phi is a chain map B -> A with no
// extra signs: dA_j . phi_j = phi_{j-1} . dB_j.
struct ConeDecomposition {
  ArithmeticComplex<IVPoly> sub;    // C(1^d)
  ArithmeticComplex<IVPoly> quot;   // C(w0+1, 1^{d-1})
  std::vector<Matrix<IVPoly>> phi;  // phi[j]: quot degree j -> sub degree j, j = 0..d-1
};

// Requires tail = 1^d with d >= 1; w0 may be affine or integer.  Throws
// std::invalid_argument otherwise.
ConeDecomposition cone_decompose(const ArithmeticComplex<IVPoly>& c);

} // namespace arithcx
