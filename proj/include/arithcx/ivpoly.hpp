#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace arithcx {

// Element of the ring of integer-valued polynomials, stored as coefficients
// (c_0, ..., c_N) in the binomial basis: p = sum_n c_n * C(x,n).  The basis
// keeps every coefficient integral and makes membership in the ring
// automatic.  Stored form is normalized (no trailing zero coefficients; the
// empty sequence is the zero polynomial), and equality is coefficientwise.
// Values are immutable in spirit: every operation returns a fresh value, so
// instances are safe to share across threads.
class IVPoly {
public:
  IVPoly() = default;          // zero
  IVPoly(long constant);       // integers embed as degree-0 elements
  IVPoly(mpz_class constant);

  static IVPoly from_coeffs(std::vector<mpz_class> coeffs);
  static IVPoly x();           // C(x,1)

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(long n) const;

  // sum_n c_n * C(m,n), with generalized binomials (negative m allowed).
  mpz_class eval(const mpz_class& m) const;
  mpz_class eval(long m) const { return eval(mpz_class(m)); }

  IVPoly operator-() const;
  friend IVPoly operator+(const IVPoly& p, const IVPoly& q);
  friend IVPoly operator-(const IVPoly& p, const IVPoly& q);
  friend IVPoly operator*(const IVPoly& p, const IVPoly& q);
  IVPoly& operator+=(const IVPoly& q) { return *this = *this + q; }
  IVPoly& operator-=(const IVPoly& q) { return *this = *this - q; }
  IVPoly& operator*=(const IVPoly& q) { return *this = *this * q; }
  friend bool operator==(const IVPoly&, const IVPoly&) = default;

  // Binomial-basis form, e.g. "3 + 3*C(x,1) + C(x,2)".
  std::string to_basis_string() const;
  // Compact form: an integer, an affine linear "x+3" / "-x-5", or a single
  // affine binomial "C(x+3,2)" / "-C(x+5,3)" when the polynomial is one;
  // otherwise the basis form.
  std::string to_string() const;

private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

// The element C(sign*x + shift, n) of the ring: 1 for n = 0, zero for n < 0.
// sign must be +1 or -1.
IVPoly affine_binom(int sign, long shift, long n);

// The unique polynomial of degree < values.size() taking values[i] at x = i;
// coefficients are the forward differences at 0.
IVPoly interpolate(const std::vector<mpz_class>& values);

// Affine parser for weight input: "x", "-x", "x+3", "-x-6", "17".
// Returns (x coefficient in {-1,0,+1}, constant).
std::pair<int, long> parse_affine(const std::string& text);

// Accepts the affine forms above plus single binomials "C(x+3,2)",
// "C(-x+1,3)", optionally negated.  Throws std::invalid_argument on
// malformed input.
IVPoly parse_ivpoly(const std::string& text);

} // namespace arithcx
