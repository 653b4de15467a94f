#include "arithcx/ivpoly.hpp"

#include <cctype>
#include <stdexcept>

#include "arithcx/numeric.hpp"

namespace arithcx {

IVPoly::IVPoly(long constant) : IVPoly(mpz_class(constant)) {}

IVPoly::IVPoly(mpz_class constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

IVPoly IVPoly::from_coeffs(std::vector<mpz_class> coeffs) {
  IVPoly p;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

IVPoly IVPoly::x() { return from_coeffs({0, 1}); }

mpz_class IVPoly::coeff(long n) const {
  if (n < 0 || n >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(n)];
}

void IVPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IVPoly::eval(const mpz_class& m) const {
  mpz_class acc = 0, b = 1; // b = C(m, n)
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (n > 0) {
      b *= m - static_cast<long>(n - 1);
      mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n));
    }
    acc += coeffs_[n] * b;
  }
  return acc;
}

IVPoly IVPoly::operator-() const {
  IVPoly p;
  p.coeffs_.reserve(coeffs_.size());
  for (const mpz_class& c : coeffs_) p.coeffs_.push_back(-c);
  return p;
}

IVPoly operator+(const IVPoly& p, const IVPoly& q) {
  std::vector<mpz_class> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < p.coeffs_.size()) c[i] += p.coeffs_[i];
    if (i < q.coeffs_.size()) c[i] += q.coeffs_[i];
  }
  return IVPoly::from_coeffs(std::move(c));
}

IVPoly operator-(const IVPoly& p, const IVPoly& q) { return p + (-q); }

// Product by evaluation at 0..deg(p)+deg(q) and finite-difference
// interpolation; the binomial basis turns forward differences at 0 straight
// into coefficients.
IVPoly operator*(const IVPoly& p, const IVPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  long n = p.degree() + q.degree();
  std::vector<mpz_class> values(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) {
    mpz_class m(i);
    values[static_cast<std::size_t>(i)] = p.eval(m) * q.eval(m);
  }
  return interpolate(values);
}

IVPoly interpolate(const std::vector<mpz_class>& values) {
  std::vector<mpz_class> c = values;
  for (std::size_t level = 1; level < c.size(); ++level)
    for (std::size_t i = c.size() - 1; i >= level; --i) c[i] -= c[i - 1];
  return IVPoly::from_coeffs(std::move(c));
}

std::string IVPoly::to_basis_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const mpz_class& c = coeffs_[n];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (out.empty())
      out += (c < 0) ? "-" : "";
    else
      out += (c < 0) ? " - " : " + ";
    std::string term;
    if (n == 0) {
      term = a.get_str();
    } else {
      if (a != 1) term = a.get_str() + "*";
      term += "C(x," + std::to_string(n) + ")";
    }
    out += term;
  }
  return out;
}

namespace {

std::string affine_string(long x_coeff, const mpz_class& c) {
  std::string out = x_coeff > 0 ? "x" : "-x";
  if (c > 0) out += "+" + c.get_str();
  if (c < 0) out += c.get_str();
  return out;
}

} // namespace

std::string IVPoly::to_string() const {
  if (is_zero()) return "0";
  long n = degree();
  if (n == 0) return coeffs_[0].get_str();
  // single affine binomial ±C(x+s, n)?
  for (int sign : {+1, -1}) {
    if (coeffs_.back() != sign) continue;
    // C(x+s, n) has C(x,n-1)-coefficient C(s,1) = s
    mpz_class shift_z = sign * coeffs_[static_cast<std::size_t>(n - 1)];
    if (!shift_z.fits_slong_p()) continue;
    long s = shift_z.get_si();
    IVPoly candidate = affine_binom(+1, s, n);
    if (sign < 0) candidate = -candidate;
    if (candidate == *this) {
      if (n == 1) return affine_string(sign, sign > 0 ? mpz_class(s) : mpz_class(-s));
      std::string inner = "x";
      if (s > 0) inner += "+" + std::to_string(s);
      if (s < 0) inner += std::to_string(s);
      std::string out = "C(" + inner + "," + std::to_string(n) + ")";
      return sign > 0 ? out : "-" + out;
    }
  }
  return to_basis_string();
}

IVPoly affine_binom(int sign, long shift, long n) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("affine_binom: sign must be ±1");
  if (n < 0) return {};
  if (n == 0) return IVPoly(1);
  if (sign == -1) {
    // C(-x+shift, n) = (-1)^n C(x + n - 1 - shift, n)
    IVPoly p = affine_binom(+1, n - 1 - shift, n);
    return (n % 2 != 0) ? -p : p;
  }
  // C(x+shift, n) = sum_j C(shift, n-j) C(x, j)
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) c[static_cast<std::size_t>(j)] = int_binom(shift, n - j);
  return IVPoly::from_coeffs(std::move(c));
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

long parse_long_or_throw(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

} // namespace

std::pair<int, long> parse_affine(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty weight");
  int xc = 0;
  std::size_t i = 0;
  if (s[0] == 'x') {
    xc = +1;
    i = 1;
  } else if (s.size() >= 2 && s[0] == '-' && s[1] == 'x') {
    xc = -1;
    i = 2;
  } else if (s.size() >= 2 && s[0] == '+' && s[1] == 'x') {
    xc = +1;
    i = 2;
  }
  if (xc == 0) return {0, parse_long_or_throw(s)};
  if (i == s.size()) return {xc, 0};
  if (s[i] != '+' && s[i] != '-') throw std::invalid_argument("bad weight '" + text + "'");
  return {xc, parse_long_or_throw(s.substr(i))};
}

IVPoly parse_ivpoly(const std::string& text) {
  std::string s = strip_spaces(text);
  bool neg = false;
  if (s.rfind("-C(", 0) == 0) {
    neg = true;
    s = s.substr(1);
  }
  if (s.rfind("C(", 0) == 0) {
    if (s.back() != ')') throw std::invalid_argument("bad binomial '" + text + "'");
    std::string inner = s.substr(2, s.size() - 3);
    std::size_t comma = inner.rfind(',');
    if (comma == std::string::npos) throw std::invalid_argument("bad binomial '" + text + "'");
    auto [xc, c] = parse_affine(inner.substr(0, comma));
    if (xc == 0) throw std::invalid_argument("binomial must contain x: '" + text + "'");
    long n = parse_long_or_throw(inner.substr(comma + 1));
    if (n < 0) throw std::invalid_argument("binomial index must be nonnegative");
    IVPoly p = affine_binom(xc, c, n);
    return neg ? -p : p;
  }
  auto [xc, c] = parse_affine(s);
  return IVPoly::from_coeffs({mpz_class(c), mpz_class(xc)});
}

} // namespace arithcx
