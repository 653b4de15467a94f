#include "arithcx/fp.hpp"

#include <stdexcept>

namespace arithcx {

namespace {

long mod_reduce(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

} // namespace

Fp::Fp(long value, long p) : p_(p) {
  if (p < 2) throw std::invalid_argument("Fp modulus must be >= 2");
  v_ = mod_reduce(value, p);
}

long Fp::common_modulus(const Fp& a, const Fp& b) {
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0) return a.p_;
  if (a.p_ != b.p_) throw std::invalid_argument("Fp modulus mismatch");
  return a.p_;
}

Fp Fp::operator-() const {
  Fp r = *this;
  if (r.p_ != 0) r.v_ = mod_reduce(-r.v_, r.p_);
  return r;
}

Fp operator+(const Fp& a, const Fp& b) {
  long p = Fp::common_modulus(a, b);
  if (p == 0) return Fp{};
  return Fp(a.v_ + b.v_, p);
}

Fp operator-(const Fp& a, const Fp& b) {
  long p = Fp::common_modulus(a, b);
  if (p == 0) return Fp{};
  return Fp(a.v_ - b.v_, p);
}

Fp operator*(const Fp& a, const Fp& b) {
  long p = Fp::common_modulus(a, b);
  if (p == 0) return Fp{};
  return Fp(a.v_ * b.v_, p);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
  // extended Euclid
  long r0 = p_, r1 = v_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("Fp: modulus not prime");
  return Fp(s0, p_);
}

bool operator==(const Fp& a, const Fp& b) {
  long p = Fp::common_modulus(a, b); // throws on genuine mismatch
  (void)p;
  return a.v_ == b.v_;
}

std::string Fp::to_string() const { return std::to_string(v_); }

} // namespace arithcx
