#pragma once

#include <string>

namespace arithcx {

// Prime-field element carrying its modulus.  A default-constructed value is
// an unbound zero that adopts the modulus of the other operand; this lets
// generic matrix code use T{} as the additive identity without threading a
// modulus through every template.
class Fp {
public:
  Fp() = default;
  Fp(long value, long p);

  long value() const { return v_; }
  long modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const;
  Fp inverse() const;
  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  friend bool operator==(const Fp& a, const Fp& b);

  std::string to_string() const;

private:
  static long common_modulus(const Fp& a, const Fp& b);
  long v_ = 0;
  long p_ = 0; // 0 = unbound zero
};

} // namespace arithcx
