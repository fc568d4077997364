#ifndef COLORLIE_POLY_HPP
#define COLORLIE_POLY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace colorlie {

using BigInt = mpz_class;

/// Dense polynomial in the formal parameter q with arbitrary-precision
/// integer coefficients. Invariant: the coefficient vector carries no
/// trailing zeros, so zero is the empty vector and degree() is its size - 1.
class Poly {
public:
  Poly() = default;
  explicit Poly(long value);
  explicit Poly(const BigInt& value);
  static Poly monomial(const BigInt& coeff, int deg);
  static Poly q_power(int deg) { return monomial(BigInt(1), deg); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coeff(int i) const;
  const BigInt& lc() const;  // leading coefficient; poly must be nonzero

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const = default;

  Poly mul_int(const BigInt& k) const;

  /// Content: gcd of the coefficients, always >= 0; content of 0 is 0.
  BigInt content() const;
  /// Content-free part with the sign of the leading coefficient preserved.
  Poly primitive_part() const;

  /// Exact division; caller guarantees divisibility (checked).
  Poly div_exact(const Poly& d) const;

  /// Polynomial gcd in Z[q] via the primitive pseudo-remainder sequence.
  /// Result is primitive with positive leading coefficient; gcd(0,0) = 0.
  static Poly gcd(Poly a, Poly b);

  std::string str() const;

private:
  void trim();
  std::vector<BigInt> c_;
};

}  // namespace colorlie

#endif
