#ifndef COLORLIE_SCALAR_HPP
#define COLORLIE_SCALAR_HPP

#include <optional>
#include <string>

#include "colorlie/poly.hpp"

namespace colorlie {

/// A unit of the form sign * q^exp. Closed under product, inverse and
/// integer powers; these are the only values characters are allowed to take.
struct UnitMonomial {
  int sign = 1;   // +1 or -1
  long exp = 0;

  static UnitMonomial one() { return {1, 0}; }
  static UnitMonomial minus_one() { return {-1, 0}; }
  static UnitMonomial q(long k = 1) { return {1, k}; }

  UnitMonomial operator*(const UnitMonomial& o) const { return {sign * o.sign, exp + o.exp}; }
  UnitMonomial inverse() const { return {sign, -exp}; }
  UnitMonomial pow(long n) const;
  bool operator==(const UnitMonomial& o) const = default;
  bool is_one() const { return sign == 1 && exp == 0; }

  std::string str() const;
  /// Parses "1", "-1", "q", "-q^-2", "q^3", ...
  static UnitMonomial parse(const std::string& text);
};

/// Element of the coefficient field Q(q): a ratio of integer polynomials in
/// canonical form. Canonical means gcd(num, den) = 1 (including integer
/// content), den has positive leading coefficient, and zero is 0/1; equality
/// of values is then equality of representations.
class Scalar {
public:
  Scalar() : num_(), den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Scalar(long num, long den);
  explicit Scalar(const Poly& num) : num_(num), den_(1) {}
  Scalar(const Poly& num, const Poly& den);
  explicit Scalar(const UnitMonomial& u);
  static Scalar q_power(long k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const = default;

  Scalar inverse() const;
  Scalar pow(long n) const;

  /// Recognizes +-q^k values; empty when the scalar is not a unit monomial.
  std::optional<UnitMonomial> as_unit() const;

  std::string str() const;

private:
  void reduce();
  Poly num_;
  Poly den_;
};

}  // namespace colorlie

#endif
