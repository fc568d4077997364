#include "colorlie/scalar.hpp"

#include <sstream>

#include "colorlie/error.hpp"

namespace colorlie {

UnitMonomial UnitMonomial::pow(long n) const {
  int s = (n % 2 == 0) ? 1 : sign;
  return {s, exp * n};
}

std::string UnitMonomial::str() const {
  std::string s = sign < 0 ? "-" : "";
  if (exp == 0) return s + "1";
  s += "q";
  if (exp != 1) s += "^" + std::to_string(exp);
  return s;
}

UnitMonomial UnitMonomial::parse(const std::string& text) {
  size_t i = 0;
  auto fail = [&]() -> UnitMonomial {
    throw ParseError("not a unit monomial: '" + text + "'");
  };
  UnitMonomial u = UnitMonomial::one();
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') u.sign = -1;
    ++i;
  }
  if (i >= text.size()) return fail();
  if (text[i] == '1') {
    ++i;
  } else if (text[i] == 'q') {
    ++i;
    u.exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i]))) return fail();
      long e = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        e = e * 10 + (text[i++] - '0');
        if (e > 10000) throw ParseError("unit monomial exponent out of range");
      }
      u.exp = neg ? -e : e;
    }
  } else {
    return fail();
  }
  if (i != text.size()) return fail();
  return u;
}

Scalar::Scalar(long num, long den) : num_(num), den_(den) {
  if (den == 0) throw ArithmeticError("scalar with zero denominator");
  reduce();
}

Scalar::Scalar(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den.is_zero()) throw ArithmeticError("scalar with zero denominator");
  reduce();
}

Scalar::Scalar(const UnitMonomial& u) {
  if (u.exp >= 0) {
    num_ = Poly::monomial(BigInt(u.sign), static_cast<int>(u.exp));
    den_ = Poly(1);
  } else {
    num_ = Poly(static_cast<long>(u.sign));
    den_ = Poly::q_power(static_cast<int>(-u.exp));
  }
}

Scalar Scalar::q_power(long k) { return Scalar(UnitMonomial::q(k)); }

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  BigInt ci;
  mpz_gcd(ci.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
  if (ci != 1) {
    Poly d((ci));
    num_ = num_.div_exact(d);
    den_ = den_.div_exact(d);
  }
  if (den_.lc() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw ArithmeticError("scalar division by zero");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar r(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

std::optional<UnitMonomial> Scalar::as_unit() const {
  if (is_zero()) return std::nullopt;
  int nd = num_.degree();
  int dd = den_.degree();
  for (int i = 0; i < nd; ++i)
    if (num_.coeff(i) != 0) return std::nullopt;
  for (int i = 0; i < dd; ++i)
    if (den_.coeff(i) != 0) return std::nullopt;
  // canonical form guarantees den is then exactly q^dd
  if (den_.lc() != 1) return std::nullopt;
  BigInt c = num_.lc();
  if (c != 1 && c != -1) return std::nullopt;
  return UnitMonomial{c == 1 ? 1 : -1, static_cast<long>(nd - dd)};
}

std::string Scalar::str() const {
  if (auto u = as_unit()) return u->str();
  auto is_sum = [](const Poly& p) {
    int terms = 0;
    for (int i = 0; i <= p.degree(); ++i)
      if (p.coeff(i) != 0) ++terms;
    return terms > 1;
  };
  if (den_.is_one()) return num_.str();
  std::string n = is_sum(num_) ? "(" + num_.str() + ")" : num_.str();
  // the denominator binds to '/' as one factor: only integers and monic
  // powers of q can go unparenthesized
  bool simple_den =
      den_.degree() == 0 || (!is_sum(den_) && den_.lc() == 1);
  std::string d = simple_den ? den_.str() : "(" + den_.str() + ")";
  return n + "/" + d;
}

}  // namespace colorlie
