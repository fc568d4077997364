#include "colorlie/poly.hpp"

#include <cassert>
#include <sstream>

#include "colorlie/error.hpp"

namespace colorlie {

Poly::Poly(long value) {
  if (value != 0) c_.push_back(BigInt(value));
}

Poly::Poly(const BigInt& value) {
  if (value != 0) c_.push_back(value);
}

Poly Poly::monomial(const BigInt& coeff, int deg) {
  Poly p;
  if (coeff == 0) return p;
  if (deg < 0) throw ArithmeticError("monomial degree must be nonnegative");
  if (deg > 1000000) throw ArithmeticError("polynomial degree out of range");
  p.c_.assign(static_cast<size_t>(deg) + 1, BigInt(0));
  p.c_.back() = coeff;
  return p;
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

BigInt Poly::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= c_.size()) return BigInt(0);
  return c_[static_cast<size_t>(i)];
}

const BigInt& Poly::lc() const {
  assert(!c_.empty());
  return c_.back();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

Poly Poly::mul_int(const BigInt& k) const {
  Poly r;
  if (k == 0) return r;
  r.c_ = c_;
  for (auto& x : r.c_) x *= k;
  return r;
}

BigInt Poly::content() const {
  BigInt g(0);
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return Poly();
  BigInt g = content();
  Poly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

Poly Poly::div_exact(const Poly& d) const {
  if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
  Poly rem = *this;
  Poly quot;
  if (rem.is_zero()) return quot;
  int dq = rem.degree() - d.degree();
  if (dq < 0) throw ArithmeticError("inexact polynomial division");
  quot.c_.assign(static_cast<size_t>(dq) + 1, BigInt(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    BigInt t;
    if (!mpz_divisible_p(rem.lc().get_mpz_t(), d.lc().get_mpz_t()))
      throw ArithmeticError("inexact polynomial division");
    mpz_divexact(t.get_mpz_t(), rem.lc().get_mpz_t(), d.lc().get_mpz_t());
    int shift = rem.degree() - d.degree();
    quot.c_[static_cast<size_t>(shift)] = t;
    rem = rem - d.mul_int(t) * Poly::q_power(shift);
  }
  if (!rem.is_zero()) throw ArithmeticError("inexact polynomial division");
  return quot;
}

namespace {

// Pseudo-remainder: lc(b)^k * a = q*b + r for some k <= deg a - deg b + 1.
Poly pseudo_rem(Poly a, const Poly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    a = a.mul_int(b.lc()) - b.mul_int(a.lc()) * Poly::q_power(shift);
  }
  return a;
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
  auto norm = [](Poly p) {
    if (p.is_zero()) return p;
    p = p.primitive_part();
    if (p.lc() < 0) p = -p;
    return p;
  };
  a = norm(a);
  b = norm(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = norm(pseudo_rem(a, b));
    a = b;
    b = r;
  }
  return a;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    BigInt c = coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? "-" : "+");
    }
    BigInt a = abs(c);
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << "q";
      if (i != 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace colorlie
