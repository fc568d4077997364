#include "colorlie/grading.hpp"

#include <sstream>

#include "colorlie/error.hpp"

namespace colorlie {

std::string AbelianGroup::str() const {
  std::ostringstream out;
  out << "Z^" << free_rank;
  for (long m : torsion_orders) out << " x Z/" << m;
  return out.str();
}

std::string GroupElement::str() const {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

GroupElement identity(const AbelianGroup& G) {
  return {std::vector<long>(static_cast<size_t>(G.ngen()), 0)};
}

GroupElement reduce(const AbelianGroup& G, GroupElement g) {
  for (size_t i = 0; i < G.torsion_orders.size(); ++i) {
    long m = G.torsion_orders[i];
    long& x = g.v[static_cast<size_t>(G.free_rank) + i];
    x %= m;
    if (x < 0) x += m;
  }
  return g;
}

void check_conform(const AbelianGroup& G, const GroupElement& g) {
  if (static_cast<int>(g.v.size()) != G.ngen())
    throw PreconditionError("group element has " + std::to_string(g.v.size()) +
                            " coordinates, expected " + std::to_string(G.ngen()));
}

GroupElement group_op(const AbelianGroup& G, const GroupElement& a, const GroupElement& b) {
  check_conform(G, a);
  check_conform(G, b);
  GroupElement r = a;
  for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
  return reduce(G, r);
}

GroupElement group_neg(const AbelianGroup& G, const GroupElement& a) {
  check_conform(G, a);
  GroupElement r = a;
  for (auto& x : r.v) x = -x;
  return reduce(G, r);
}

GroupElement group_sub(const AbelianGroup& G, const GroupElement& a, const GroupElement& b) {
  return group_op(G, a, group_neg(G, b));
}

UnitMonomial GenMatrixChar::eval(const GroupElement& g, const GroupElement& h) const {
  check_conform(group, g);
  check_conform(group, h);
  UnitMonomial r = UnitMonomial::one();
  int n = group.ngen();
  for (int i = 0; i < n; ++i) {
    if (g.v[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (h.v[static_cast<size_t>(j)] == 0) continue;
      r = r * m[static_cast<size_t>(i)][static_cast<size_t>(j)].pow(
                  g.v[static_cast<size_t>(i)] * h.v[static_cast<size_t>(j)]);
    }
  }
  return r;
}

namespace {

// For generator i of torsion order m_i the value u must satisfy u^{m_i} = 1.
// Q(q) has no roots of unity beyond +-1, so that forces exp = 0 and, for odd
// m_i, sign = +1.
bool torsion_compatible(const UnitMonomial& u, long order) {
  if (u.exp != 0) return false;
  return u.sign == 1 || order % 2 == 0;
}

void check_square(const GenMatrixChar& c, ValidationReport& rep) {
  int n = c.group.ngen();
  if (static_cast<int>(c.m.size()) != n) {
    rep.add("shape", "matrix has " + std::to_string(c.m.size()) + " rows, expected " +
                         std::to_string(n));
    return;
  }
  for (const auto& row : c.m)
    if (static_cast<int>(row.size()) != n) {
      rep.add("shape", "non-square generator matrix");
      return;
    }
}

void check_torsion(const GenMatrixChar& c, ValidationReport& rep) {
  int n = c.group.ngen();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& u = c.m[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (i >= c.group.free_rank) {
        long order = c.group.torsion_orders[static_cast<size_t>(i - c.group.free_rank)];
        if (!torsion_compatible(u, order))
          rep.add("torsion", "value at (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") is " + u.str() + " but generator " + std::to_string(i) +
                                 " has order " + std::to_string(order));
      }
      if (j >= c.group.free_rank) {
        long order = c.group.torsion_orders[static_cast<size_t>(j - c.group.free_rank)];
        if (!torsion_compatible(u, order))
          rep.add("torsion", "value at (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") is " + u.str() + " but generator " + std::to_string(j) +
                                 " has order " + std::to_string(order));
      }
    }
}

}  // namespace

ValidationReport Bicharacter::verify() const {
  ValidationReport rep;
  check_square(*this, rep);
  if (!rep.ok()) return rep;
  int n = group.ngen();
  for (int i = 0; i < n; ++i) {
    const auto& d = m[static_cast<size_t>(i)][static_cast<size_t>(i)];
    if (!(d == UnitMonomial::one() || d == UnitMonomial::minus_one()))
      rep.add("diagonal", "gamma(e" + std::to_string(i) + ",e" + std::to_string(i) +
                              ") = " + d.str() + " is not +-1");
    for (int j = 0; j < n; ++j) {
      auto prod = m[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                  m[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (!prod.is_one())
        rep.add("skew-symmetry", "gamma(e" + std::to_string(i) + ",e" + std::to_string(j) +
                                     ")*gamma(e" + std::to_string(j) + ",e" +
                                     std::to_string(i) + ") = " + prod.str());
    }
  }
  check_torsion(*this, rep);
  return rep;
}

int Bicharacter::parity(const GroupElement& g) const {
  return eval(g, g).sign;
}

ValidationReport Cocycle::verify() const {
  ValidationReport rep;
  check_square(*this, rep);
  if (!rep.ok()) return rep;
  check_torsion(*this, rep);
  return rep;
}

Cocycle Cocycle::inverse() const {
  Cocycle r = *this;
  for (auto& row : r.m)
    for (auto& u : row) u = u.inverse();
  return r;
}

namespace {

GenMatrixChar ones(const AbelianGroup& G) {
  GenMatrixChar c;
  c.group = G;
  size_t n = static_cast<size_t>(G.ngen());
  c.m.assign(n, std::vector<UnitMonomial>(n, UnitMonomial::one()));
  return c;
}

}  // namespace

Bicharacter trivial_bicharacter(const AbelianGroup& G) {
  Bicharacter b;
  static_cast<GenMatrixChar&>(b) = ones(G);
  return b;
}

Cocycle trivial_cocycle(const AbelianGroup& G) {
  Cocycle c;
  static_cast<GenMatrixChar&>(c) = ones(G);
  return c;
}

Bicharacter gamma_from_cocycle(const Bicharacter& gamma0, const Cocycle& sigma) {
  if (!(gamma0.group == sigma.group))
    throw PreconditionError("bicharacter and cocycle live on different groups");
  Bicharacter r;
  r.group = gamma0.group;
  size_t n = static_cast<size_t>(r.group.ngen());
  r.m.assign(n, std::vector<UnitMonomial>(n, UnitMonomial::one()));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      r.m[i][j] = gamma0.m[i][j] * sigma.m[i][j] * sigma.m[j][i].inverse();
  auto rep = r.verify();
  if (!rep.ok())
    throw PreconditionError("twisted bicharacter is invalid: " + rep.summary());
  return r;
}

SplitResult split_bicharacter(const Bicharacter& gamma) {
  if (!gamma.group.torsion_orders.empty())
    throw UnsupportedError(
        "splitting a bicharacter over a torsion group is not supported; "
        "no construction is available");
  auto rep = gamma.verify();
  if (!rep.ok()) throw PreconditionError("cannot split an invalid bicharacter: " + rep.summary());
  size_t n = static_cast<size_t>(gamma.group.ngen());
  std::vector<int> odd(n, 0);
  for (size_t i = 0; i < n; ++i) odd[i] = gamma.m[i][i] == UnitMonomial::minus_one();

  SplitResult out;
  out.gamma0.group = gamma.group;
  out.sigma.group = gamma.group;
  out.gamma0.m.assign(n, std::vector<UnitMonomial>(n, UnitMonomial::one()));
  out.sigma.m.assign(n, std::vector<UnitMonomial>(n, UnitMonomial::one()));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (odd[i] && odd[j]) out.gamma0.m[i][j] = UnitMonomial::minus_one();
      if (i < j) out.sigma.m[i][j] = gamma.m[i][j] * out.gamma0.m[i][j].inverse();
    }
  return out;
}

}  // namespace colorlie
