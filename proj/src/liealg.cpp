#include "colorlie/liealg.hpp"

#include <algorithm>

#include "colorlie/error.hpp"

namespace colorlie {

ColorLieAlgebra::ColorLieAlgebra(AbelianGroup group, Bicharacter gamma,
                                 std::vector<BasisVector> basis)
    : group_(std::move(group)), gamma_(std::move(gamma)), basis_(std::move(basis)) {
  if (!(gamma_.group == group_))
    throw PreconditionError("bicharacter group does not match algebra group");
  for (const auto& b : basis_) check_conform(group_, b.degree);
  c_.assign(basis_.size(), std::vector<LieElement>(basis_.size()));
}

int ColorLieAlgebra::index_of(const std::string& name) const {
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  return -1;
}

UnitMonomial ColorLieAlgebra::gamma_gen(int i, int j) const {
  return gamma_.eval(degree(i), degree(j));
}

int ColorLieAlgebra::dim_even() const {
  int n = 0;
  for (int i = 0; i < dim(); ++i) n += parity(i) > 0;
  return n;
}

int ColorLieAlgebra::dim_odd() const { return dim() - dim_even(); }

void ColorLieAlgebra::set_bracket(int i, int j, LieElement value) {
  std::erase_if(value, [](const auto& kv) { return kv.second.is_zero(); });
  c_[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(value);
}

const LieElement& ColorLieAlgebra::bracket_basis(int i, int j) const {
  return c_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

LieElement lie_add(const LieElement& a, const LieElement& b) {
  LieElement r = a;
  for (const auto& [k, v] : b) {
    auto it = r.find(k);
    if (it == r.end()) {
      r[k] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

LieElement lie_scale(const Scalar& s, const LieElement& a) {
  LieElement r;
  if (s.is_zero()) return r;
  for (const auto& [k, v] : a) r[k] = s * v;
  return r;
}

LieElement ColorLieAlgebra::bracket(const LieElement& a, const LieElement& b) const {
  LieElement r;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b)
      r = lie_add(r, lie_scale(ci * cj, bracket_basis(i, j)));
  return r;
}

ValidationReport ColorLieAlgebra::verify_color_axioms() const {
  ValidationReport rep = gamma_.verify();
  int n = dim();
  // gradedness
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      GroupElement dij = group_op(group_, degree(i), degree(j));
      for (const auto& [k, v] : bracket_basis(i, j))
        if (!(degree(k) == dij))
          rep.add("gradedness", "<" + name(i) + "," + name(j) + "> hits " + name(k) +
                                    " of degree " + degree(k).str() + ", expected " + dij.str());
    }
  // gamma-skew-symmetry on basis pairs
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar g(gamma_gen(i, j));
      LieElement rhs = lie_scale(-g, bracket_basis(j, i));
      if (!(bracket_basis(i, j) == rhs))
        rep.add("skew-symmetry",
                "<" + name(i) + "," + name(j) + "> != -gamma*<" + name(j) + "," + name(i) + ">");
    }
  // gamma-Jacobi on all basis triples
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        LieElement x{{i, Scalar(1)}}, y{{j, Scalar(1)}}, z{{k, Scalar(1)}};
        LieElement sum = lie_scale(Scalar(gamma_.eval(degree(k), degree(i))),
                                   bracket(x, bracket(y, z)));
        sum = lie_add(sum, lie_scale(Scalar(gamma_.eval(degree(j), degree(k))),
                                     bracket(z, bracket(x, y))));
        sum = lie_add(sum, lie_scale(Scalar(gamma_.eval(degree(i), degree(j))),
                                     bracket(y, bracket(z, x))));
        if (!sum.empty()) {
          rep.add("jacobi", "gamma-Jacobi fails on (" + name(i) + "," + name(j) + "," +
                                name(k) + ")");
          return rep;  // first violating triple is enough
        }
      }
  return rep;
}

ColorLieAlgebra ColorLieAlgebra::twisted(const Cocycle& sigma) const {
  auto srep = sigma.verify();
  if (!srep.ok()) throw PreconditionError("invalid cocycle: " + srep.summary());
  if (!(sigma.group == group_)) throw PreconditionError("cocycle group mismatch");
  Bicharacter g2 = gamma_from_cocycle(gamma_, sigma);
  ColorLieAlgebra out(group_, g2, basis_);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      Scalar f(sigma.eval(degree(i), degree(j)));
      out.set_bracket(i, j, lie_scale(f, bracket_basis(i, j)));
    }
  return out;
}

bool ColorLieAlgebra::is_abelian() const {
  for (const auto& row : c_)
    for (const auto& b : row)
      if (!b.empty()) return false;
  return true;
}

bool ColorLieAlgebra::is_honest_lie() const {
  for (int i = 0; i < dim(); ++i) {
    if (parity(i) < 0) return false;
    for (int j = 0; j < dim(); ++j)
      if (!gamma_gen(i, j).is_one()) return false;
  }
  return true;
}

namespace {

GroupElement unit_vec(const AbelianGroup& G, int i) {
  GroupElement d = identity(G);
  d.v[static_cast<size_t>(i)] = 1;
  return d;
}

}  // namespace

ColorLieAlgebra abelian_plus(int n) {
  AbelianGroup G{n, {}};
  std::vector<BasisVector> basis;
  for (int i = 0; i < n; ++i) basis.push_back({"x" + std::to_string(i + 1), unit_vec(G, i)});
  return ColorLieAlgebra(G, trivial_bicharacter(G), basis);
}

ColorLieAlgebra abelian_minus(int n) {
  AbelianGroup G{n, {}};
  Bicharacter gamma = trivial_bicharacter(G);
  for (int i = 0; i < n; ++i) {
    gamma.m[static_cast<size_t>(i)][static_cast<size_t>(i)] = UnitMonomial::minus_one();
    for (int j = i + 1; j < n; ++j) {
      gamma.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = UnitMonomial::q(1);
      gamma.m[static_cast<size_t>(j)][static_cast<size_t>(i)] = UnitMonomial::q(-1);
    }
  }
  std::vector<BasisVector> basis;
  for (int i = 0; i < n; ++i) basis.push_back({"x" + std::to_string(i + 1), unit_vec(G, i)});
  return ColorLieAlgebra(G, gamma, basis);
}

namespace {

ColorLieAlgebra make_quantum_plane() {
  AbelianGroup G{2, {}};
  Bicharacter gamma = trivial_bicharacter(G);
  gamma.m[0][1] = UnitMonomial::q(1);
  gamma.m[1][0] = UnitMonomial::q(-1);
  std::vector<BasisVector> basis{{"x", unit_vec(G, 0)}, {"y", unit_vec(G, 1)}};
  return ColorLieAlgebra(G, gamma, basis);
}

ColorLieAlgebra make_exterior2() {
  AbelianGroup G{2, {}};
  Bicharacter gamma = trivial_bicharacter(G);
  gamma.m[0][0] = UnitMonomial::minus_one();
  gamma.m[1][1] = UnitMonomial::minus_one();
  gamma.m[0][1] = UnitMonomial::q(1);
  gamma.m[1][0] = UnitMonomial::q(-1);
  std::vector<BasisVector> basis{{"x", unit_vec(G, 0)}, {"y", unit_vec(G, 1)}};
  return ColorLieAlgebra(G, gamma, basis);
}

ColorLieAlgebra make_exterior1() {
  AbelianGroup G{1, {}};
  Bicharacter gamma = trivial_bicharacter(G);
  gamma.m[0][0] = UnitMonomial::minus_one();
  std::vector<BasisVector> basis{{"x", unit_vec(G, 0)}};
  return ColorLieAlgebra(G, gamma, basis);
}

ColorLieAlgebra make_heisenberg() {
  AbelianGroup G{2, {}};
  std::vector<BasisVector> basis{
      {"x", unit_vec(G, 0)}, {"y", unit_vec(G, 1)}, {"z", {{1, 1}}}};
  ColorLieAlgebra L(G, trivial_bicharacter(G), basis);
  L.set_bracket(0, 1, {{2, Scalar(1)}});
  L.set_bracket(1, 0, {{2, Scalar(-1)}});
  return L;
}

ColorLieAlgebra make_sl2() {
  AbelianGroup G{0, {}};
  std::vector<BasisVector> basis{{"e", identity(G)}, {"f", identity(G)}, {"h", identity(G)}};
  ColorLieAlgebra L(G, trivial_bicharacter(G), basis);
  // [e,f] = h, [e,h] = -2e, [f,h] = 2f
  L.set_bracket(0, 1, {{2, Scalar(1)}});
  L.set_bracket(1, 0, {{2, Scalar(-1)}});
  L.set_bracket(0, 2, {{0, Scalar(-2)}});
  L.set_bracket(2, 0, {{0, Scalar(2)}});
  L.set_bracket(1, 2, {{1, Scalar(2)}});
  L.set_bracket(2, 1, {{1, Scalar(-2)}});
  return L;
}

ColorLieAlgebra make_aff1() {
  AbelianGroup G{0, {}};
  std::vector<BasisVector> basis{{"x", identity(G)}, {"y", identity(G)}};
  ColorLieAlgebra L(G, trivial_bicharacter(G), basis);
  L.set_bracket(0, 1, {{1, Scalar(1)}});
  L.set_bracket(1, 0, {{1, Scalar(-1)}});
  return L;
}

ColorLieAlgebra make_kx() {
  AbelianGroup G{1, {}};
  std::vector<BasisVector> basis{{"x", unit_vec(G, 0)}};
  return ColorLieAlgebra(G, trivial_bicharacter(G), basis);
}

}  // namespace

ColorLieAlgebra builtin_algebra(const std::string& name) {
  if (name == "quantum_plane") return make_quantum_plane();
  if (name == "exterior1") return make_exterior1();
  if (name == "exterior2") return make_exterior2();
  if (name == "exterior3") return abelian_minus(3);
  if (name == "abelian2") return abelian_plus(2);
  if (name == "abelian3") return abelian_plus(3);
  if (name == "heisenberg") return make_heisenberg();
  if (name == "sl2") return make_sl2();
  if (name == "aff1") return make_aff1();
  if (name == "kx") return make_kx();
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw PreconditionError("bad size in algebra name '" + name + "'");
    }
    if (n < 0) throw PreconditionError("negative size in algebra name '" + name + "'");
    if (head == "abelian_plus") return abelian_plus(n);
    if (head == "abelian_minus") return abelian_minus(n);
  }
  throw PreconditionError("unknown built-in algebra '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"quantum_plane", "exterior1", "exterior2", "exterior3", "abelian2",
          "abelian3",      "heisenberg", "sl2",       "aff1",      "kx"};
}

}  // namespace colorlie
