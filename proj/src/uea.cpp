#include "colorlie/uea.hpp"

#include <algorithm>
#include <sstream>

#include "colorlie/error.hpp"

namespace colorlie {

void UEAElement::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

UEAElement UEAElement::operator+(const UEAElement& o) const {
  UEAElement r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

UEAElement UEAElement::operator-(const UEAElement& o) const {
  UEAElement r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, -c);
  return r;
}

UEAElement UEAElement::scaled(const Scalar& s) const {
  UEAElement r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms) r.terms.emplace(m, s * c);
  return r;
}

Presentation::Presentation(ColorLieAlgebra L) : L_(std::move(L)) {}

UEAElement Presentation::one() const {
  UEAElement r;
  r.terms.emplace(Monomial(static_cast<size_t>(ngen()), 0), Scalar(1));
  return r;
}

UEAElement Presentation::gen(int i) const {
  Monomial m(static_cast<size_t>(ngen()), 0);
  m[static_cast<size_t>(i)] = 1;
  return from_monomial(m);
}

UEAElement Presentation::from_monomial(const Monomial& m, const Scalar& c) const {
  UEAElement r;
  r.add_term(m, c);
  return r;
}

namespace {

std::vector<int> expand_monomial(const Monomial& m) {
  std::vector<int> w;
  for (size_t i = 0; i < m.size(); ++i)
    for (int k = 0; k < m[i]; ++k) w.push_back(static_cast<int>(i));
  return w;
}

Monomial word_to_monomial(const std::vector<int>& w, int n) {
  Monomial m(static_cast<size_t>(n), 0);
  for (int g : w) ++m[static_cast<size_t>(g)];
  return m;
}

}  // namespace

// One rewrite step at position p, or nullopt when neither rule applies.
std::optional<std::vector<Word>> Presentation::rewrite_at(const Word& w, size_t p) const {
  int a = w.gens[p], b = w.gens[p + 1];
  std::vector<Word> out;
  if (a > b) {
    // x_a x_b -> gamma(a,b) x_b x_a + <x_a, x_b>
    Word swapped = w;
    std::swap(swapped.gens[p], swapped.gens[p + 1]);
    swapped.coeff = w.coeff * Scalar(L_.gamma_gen(a, b));
    out.push_back(std::move(swapped));
    for (const auto& [k, c] : L_.bracket_basis(a, b)) {
      Word t;
      t.coeff = w.coeff * c;
      t.gens.assign(w.gens.begin(), w.gens.begin() + static_cast<long>(p));
      t.gens.push_back(k);
      t.gens.insert(t.gens.end(), w.gens.begin() + static_cast<long>(p) + 2, w.gens.end());
      out.push_back(std::move(t));
    }
    return out;
  }
  if (a == b && L_.parity(a) < 0) {
    // odd square: x_a^2 -> (1/2)<x_a, x_a>
    for (const auto& [k, c] : L_.bracket_basis(a, a)) {
      Word t;
      t.coeff = w.coeff * c * Scalar(1, 2);
      t.gens.assign(w.gens.begin(), w.gens.begin() + static_cast<long>(p));
      t.gens.push_back(k);
      t.gens.insert(t.gens.end(), w.gens.begin() + static_cast<long>(p) + 2, w.gens.end());
      out.push_back(std::move(t));
    }
    return out;  // possibly empty: square rewrites to zero
  }
  return std::nullopt;
}

UEAElement Presentation::normalize_worklist(std::vector<Word> work) const {
  UEAElement result;
  while (!work.empty()) {
    Word w = std::move(work.back());
    work.pop_back();
    if (w.coeff.is_zero()) continue;
    bool rewritten = false;
    for (size_t p = 0; p + 1 < w.gens.size(); ++p) {
      if (auto terms = rewrite_at(w, p)) {
        for (auto& t : *terms) work.push_back(std::move(t));
        rewritten = true;
        break;
      }
    }
    if (!rewritten) result.add_term(word_to_monomial(w.gens, ngen()), w.coeff);
  }
  return result;
}

UEAElement Presentation::normalize(const Word& w) const { return normalize_worklist({w}); }

UEAElement Presentation::normalize(const std::vector<Word>& ws) const {
  return normalize_worklist(ws);
}

std::vector<UEAElement> Presentation::normalize_batch(const std::vector<Word>& ws) const {
  std::vector<UEAElement> out(ws.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long i = 0; i < static_cast<long>(ws.size()); ++i)
    out[static_cast<size_t>(i)] = normalize(ws[static_cast<size_t>(i)]);
  return out;
}

UEAElement Presentation::multiply(const UEAElement& u, const UEAElement& v) const {
  std::vector<Word> work;
  for (const auto& [mu, cu] : u.terms)
    for (const auto& [mv, cv] : v.terms) {
      Word w;
      w.coeff = cu * cv;
      w.gens = expand_monomial(mu);
      auto tail = expand_monomial(mv);
      w.gens.insert(w.gens.end(), tail.begin(), tail.end());
      work.push_back(std::move(w));
    }
  return normalize_worklist(std::move(work));
}

UEAElement Presentation::twisted_multiply(const SigmaFn& sigma, const UEAElement& u,
                                          const UEAElement& v) const {
  UEAElement r;
  for (const auto& [du, pu] : homogeneous_parts(u))
    for (const auto& [dv, pv] : homogeneous_parts(v)) {
      Scalar f{Scalar(sigma(du, dv))};
      UEAElement prod = multiply(pu, pv);
      for (const auto& [m, c] : prod.terms) r.add_term(m, f * c);
    }
  return r;
}

UEAElement Presentation::twisted_multiply(const Cocycle& sigma, const UEAElement& u,
                                          const UEAElement& v) const {
  return twisted_multiply(
      [&sigma](const GroupElement& g, const GroupElement& h) { return sigma.eval(g, h); }, u, v);
}

Scalar Presentation::twist_factor(const Cocycle& sigma, const Monomial& m) const {
  Scalar f(1);
  GroupElement acc = identity(L_.group());
  bool first = true;
  for (int g : expand_monomial(m)) {
    if (!first) f *= Scalar(sigma.eval(acc, L_.degree(g)));
    acc = group_op(L_.group(), acc, L_.degree(g));
    first = false;
  }
  return f;
}

ValidationReport Presentation::consistency_check() const {
  ValidationReport rep;
  int n = ngen();
  for (int k = 0; k < n; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i) {
        Word w{Scalar(1), {k, j, i}};
        // resolve the left pair first, then fully normalize
        UEAElement left;
        if (auto terms = rewrite_at(w, 0))
          left = normalize(*terms);
        else
          left = normalize(w);
        UEAElement right;
        if (auto terms = rewrite_at(w, 1))
          right = normalize(*terms);
        else
          right = normalize(w);
        if (!(left == right))
          rep.add("confluence", "overlap (" + L_.name(k) + "," + L_.name(j) + "," + L_.name(i) +
                                    ") does not resolve");
      }
  return rep;
}

GroupElement Presentation::monomial_degree(const Monomial& m) const {
  GroupElement d = identity(L_.group());
  for (size_t i = 0; i < m.size(); ++i)
    for (int k = 0; k < m[i]; ++k) d = group_op(L_.group(), d, L_.degree(static_cast<int>(i)));
  return d;
}

int Presentation::monomial_weight(const Monomial& m) {
  int w = 0;
  for (int e : m) w += e;
  return w;
}

int Presentation::element_weight(const UEAElement& u) const {
  int w = -1;
  for (const auto& [m, c] : u.terms) w = std::max(w, monomial_weight(m));
  return w;
}

std::optional<GroupElement> Presentation::homogeneous_degree(const UEAElement& u) const {
  std::optional<GroupElement> d;
  for (const auto& [m, c] : u.terms) {
    GroupElement dm = monomial_degree(m);
    if (!d)
      d = dm;
    else if (!(*d == dm))
      return std::nullopt;
  }
  return d;
}

std::map<GroupElement, UEAElement> Presentation::homogeneous_parts(const UEAElement& u) const {
  std::map<GroupElement, UEAElement> parts;
  for (const auto& [m, c] : u.terms) parts[monomial_degree(m)].add_term(m, c);
  return parts;
}

UEAElement Presentation::gr_project(const UEAElement& u, int m) const {
  int top = element_weight(u);
  if (top > m)
    throw PreconditionError("gr projection to filtration degree " + std::to_string(m) +
                            " but element has degree " + std::to_string(top));
  UEAElement r;
  for (const auto& [mono, c] : u.terms)
    if (monomial_weight(mono) == m) r.terms.emplace(mono, c);
  return r;
}

UEAElement Presentation::gr_multiply(const UEAElement& u, const UEAElement& v) const {
  auto pure_weight = [this](const UEAElement& x) {
    int w = -1;
    for (const auto& [m, c] : x.terms) {
      int wm = monomial_weight(m);
      if (w < 0)
        w = wm;
      else if (w != wm)
        throw PreconditionError("gr product needs weight-homogeneous inputs");
    }
    return w;
  };
  int wu = pure_weight(u), wv = pure_weight(v);
  if (wu < 0 || wv < 0) return UEAElement{};
  return gr_project(multiply(u, v), wu + wv);
}

std::string Presentation::term_str(const Monomial& m) const {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += L_.name(static_cast<int>(i));
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<std::pair<Monomial, Scalar>> display_order(const UEAElement& u) {
  std::vector<std::pair<Monomial, Scalar>> ts(u.terms.begin(), u.terms.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int wa = Presentation::monomial_weight(a.first);
    int wb = Presentation::monomial_weight(b.first);
    if (wa != wb) return wa > wb;
    return a.first > b.first;
  });
  return ts;
}

std::string Presentation::element_str(const UEAElement& u) const {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : display_order(u)) {
    std::string mono = term_str(m);
    std::string coeff = c.str();
    std::string piece;
    if (mono == "1")
      piece = coeff;
    else if (coeff == "1")
      piece = mono;
    else if (coeff == "-1")
      piece = "-" + mono;
    else
      piece = coeff + " * " + mono;
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

TensorElement tensor_multiply(const Presentation& A, const Presentation& B,
                              const Bicharacter& gamma, const TensorElement& s,
                              const TensorElement& t) {
  if (!(A.algebra().group() == B.algebra().group()) || !(gamma.group == A.algebra().group()))
    throw PreconditionError("tensor factors must share the grading group of gamma");
  TensorElement r;
  for (const auto& [ms, cs] : s)
    for (const auto& [mt, ct] : t) {
      const auto& [a, b] = ms;
      const auto& [a2, b2] = mt;
      Scalar f = Scalar(gamma.eval(B.monomial_degree(b), A.monomial_degree(a2))) * cs * ct;
      if (f.is_zero()) continue;
      UEAElement aa = A.multiply(A.from_monomial(a), A.from_monomial(a2));
      UEAElement bb = B.multiply(B.from_monomial(b), B.from_monomial(b2));
      for (const auto& [ma, ca] : aa.terms)
        for (const auto& [mb, cb] : bb.terms) {
          auto key = std::make_pair(ma, mb);
          auto it = r.find(key);
          Scalar add = f * ca * cb;
          if (it == r.end()) {
            if (!add.is_zero()) r.emplace(key, add);
          } else {
            it->second += add;
            if (it->second.is_zero()) r.erase(it);
          }
        }
    }
  return r;
}

GrAlgebra GrAlgebra::of(const ColorLieAlgebra& L) {
  GrAlgebra g;
  g.group = L.group();
  g.gamma = L.gamma();
  for (int i = 0; i < L.dim(); ++i) {
    g.names.push_back(L.name(i));
    g.degree.push_back(L.degree(i));
    g.parity.push_back(L.parity(i));
  }
  return g;
}

int GrAlgebra::dim_even() const {
  int n = 0;
  for (int p : parity) n += p > 0;
  return n;
}

int GrAlgebra::dim_odd() const { return ngen() - dim_even(); }

std::optional<std::pair<Scalar, Monomial>> GrAlgebra::mul_mono(const Monomial& a,
                                                               const Monomial& b) const {
  size_t n = static_cast<size_t>(ngen());
  UnitMonomial f = UnitMonomial::one();
  Monomial m(n, 0);
  for (size_t i = 0; i < n; ++i) {
    m[i] = a[i] + b[i];
    if (parity[i] < 0 && m[i] > 1) return std::nullopt;
  }
  // every x_i from b passes every x_j of a with j > i
  for (size_t j = 0; j < n; ++j) {
    if (a[j] == 0) continue;
    for (size_t i = 0; i < j; ++i) {
      if (b[i] == 0) continue;
      f = f * gamma.eval(degree[j], degree[i]).pow(static_cast<long>(a[j]) * b[i]);
    }
  }
  return std::make_pair(Scalar(f), std::move(m));
}

namespace {
void enumerate(const GrAlgebra& g, int gen, int left, Monomial& cur,
               std::vector<Monomial>& out) {
  if (gen == g.ngen()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  int cap = g.parity[static_cast<size_t>(gen)] < 0 ? std::min(1, left) : left;
  for (int e = 0; e <= cap; ++e) {
    cur[static_cast<size_t>(gen)] = e;
    enumerate(g, gen + 1, left - e, cur, out);
  }
  cur[static_cast<size_t>(gen)] = 0;
}
}  // namespace

std::vector<Monomial> GrAlgebra::monomials_of_weight(int w) const {
  std::vector<Monomial> out;
  Monomial cur(static_cast<size_t>(ngen()), 0);
  enumerate(*this, 0, w, cur, out);
  return out;
}

long GrAlgebra::dim_weight(int w) const {
  return static_cast<long>(monomials_of_weight(w).size());
}

std::string GrAlgebra::mono_str(const Monomial& m) const {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace colorlie
