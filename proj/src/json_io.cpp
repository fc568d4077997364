#include "colorlie/json_io.hpp"

#include <fstream>
#include <sstream>

#include "colorlie/error.hpp"
#include "colorlie/exprparse.hpp"

namespace colorlie {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

long int_field(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::string str_field(const json& j, const char* what) {
  if (!j.is_string()) throw SchemaError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

AbelianGroup parse_group(const json& j) {
  if (!j.is_object()) throw SchemaError("group must be an object");
  AbelianGroup g;
  g.free_rank = static_cast<int>(int_field(field(j, "free_rank"), "group.free_rank"));
  if (g.free_rank < 0) throw SchemaError("group.free_rank must be >= 0");
  if (auto it = j.find("torsion_orders"); it != j.end()) {
    if (!it->is_array()) throw SchemaError("group.torsion_orders must be an array");
    for (const auto& t : *it) {
      long m = int_field(t, "torsion order");
      if (m < 2 || m > 1000000) throw SchemaError("torsion orders must be in [2, 10^6]");
      g.torsion_orders.push_back(m);
    }
  }
  if (g.ngen() > 64) throw SchemaError("too many group generators");
  return g;
}

std::vector<std::vector<UnitMonomial>> parse_char_matrix(const json& j, const AbelianGroup& g,
                                                         const char* what) {
  if (!j.is_object()) throw SchemaError(std::string(what) + " must be an object");
  const json& mj = field(j, "matrix");
  if (!mj.is_array()) throw SchemaError(std::string(what) + ".matrix must be an array");
  size_t n = static_cast<size_t>(g.ngen());
  if (mj.size() != n)
    throw SchemaError(std::string(what) + ".matrix must have " + std::to_string(n) + " rows");
  std::vector<std::vector<UnitMonomial>> m;
  for (const auto& row : mj) {
    if (!row.is_array() || row.size() != n)
      throw SchemaError(std::string(what) + ".matrix rows must have " + std::to_string(n) +
                        " entries");
    std::vector<UnitMonomial> r;
    for (const auto& e : row) r.push_back(UnitMonomial::parse(str_field(e, "matrix entry")));
    m.push_back(std::move(r));
  }
  return m;
}

GroupElement parse_degree(const json& j, const AbelianGroup& g) {
  if (!j.is_array()) throw SchemaError("degree must be an array of integers");
  if (static_cast<int>(j.size()) != g.ngen())
    throw SchemaError("degree has " + std::to_string(j.size()) + " coordinates, expected " +
                      std::to_string(g.ngen()));
  GroupElement d;
  for (const auto& x : j) {
    long v = int_field(x, "degree coordinate");
    if (v < -100000 || v > 100000) throw SchemaError("degree coordinate out of range");
    d.v.push_back(v);
  }
  return reduce(g, d);
}

bool valid_name(const std::string& s) {
  if (s.empty() || s == "q") return false;
  if (!isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

int resolve_generator(const json& j, const ColorLieAlgebra& L, const char* what) {
  if (j.is_number_integer()) {
    long idx = j.get<long>();
    if (idx < 0 || idx >= L.dim())
      throw SchemaError(std::string(what) + " index " + std::to_string(idx) + " out of range");
    return static_cast<int>(idx);
  }
  if (j.is_string()) {
    int idx = L.index_of(j.get<std::string>());
    if (idx < 0)
      throw SchemaError(std::string(what) + " '" + j.get<std::string>() + "' is not a generator");
    return idx;
  }
  throw SchemaError(std::string(what) + " must be a generator name or index");
}

Scalar parse_scalar_field(const json& j, const char* what) {
  try {
    return parse_scalar(str_field(j, what));
  } catch (const ParseError& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

GradedModule parse_module(const json& j, const ColorLieAlgebra& L) {
  if (!j.is_object()) throw SchemaError("module must be an object");
  GradedModule M;
  const json& bj = field(j, "basis");
  if (!bj.is_array() || bj.empty()) throw SchemaError("module.basis must be a nonempty array");
  for (const auto& b : bj) {
    std::string name = str_field(field(b, "name"), "module basis name");
    M.basis.push_back({name, parse_degree(field(b, "degree"), L.group())});
  }
  int d = M.dim();
  const json& aj = field(j, "actions");
  if (!aj.is_object()) throw SchemaError("module.actions must be an object");
  M.actions.assign(static_cast<size_t>(L.dim()), Mat(d, d));
  std::vector<bool> seen(static_cast<size_t>(L.dim()), false);
  for (auto it = aj.begin(); it != aj.end(); ++it) {
    int g = L.index_of(it.key());
    if (g < 0) throw SchemaError("action for unknown generator '" + it.key() + "'");
    seen[static_cast<size_t>(g)] = true;
    const json& rows = *it;
    if (!rows.is_array() || static_cast<int>(rows.size()) != d)
      throw SchemaError("action of '" + it.key() + "' must be a " + std::to_string(d) + "x" +
                        std::to_string(d) + " matrix");
    for (int r = 0; r < d; ++r) {
      const json& row = rows[static_cast<size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        throw SchemaError("action of '" + it.key() + "' must be square");
      for (int c = 0; c < d; ++c)
        M.actions[static_cast<size_t>(g)].at(r, c) =
            parse_scalar_field(row[static_cast<size_t>(c)], "action entry");
    }
  }
  for (int g = 0; g < L.dim(); ++g)
    if (!seen[static_cast<size_t>(g)])
      throw SchemaError("module is missing the action of generator '" + L.name(g) + "'");
  return M;
}

}  // namespace

AlgebraFile parse_algebra_json(const json& j) {
  if (!j.is_object()) throw SchemaError("algebra file must be a JSON object");
  AbelianGroup G = parse_group(field(j, "group"));
  Bicharacter gamma;
  gamma.group = G;
  gamma.m = parse_char_matrix(field(j, "gamma"), G, "gamma");

  const json& bj = field(j, "basis");
  if (!bj.is_array()) throw SchemaError("basis must be an array");
  std::vector<BasisVector> basis;
  for (const auto& b : bj) {
    std::string name = str_field(field(b, "name"), "basis name");
    if (!valid_name(name)) throw SchemaError("invalid generator name '" + name + "'");
    basis.push_back({name, parse_degree(field(b, "degree"), G)});
  }
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t k = i + 1; k < basis.size(); ++k)
      if (basis[i].name == basis[k].name)
        throw SchemaError("duplicate generator name '" + basis[i].name + "'");

  AlgebraFile out{ColorLieAlgebra(G, gamma, basis), std::nullopt, {}};
  ColorLieAlgebra& L = out.algebra;

  std::vector<std::vector<bool>> given(basis.size(), std::vector<bool>(basis.size(), false));
  if (auto it = j.find("brackets"); it != j.end()) {
    if (!it->is_array()) throw SchemaError("brackets must be an array");
    for (const auto& e : *it) {
      int i = resolve_generator(field(e, "i"), L, "bracket i");
      int jj = resolve_generator(field(e, "j"), L, "bracket j");
      if (given[static_cast<size_t>(i)][static_cast<size_t>(jj)])
        throw SchemaError("duplicate bracket entry for (" + L.name(i) + "," + L.name(jj) + ")");
      given[static_cast<size_t>(i)][static_cast<size_t>(jj)] = true;
      const json& res = field(e, "result");
      if (!res.is_array()) throw SchemaError("bracket result must be an array");
      LieElement val;
      for (const auto& term : res) {
        int k = resolve_generator(field(term, "k"), L, "bracket result k");
        Scalar c = parse_scalar_field(field(term, "coeff"), "bracket coefficient");
        if (!c.is_zero()) val[k] = (val.count(k) ? val[k] + c : c);
      }
      L.set_bracket(i, jj, std::move(val));
    }
  }
  // skew-symmetric completion of omitted pairs
  for (int i = 0; i < L.dim(); ++i)
    for (int jj = 0; jj < L.dim(); ++jj) {
      if (given[static_cast<size_t>(i)][static_cast<size_t>(jj)] ||
          !given[static_cast<size_t>(jj)][static_cast<size_t>(i)])
        continue;
      Scalar g{Scalar(L.gamma_gen(i, jj))};
      L.set_bracket(i, jj, lie_scale(-g, L.bracket_basis(jj, i)));
    }

  if (auto it = j.find("sigma"); it != j.end()) {
    Cocycle s;
    s.group = G;
    s.m = parse_char_matrix(*it, G, "sigma");
    auto rep = s.verify();
    if (!rep.ok()) throw SchemaError("sigma: " + rep.summary());
    out.sigma = std::move(s);
  }

  if (auto it = j.find("modules"); it != j.end()) {
    if (!it->is_object()) throw SchemaError("modules must be an object");
    for (auto m = it->begin(); m != it->end(); ++m)
      out.modules.emplace(m.key(), parse_module(*m, L));
  }
  return out;
}

AlgebraFile load_algebra_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_algebra_json(j);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed algebra file: ") + e.what());
  }
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_algebra_string(buf.str());
}

GradedModule parse_module_json(const json& j, const ColorLieAlgebra& L) {
  try {
    return parse_module(j, L);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed module: ") + e.what());
  }
}

GradedModule load_module_file(const std::string& path, const ColorLieAlgebra& L) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_module_json(j, L);
}

json group_to_json(const AbelianGroup& g) {
  return json{{"free_rank", g.free_rank}, {"torsion_orders", g.torsion_orders}};
}

json char_matrix_to_json(const GenMatrixChar& c) {
  json rows = json::array();
  for (const auto& row : c.m) {
    json r = json::array();
    for (const auto& u : row) r.push_back(u.str());
    rows.push_back(std::move(r));
  }
  return json{{"matrix", std::move(rows)}};
}

json algebra_to_json(const AlgebraFile& f) {
  const ColorLieAlgebra& L = f.algebra;
  json j;
  j["group"] = group_to_json(L.group());
  j["gamma"] = char_matrix_to_json(L.gamma());
  json basis = json::array();
  for (int i = 0; i < L.dim(); ++i)
    basis.push_back(json{{"name", L.name(i)}, {"degree", L.degree(i).v}});
  j["basis"] = std::move(basis);
  json brackets = json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int k = i; k < L.dim(); ++k) {
      const LieElement& b = L.bracket_basis(i, k);
      if (b.empty()) continue;
      json result = json::array();
      for (const auto& [t, c] : b)
        result.push_back(json{{"k", L.name(t)}, {"coeff", c.str()}});
      brackets.push_back(json{{"i", L.name(i)}, {"j", L.name(k)}, {"result", std::move(result)}});
    }
  if (!brackets.empty()) j["brackets"] = std::move(brackets);
  if (f.sigma) j["sigma"] = char_matrix_to_json(*f.sigma);
  if (!f.modules.empty()) {
    json mods;
    for (const auto& [name, M] : f.modules) {
      json mb = json::array();
      for (const auto& b : M.basis) mb.push_back(json{{"name", b.name}, {"degree", b.degree.v}});
      json acts;
      for (int g = 0; g < L.dim(); ++g) {
        json rows = json::array();
        for (int r = 0; r < M.dim(); ++r) {
          json row = json::array();
          for (int c = 0; c < M.dim(); ++c)
            row.push_back(M.actions[static_cast<size_t>(g)].at(r, c).str());
          rows.push_back(std::move(row));
        }
        acts[L.name(g)] = std::move(rows);
      }
      mods[name] = json{{"basis", std::move(mb)}, {"actions", std::move(acts)}};
    }
    j["modules"] = std::move(mods);
  }
  return j;
}

}  // namespace colorlie
