#include "gradalg/io.hpp"

#include <fstream>
#include <limits>
#include <regex>
#include <set>

#include "gradalg/errors.hpp"

namespace gradalg::io {

namespace {

std::string key_path(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string idx_path(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "object expected");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(key_path(path, key), "missing");
  return *it;
}

long long as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "integer expected");
  return j.get<long long>();
}

BigInt as_bigint(const json& j, const std::string& path) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    static const std::regex re("-?[0-9]+");
    const auto s = j.get<std::string>();
    if (std::regex_match(s, re)) return BigInt(s);
  }
  throw SchemaError(path, "integer expected");
}

json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

void check_order(long long n, const std::string& path, const ParseOptions& opt) {
  if (n < 1) throw SchemaError(path, "root order must be positive");
  if (n > opt.max_root_order) throw SchemaError(path, "root order " + std::to_string(n) + " exceeds the limit");
}

int grade_key(const std::string& s, const FinAbGroup& g, const std::string& path) {
  static const std::regex re("[0-9]+");
  if (!std::regex_match(s, re)) throw SchemaError(path, "grade index expected");
  const int v = std::stoi(s);
  if (v >= g.size()) throw SchemaError(path, "grade out of range");
  return v;
}

std::vector<std::size_t> indices_of(const HostObject& x, int grade) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < x.dim; ++t)
    if (x.grades[t] == grade) out.push_back(t);
  return out;
}

Matrix parse_dense(const json& j, std::size_t rows, std::size_t cols, const std::string& path,
                   const ParseOptions& opt) {
  if (!j.is_array() || j.size() != rows) throw SchemaError(path, "matrix with " + std::to_string(rows) + " rows expected");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    const auto rp = idx_path(path, r);
    if (!row.is_array() || row.size() != cols) throw SchemaError(rp, "row of length " + std::to_string(cols) + " expected");
    for (std::size_t c = 0; c < cols; ++c) {
      Cyclotomic v = parse_scalar(row[c], idx_path(rp, c), opt);
      if (!v.is_zero()) m.set(r, c, v);
    }
  }
  return m;
}

std::vector<int> parse_int_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "array expected");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(static_cast<int>(as_int(j[i], idx_path(path, i))));
  return out;
}

}  // namespace

Cyclotomic parse_scalar(const json& j, const std::string& path, const ParseOptions& opt) {
  if (j.is_number_integer()) return Cyclotomic(j.get<long long>());
  if (j.is_string()) {
    static const std::regex rational("(-?)([0-9]+)(?:/([0-9]+))?");
    static const std::regex root("(-?)(?:(i)|z([0-9]+)(?:\\^([0-9]+))?)");
    const auto s = j.get<std::string>();
    std::smatch m;
    if (std::regex_match(s, m, rational)) {
      BigInt num(m[2].str());
      BigInt den = m[3].matched ? BigInt(m[3].str()) : BigInt(1);
      if (den == 0) throw SchemaError(path, "zero denominator");
      if (m[1].length()) num = -num;
      return Cyclotomic::rational(num, den);
    }
    if (std::regex_match(s, m, root)) {
      long long n = 4, e = 1;
      if (!m[2].matched) {
        n = std::stoll(m[3].str());
        if (m[4].matched) e = std::stoll(m[4].str());
      }
      check_order(n, path, opt);
      Cyclotomic v = Cyclotomic::root_of_unity(static_cast<int>(n), e);
      return m[1].length() ? -v : v;
    }
    throw SchemaError(path, "bad scalar literal '" + s + "'");
  }
  if (j.is_object()) {
    const long long n = as_int(need(j, "N", path), key_path(path, "N"));
    check_order(n, key_path(path, "N"), opt);
    const auto& num = need(j, "num", path);
    if (!num.is_array()) throw SchemaError(key_path(path, "num"), "array expected");
    std::vector<BigInt> coeffs;
    for (std::size_t i = 0; i < num.size(); ++i) coeffs.push_back(as_bigint(num[i], idx_path(key_path(path, "num"), i)));
    BigInt den = 1;
    if (j.contains("den")) den = as_bigint(j["den"], key_path(path, "den"));
    if (den <= 0) throw SchemaError(key_path(path, "den"), "positive denominator expected");
    for (const auto& [k, v] : j.items())
      if (k != "N" && k != "num" && k != "den") throw SchemaError(key_path(path, k), "unknown key");
    return Cyclotomic::from_coefficients(static_cast<int>(n), std::move(coeffs), den);
  }
  throw SchemaError(path, "scalar expected");
}

json scalar_to_json(const Cyclotomic& c) {
  const Cyclotomic v = c.reduce_order();
  if (v.is_rational()) {
    const BigInt num = v.numerator().empty() ? BigInt(0) : v.numerator()[0];
    if (v.denominator() == 1) return bigint_to_json(num);
    return num.str() + "/" + v.denominator().str();
  }
  if (auto n = v.multiplicative_order())
    if (auto e = v.root_exponent(*n)) return "z" + std::to_string(*n) + "^" + std::to_string(*e);
  json out;
  out["N"] = v.order();
  json num = json::array();
  for (const auto& x : v.numerator()) num.push_back(bigint_to_json(x));
  out["num"] = std::move(num);
  out["den"] = bigint_to_json(v.denominator());
  return out;
}

FinAbGroup parse_group(const json& j, const std::string& path) {
  const auto orders = parse_int_list(need(j, "cyclic", path), key_path(path, "cyclic"));
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] < 1) throw SchemaError(idx_path(key_path(path, "cyclic"), i), "cyclic order must be >= 1");
  return FinAbGroup(orders);
}

json group_to_json(const FinAbGroup& g) { return {{"cyclic", g.orders()}}; }

namespace {
std::vector<Cyclotomic> parse_values(const json& j, std::size_t n, const std::string& path, const ParseOptions& opt) {
  const auto& v = need(j, "values", path);
  const auto vp = key_path(path, "values");
  if (!v.is_array() || v.size() != n) throw SchemaError(vp, std::to_string(n) + " values expected");
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(parse_scalar(v[i], idx_path(vp, i), opt));
  return out;
}
}  // namespace

Cochain2 parse_cochain2(const json& j, const std::string& path, const ParseOptions& opt) {
  const FinAbGroup g = parse_group(need(j, "group", path), key_path(path, "group"));
  const std::size_t n = g.size();
  return {g, parse_values(j, n * n, path, opt)};
}

Cochain3 parse_cochain3(const json& j, const std::string& path, const ParseOptions& opt) {
  const FinAbGroup g = parse_group(need(j, "group", path), key_path(path, "group"));
  const std::size_t n = g.size();
  return {g, parse_values(j, n * n * n, path, opt)};
}

json cochain_to_json(const FinAbGroup& g, const std::vector<Cyclotomic>& values) {
  json v = json::array();
  for (const auto& x : values) v.push_back(scalar_to_json(x));
  return {{"group", group_to_json(g)}, {"values", std::move(v)}};
}
json cochain_to_json(const Cochain2& c) { return cochain_to_json(c.group, c.values); }
json cochain_to_json(const Cochain3& c) { return cochain_to_json(c.group, c.values); }

Host parse_host(const json& j, const std::string& path, const ParseOptions& opt) {
  const auto& kind = need(j, "kind", path);
  if (kind == "graded_vec") {
    const FinAbGroup g = parse_group(need(j, "group", path), key_path(path, "group"));
    Cochain2 braid = Cochain2::trivial(g);
    if (j.contains("braid")) {
      braid = parse_cochain2(j["braid"], key_path(path, "braid"), opt);
      if (braid.group != g) throw SchemaError(key_path(path, "braid"), "braid group differs from host group");
    }
    try {
      return HostContext::graded_vec(g, braid);
    } catch (const DomainError& e) {
      throw SchemaError(key_path(path, "braid"), e.what());
    }
  }
  if (kind == "rep_cat") {
    const auto& t = need(j, "mul_table", path);
    if (!t.is_array()) throw SchemaError(key_path(path, "mul_table"), "array expected");
    std::vector<std::vector<int>> table;
    for (std::size_t i = 0; i < t.size(); ++i)
      table.push_back(parse_int_list(t[i], idx_path(key_path(path, "mul_table"), i)));
    const auto gens = parse_int_list(need(j, "generators", path), key_path(path, "generators"));
    try {
      return HostContext::rep_cat(table, gens);
    } catch (const DomainError& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(key_path(path, "kind"), "expected \"graded_vec\" or \"rep_cat\"");
}

HostObject parse_object(const json& j, const HostContext& h, const std::string& path, const ParseOptions& opt) {
  if (!j.is_object()) throw SchemaError(path, "object expected");
  if (h.kind() == HostKind::GradedVec) {
    if (j.contains("grades")) {
      auto g = parse_int_list(j["grades"], key_path(path, "grades"));
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] < 0 || g[i] >= h.group().size()) throw SchemaError(idx_path(key_path(path, "grades"), i), "grade out of range");
      return h.graded_object(std::move(g));
    }
    const auto& d = need(j, "dims", path);
    if (!d.is_object()) throw SchemaError(key_path(path, "dims"), "object expected");
    std::map<int, std::size_t> dims;
    for (const auto& [k, v] : d.items()) {
      const auto p = key_path(key_path(path, "dims"), k);
      const long long n = as_int(v, p);
      if (n < 0) throw SchemaError(p, "negative dimension");
      dims[grade_key(k, h.group(), p)] = static_cast<std::size_t>(n);
    }
    return h.graded_object_from_dims(dims);
  }
  const auto& r = need(j, "rep", path);
  const auto rp = key_path(path, "rep");
  if (!r.is_object() || r.empty()) throw SchemaError(rp, "non-empty object expected");
  std::size_t dim = 0;
  {
    const auto& first = r.begin().value();
    if (!first.is_array()) throw SchemaError(key_path(rp, r.begin().key()), "matrix expected");
    dim = first.size();
  }
  std::map<int, Matrix> images;
  static const std::regex re("[0-9]+");
  for (const auto& [k, v] : r.items()) {
    const auto p = key_path(rp, k);
    if (!std::regex_match(k, re) || std::stoi(k) >= h.group_order()) throw SchemaError(p, "group element index expected");
    images[std::stoi(k)] = parse_dense(v, dim, dim, p, opt);
  }
  try {
    if (static_cast<int>(images.size()) == h.group_order()) {
      std::vector<Matrix> all;
      for (auto& [k, m] : images) all.push_back(std::move(m));
      HostObject x = h.rep_object_all(std::move(all));
      h.validate(x);
      return x;
    }
    std::vector<Matrix> gens;
    for (int g : h.generators()) {
      auto it = images.find(g);
      if (it == images.end()) throw SchemaError(rp, "image of generator " + std::to_string(g) + " missing");
      gens.push_back(it->second);
    }
    if (images.size() != gens.size()) throw SchemaError(rp, "give either all group elements or exactly the generators");
    return h.rep_object(gens);
  } catch (const DomainError& e) {
    throw SchemaError(rp, e.what());
  }
}

json object_to_json(const HostContext& h, const HostObject& x) {
  if (h.kind() == HostKind::GradedVec) return {{"grades", x.grades}};
  json r = json::object();
  for (int g : h.generators()) r[std::to_string(g)] = matrix_to_json(x.rep[g]);
  return {{"rep", std::move(r)}};
}

Matrix parse_morphism(const json& j, const HostContext& h, const HostObject& src, const HostObject& dst,
                      const std::string& path, const ParseOptions& opt) {
  if (!j.is_object()) throw SchemaError(path, "morphism object expected");
  Matrix m(dst.dim, src.dim);
  if (j.contains("matrix")) {
    m = parse_dense(j["matrix"], dst.dim, src.dim, key_path(path, "matrix"), opt);
  } else {
    if (h.kind() != HostKind::GradedVec) throw SchemaError(path, "\"matrix\" expected in a rep_cat host");
    const auto& b = need(j, "blocks", path);
    const auto bp = key_path(path, "blocks");
    if (!b.is_object()) throw SchemaError(bp, "object expected");
    static const std::regex re("([0-9]+)->([0-9]+)");
    for (const auto& [k, v] : b.items()) {
      const auto p = key_path(bp, k);
      std::smatch mm;
      if (!std::regex_match(k, mm, re)) throw SchemaError(p, "block key \"i->j\" expected");
      const int gi = grade_key(mm[1].str(), h.group(), p), gj = grade_key(mm[2].str(), h.group(), p);
      const auto rows = indices_of(dst, gj), cols = indices_of(src, gi);
      const Matrix blk = parse_dense(v, rows.size(), cols.size(), p, opt);
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, val] : blk.col(c)) m.set(rows[r], cols[c], val);
    }
  }
  if (!h.is_morphism(src, dst, m)) throw SchemaError(path, "not a morphism in the host category");
  return m;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (const auto& row : m.to_dense()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(scalar_to_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

json morphism_to_json(const HostContext& h, const HostObject& src, const HostObject& dst, const Matrix& m) {
  if (h.kind() != HostKind::GradedVec) return {{"matrix", matrix_to_json(m)}};
  json blocks = json::object();
  for (int g = 0; g < h.group().size(); ++g) {
    const auto rows = indices_of(dst, g), cols = indices_of(src, g);
    if (rows.empty() || cols.empty()) continue;
    const Matrix blk = m.select(rows, cols);
    if (blk.is_zero()) continue;
    blocks[std::to_string(g) + "->" + std::to_string(g)] = matrix_to_json(blk);
  }
  return {{"blocks", std::move(blocks)}};
}

json violation_to_json(const Violation& v) {
  json out;
  out["check"] = v.check;
  out["indices"] = v.indices;
  out["lhs"] = v.lhs ? scalar_to_json(*v.lhs) : json(nullptr);
  out["rhs"] = v.rhs ? scalar_to_json(*v.rhs) : json(nullptr);
  if (!v.entry.empty()) out["entry"] = v.entry;
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

json violations_to_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(violation_to_json(v));
  return out;
}

json algebra_to_json(const GradedAlgebra& a) {
  const auto& h = *a.host;
  return {{"gamma", group_to_json(a.gamma)},
          {"object", object_to_json(h, a.obj())},
          {"grading", a.carrier.mgrades},
          {"mul", morphism_to_json(h, h.tensor(a.obj(), a.obj()), a.obj(), a.mul)},
          {"unit", morphism_to_json(h, h.unit(), a.obj(), a.unit)}};
}

json graded_dims_to_json(const std::map<int, std::size_t>& dims) {
  json out = json::object();
  for (const auto& [g, d] : dims) out[std::to_string(g)] = d;
  return out;
}

json kleisli_to_json(const GradedAlgebra& a, const KleisliMorphism& f) {
  const auto& h = *a.host;
  return {{"source", object_to_json(h, f.source)},
          {"target", object_to_json(h, f.target)},
          {"map", morphism_to_json(h, f.source, h.tensor(f.target, a.obj()), f.map)}};
}

const HostObject& Workspace::object(const std::string& name, const std::string& path) const {
  auto it = objects.find(name);
  if (it == objects.end()) throw SchemaError(path, "unknown object '" + name + "'");
  return it->second;
}
const GradedAlgebra& Workspace::algebra(const std::string& name, const std::string& path) const {
  auto it = algebras.find(name);
  if (it == algebras.end()) throw SchemaError(path, "unknown algebra '" + name + "'");
  return it->second;
}
const Cochain2& Workspace::cochain2(const std::string& name, const std::string& path) const {
  auto it = cochains2.find(name);
  if (it == cochains2.end()) throw SchemaError(path, "unknown 2-cochain '" + name + "'");
  return it->second;
}
const Cochain3& Workspace::cochain3(const std::string& name, const std::string& path) const {
  auto it = cochains3.find(name);
  if (it == cochains3.end()) throw SchemaError(path, "unknown 3-cochain '" + name + "'");
  return it->second;
}
const Module& Workspace::module(const std::string& name, const std::string& path) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw SchemaError(path, "unknown module '" + name + "'");
  return it->second;
}

namespace {

void need_host(const Workspace& w, const std::string& path) {
  if (!w.host) throw SchemaError(path, "workspace has no host");
}

HostObject object_or_ref(const Workspace& w, const json& j, const std::string& path, const ParseOptions& opt) {
  if (j.is_string()) return w.object(j.get<std::string>(), path);
  need_host(w, path);
  return parse_object(j, *w.host, path, opt);
}

Cochain2 cochain2_or_ref(const Workspace& w, const json& j, const std::string& path, const ParseOptions& opt) {
  if (j.is_string()) return w.cochain2(j.get<std::string>(), path);
  return parse_cochain2(j, path, opt);
}

std::vector<int> parse_grading(const json& j, std::size_t dim, const FinAbGroup& g, const std::string& path) {
  auto v = parse_int_list(j, path);
  if (v.size() != dim) throw SchemaError(path, std::to_string(dim) + " module grades expected");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 0 || v[i] >= g.size()) throw SchemaError(idx_path(path, i), "grade out of range");
  return v;
}

void load_algebra(Workspace& w, const std::string& name, const json& j, const std::string& path,
                  const ParseOptions& opt) {
  need_host(w, path);
  const auto& h = *w.host;
  if (j.contains("tga")) {
    const auto& t = j["tga"];
    const auto tp = key_path(path, "tga");
    const FinAbGroup g = parse_group(need(t, "group", tp), key_path(tp, "group"));
    const Cochain2 omega = cochain2_or_ref(w, need(t, "omega", tp), key_path(tp, "omega"), opt);
    if (omega.group != g) throw SchemaError(key_path(tp, "omega"), "omega is defined on a different group");
    std::vector<HostObject> comps;
    if (t.contains("components")) {
      const auto& c = t["components"];
      const auto cp = key_path(tp, "components");
      if (!c.is_array() || static_cast<int>(c.size()) != g.size()) throw SchemaError(cp, "one component per group element expected");
      for (std::size_t i = 0; i < c.size(); ++i) comps.push_back(object_or_ref(w, c[i], idx_path(cp, i), opt));
    }
    try {
      auto [a, f] = build_twisted_group_algebra(w.host, g, omega, comps);
      w.algebras.emplace(name, std::move(a));
      w.frobenius.emplace(name, std::move(f));
    } catch (const DomainError& e) {
      throw SchemaError(tp, e.what());
    }
    return;
  }
  GradedAlgebra a;
  a.host = w.host;
  a.gamma = parse_group(need(j, "gamma", path), key_path(path, "gamma"));
  a.carrier.obj = object_or_ref(w, need(j, "object", path), key_path(path, "object"), opt);
  a.carrier.mgrades = parse_grading(need(j, "grading", path), a.dim(), a.gamma, key_path(path, "grading"));
  const HostObject aa = h.tensor(a.obj(), a.obj());
  a.mul = parse_morphism(need(j, "mul", path), h, aa, a.obj(), key_path(path, "mul"), opt);
  a.unit = parse_morphism(need(j, "unit", path), h, h.unit(), a.obj(), key_path(path, "unit"), opt);
  if (j.contains("frobenius")) {
    const auto fp = key_path(path, "frobenius");
    const auto& fj = j["frobenius"];
    FrobeniusData f;
    f.comul = parse_morphism(need(fj, "comul", fp), h, a.obj(), aa, key_path(fp, "comul"), opt);
    f.counit = parse_morphism(need(fj, "counit", fp), h, a.obj(), h.unit(), key_path(fp, "counit"), opt);
    w.frobenius.emplace(name, std::move(f));
  }
  w.algebras.emplace(name, std::move(a));
}

void load_module(Workspace& w, const std::string& name, const json& j, const std::string& path,
                 const ParseOptions& opt) {
  need_host(w, path);
  const auto& h = *w.host;
  const auto& ref = need(j, "algebra_ref", path);
  if (!ref.is_string()) throw SchemaError(key_path(path, "algebra_ref"), "algebra name expected");
  const GradedAlgebra& a = w.algebra(ref.get<std::string>(), key_path(path, "algebra_ref"));
  std::string side = "right";
  if (j.contains("side")) {
    side = j["side"].is_string() ? j["side"].get<std::string>() : "";
    if (side != "right" && side != "left") throw SchemaError(key_path(path, "side"), "\"right\" or \"left\" expected");
  }
  Module m;
  if (j.contains("induced")) {
    const HostObject x = object_or_ref(w, j["induced"], key_path(path, "induced"), opt);
    std::vector<int> grades(x.dim, 0);
    if (j.contains("base_grading")) grades = parse_grading(j["base_grading"], x.dim, a.gamma, key_path(path, "base_grading"));
    m = side == "right" ? induced_right_module(a, x, grades) : induced_left_module(a, x, grades);
  } else {
    m.algebra = a;
    m.carrier.obj = object_or_ref(w, need(j, "carrier", path), key_path(path, "carrier"), opt);
    m.carrier.mgrades =
        parse_grading(need(j, "module_grading", path), m.dim(), a.gamma, key_path(path, "module_grading"));
    const HostObject src = side == "right" ? h.tensor(m.obj(), a.obj()) : h.tensor(a.obj(), m.obj());
    Matrix act = parse_morphism(need(j, "action", path), h, src, m.obj(), key_path(path, "action"), opt);
    (side == "right" ? m.right : m.left) = std::move(act);
  }
  if (j.contains("shift")) {
    const long long d = as_int(j["shift"], key_path(path, "shift"));
    if (d < 0 || d >= a.gamma.size()) throw SchemaError(key_path(path, "shift"), "grade out of range");
    m = shift_grading(m, static_cast<int>(d));
  }
  w.modules.emplace(name, std::move(m));
}

template <class F>
void each_named(const json& j, const std::string& key, const std::string& root, F&& f) {
  if (!j.contains(key)) return;
  const auto& section = j[key];
  const auto p = key_path(root, key);
  if (!section.is_object()) throw SchemaError(p, "object of named entries expected");
  for (const auto& [k, v] : section.items()) f(k, v, key_path(p, k));
}

}  // namespace

Workspace load_workspace(const json& j, const ParseOptions& opt) {
  Workspace w;
  if (!j.is_object()) throw SchemaError("", "workspace object expected");
  static const std::set<std::string> known{"version", "host",    "objects", "cochains", "algebras",
                                           "modules", "tasks",   "description"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw SchemaError("/" + k, "unknown key");
  const auto& ver = need(j, "version", "");
  if (ver != kVersion) throw SchemaError("/version", "expected \"1\"");
  w.version = kVersion;
  if (j.contains("host")) w.host = parse_host(j["host"], "/host", opt);
  each_named(j, "objects", "", [&](const std::string& k, const json& v, const std::string& p) {
    need_host(w, p);
    w.objects.emplace(k, parse_object(v, *w.host, p, opt));
    w.object_order.push_back(k);
  });
  each_named(j, "cochains", "", [&](const std::string& k, const json& v, const std::string& p) {
    const FinAbGroup g = parse_group(need(v, "group", p), key_path(p, "group"));
    const std::size_t n = g.size();
    const auto& vals = need(v, "values", p);
    if (!vals.is_array()) throw SchemaError(key_path(p, "values"), "array expected");
    if (vals.size() == n * n) w.cochains2.emplace(k, parse_cochain2(v, p, opt));
    if (vals.size() == n * n * n) w.cochains3.emplace(k, parse_cochain3(v, p, opt));
    if (vals.size() != n * n && vals.size() != n * n * n)
      throw SchemaError(key_path(p, "values"), "|G|^2 or |G|^3 values expected");
  });
  each_named(j, "algebras", "", [&](const std::string& k, const json& v, const std::string& p) {
    load_algebra(w, k, v, p, opt);
  });
  each_named(j, "modules", "", [&](const std::string& k, const json& v, const std::string& p) {
    load_module(w, k, v, p, opt);
  });
  if (j.contains("tasks")) {
    const auto& t = j["tasks"];
    if (!t.is_array()) throw SchemaError("/tasks", "array expected");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto p = idx_path("/tasks", i);
      Task task;
      const auto& id = need(t[i], "id", p);
      const auto& cmd = need(t[i], "command", p);
      if (!id.is_string()) throw SchemaError(key_path(p, "id"), "string expected");
      if (!cmd.is_string()) throw SchemaError(key_path(p, "command"), "string expected");
      task.id = id.get<std::string>();
      task.command = cmd.get<std::string>();
      task.args = t[i].value("args", json::object());
      if (!task.args.is_object()) throw SchemaError(key_path(p, "args"), "object expected");
      if (!ids.insert(task.id).second) throw SchemaError(key_path(p, "id"), "duplicate task id");
      w.tasks.push_back(std::move(task));
    }
  }
  return w;
}

Workspace load_workspace_file(const std::string& file, const ParseOptions& opt) {
  std::ifstream in(file);
  if (!in) throw SchemaError("", "cannot open " + file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return load_workspace(j, opt);
}

std::string serialize(const json& report) { return report.dump(2) + "\n"; }

}  // namespace gradalg::io
