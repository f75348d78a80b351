#include "gradalg/cli.hpp"

#include <fstream>
#include <future>
#include <iostream>

#include "CLI11.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/induced.hpp"

namespace gradalg::cli {

using io::json;

namespace {

struct Ctx {
  const io::Workspace& w;
  const json& args;
  const Options& opt;
  std::string path;  // JSON pointer of the task args
};

std::optional<std::string> str_arg(const Ctx& c, const std::string& key) {
  if (!c.args.contains(key)) return std::nullopt;
  if (!c.args[key].is_string()) throw SchemaError(c.path + "/" + key, "name expected");
  return c.args[key].get<std::string>();
}

template <class Map>
std::string pick(const Ctx& c, const std::string& key, const Map& m, const char* what) {
  if (auto s = str_arg(c, key)) return *s;
  if (m.size() == 1) return m.begin()->first;
  throw SchemaError(c.path + "/" + key, std::string("required: the workspace has ") + std::to_string(m.size()) + " " + what);
}

std::vector<std::string> names_arg(const Ctx& c, const std::string& key) {
  if (!c.args.contains(key)) return c.w.object_order;
  const auto& v = c.args[key];
  const auto p = c.path + "/" + key;
  if (!v.is_array()) throw SchemaError(p, "array of object names expected");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw SchemaError(p + "/" + std::to_string(i), "name expected");
    out.push_back(v[i].get<std::string>());
    c.w.object(out.back(), p + "/" + std::to_string(i));
  }
  return out;
}

json algebra_report(const AlgebraReport& r) {
  return {{"ok", r.ok()}, {"host_morphisms", r.host_morphisms}, {"assoc", r.assoc}, {"unit", r.unit},
          {"even", r.even}, {"violations", io::violations_to_json(r.violations)}};
}

json module_report(const ModuleReport& r) {
  return {{"ok", r.ok()}, {"host_morphisms", r.host_morphisms}, {"assoc", r.assoc}, {"unit", r.unit},
          {"even", r.even}, {"commute", r.commute}, {"violations", io::violations_to_json(r.violations)}};
}

json idempotent_report(const IdempotentChecks& r) {
  return {{"ok", r.ok()}, {"idempotent", r.idempotent}, {"balanced", r.balanced}, {"factors", r.factors},
          {"violations", io::violations_to_json(r.violations)}};
}

json defect_to_json(const std::optional<std::vector<std::optional<Cyclotomic>>>& d) {
  if (!d) return nullptr;
  json out = json::array();
  for (const auto& v : *d) out.push_back(v ? io::scalar_to_json(*v) : json(nullptr));
  return out;
}

json check_cocycle(const Ctx& c, bool& ok) {
  json out = json::object();
  std::vector<std::string> names;
  if (auto s = str_arg(c, "cochain")) {
    if (!c.w.cochains2.count(*s) && !c.w.cochains3.count(*s)) throw SchemaError(c.path + "/cochain", "unknown cochain '" + *s + "'");
    names.push_back(*s);
  } else {
    for (const auto& [k, v] : c.w.cochains2) names.push_back(k);
    for (const auto& [k, v] : c.w.cochains3) names.push_back(k);
  }
  for (const auto& n : names) {
    if (c.w.cochains2.count(n)) {
      const auto& k = c.w.cochains2.at(n);
      const auto r = check_cocycle2(k);
      const auto b = check_bicharacter(k);
      auto viol = io::violations_to_json(r.violations);
      for (const auto& v : b.violations) viol.push_back(io::violation_to_json(v));
      const bool good = r.is_normalized && r.is_cocycle;
      ok &= good;
      out["2:" + n] = {{"arity", 2}, {"ok", good}, {"normalized", r.is_normalized}, {"cocycle", r.is_cocycle},
                       {"bicharacter", b.ok}, {"violations", viol}};
    }
    if (c.w.cochains3.count(n)) {
      const auto r = check_cocycle3(c.w.cochains3.at(n));
      const bool good = r.is_normalized && r.is_cocycle;
      ok &= good;
      out["3:" + n] = {{"arity", 3}, {"ok", good}, {"normalized", r.is_normalized}, {"cocycle", r.is_cocycle},
                       {"violations", io::violations_to_json(r.violations)}};
    }
  }
  return {{"cochains", out}};
}

json cohomologous_cmd(const Ctx& c, bool&) {
  if (!c.args.contains("a") || !c.args.contains("b")) throw SchemaError(c.path, "arguments a and b are required");
  const auto& a = c.w.cochain2(*str_arg(c, "a"), c.path + "/a");
  const auto& b = c.w.cochain2(*str_arg(c, "b"), c.path + "/b");
  if (a.group != b.group) throw SchemaError(c.path + "/b", "cochains live on different groups");
  const auto tau = cohomologous(a, b);
  if (tau && d1(*tau) * a != b) throw ConsistencyError("cohomologous: returned tau does not satisfy b = d(tau) a");
  json t = nullptr;
  if (tau) {
    t = json::array();
    for (const auto& v : tau->values) t.push_back(io::scalar_to_json(v));
  }
  return {{"cohomologous", tau.has_value()}, {"tau", t}};
}

json check_algebra_cmd(const Ctx& c, bool& ok) {
  std::vector<std::string> names;
  if (auto s = str_arg(c, "algebra")) {
    c.w.algebra(*s, c.path + "/algebra");
    names.push_back(*s);
  } else {
    for (const auto& [k, v] : c.w.algebras) names.push_back(k);
  }
  std::optional<Cochain2> kappa;
  if (auto s = str_arg(c, "kappa")) kappa = c.w.cochain2(*s, c.path + "/kappa");
  json out = json::object();
  for (const auto& n : names) {
    const auto& a = c.w.algebra(n, c.path);
    const auto r = check_algebra(a);
    json entry;
    entry["algebra"] = algebra_report(r);
    bool good = r.ok();
    entry["frobenius"] = nullptr;
    entry["delta_separable"] = nullptr;
    entry["separable"] = nullptr;
    if (auto it = c.w.frobenius.find(n); it != c.w.frobenius.end()) {
      const auto f = check_frobenius(a, it->second);
      const auto s = check_separability(a, it->second);
      entry["frobenius"] = {{"ok", f.ok()}, {"coassoc", f.coassoc}, {"counit", f.counit},
                            {"frobenius_left", f.frobenius_left}, {"frobenius_right", f.frobenius_right},
                            {"comul_even", f.comul_even}, {"violations", io::violations_to_json(f.violations)}};
      entry["delta_separable"] = s.delta_separable;
      entry["separable"] = s.separable;
      good &= f.ok();
    }
    entry["commutativity_defect"] = defect_to_json(check_graded_commutative(a, Cochain2::trivial(a.gamma)).defect);
    if (kappa) {
      if (kappa->group != a.gamma) throw SchemaError(c.path + "/kappa", "kappa lives on a different group");
      const auto g = check_graded_commutative(a, *kappa);
      entry["graded_commutative"] = {{"ok", g.ok}, {"violations", io::violations_to_json(g.violations)}};
      good &= g.ok;
    }
    entry["ok"] = good;
    ok &= good;
    out[n] = entry;
  }
  return {{"algebras", out}};
}

json twist_cmd(const Ctx& c, bool& ok) {
  const auto name = pick(c, "algebra", c.w.algebras, "algebras");
  const auto& a = c.w.algebra(name, c.path + "/algebra");
  if (!c.args.contains("kappa")) throw SchemaError(c.path + "/kappa", "required");
  const auto& kappa = c.w.cochain2(*str_arg(c, "kappa"), c.path + "/kappa");
  GradedAlgebra t;
  try {
    t = twist_algebra(a, kappa);
  } catch (const DomainError& e) {
    throw SchemaError(c.path + "/kappa", e.what());
  }
  const auto r = check_algebra(t);
  ok &= r.ok();
  const auto tau = cohomologous(Cochain2::trivial(a.gamma), kappa);
  json out;
  out["twisted"] = io::algebra_to_json(t);
  out["check"] = algebra_report(r);
  out["coboundary"] = tau.has_value();
  out["iso"] = nullptr;
  try {
    const auto iso = algebra_iso_even(a, t);
    if (iso) out["iso"] = io::morphism_to_json(*a.host, a.obj(), t.obj(), *iso);
    out["even_iso"] = iso.has_value();
    if (tau && !iso) throw ConsistencyError("twist by a coboundary admits no even isomorphism");
  } catch (const UnsupportedInput& e) {
    out["even_iso"] = "unsupported";
  }
  return out;
}

json tensor_cmd(const Ctx& c, bool& ok) {
  if (!c.args.contains("left") || !c.args.contains("right")) throw SchemaError(c.path, "arguments left and right are required");
  const auto& m = c.w.module(*str_arg(c, "left"), c.path + "/left");
  const auto& n = c.w.module(*str_arg(c, "right"), c.path + "/right");
  if (!same_algebra(m.algebra, n.algebra)) throw SchemaError(c.path + "/right", "modules over different algebras");
  std::optional<FrobeniusData> frob;
  for (const auto& [k, a] : c.w.algebras)
    if (same_algebra(a, m.algebra) && c.w.frobenius.count(k)) frob = c.w.frobenius.at(k);
  const std::string method = str_arg(c, "method").value_or(frob ? "both" : "coequalizer");
  if (method != "both" && method != "coequalizer" && method != "idempotent")
    throw SchemaError(c.path + "/method", "coequalizer, idempotent or both expected");
  if (method != "coequalizer" && !frob) throw SchemaError(c.path + "/method", "the idempotent method needs Frobenius data");
  const auto& h = *m.algebra.host;
  json out;

  if (auto kname = str_arg(c, "kappa")) {
    const auto& kappa = c.w.cochain2(*kname, c.path + "/kappa");
    if (!m.right || !n.right) throw SchemaError(c.path, "the graded tensor product takes two right modules");
    const bool bichar = check_bicharacter(kappa).ok;
    out["bicharacter"] = bichar;
    json bim = json::object();
    bool sides_ok = true;
    for (const auto& [label, mod] : {std::pair<const char*, const Module*>{"left", &m}, {"right", &n}}) {
      try {
        const auto s = left_from_right_braided(*mod, kappa);
        bim[label] = module_report(s.bimodule);
        sides_ok &= s.bimodule.ok();
      } catch (const DomainError& e) {
        bim[label] = {{"ok", false}, {"detail", e.what()}};
        sides_ok = false;
      }
    }
    out["bimodule"] = bim;
    out["graded_tensor"] = nullptr;
    ok &= sides_ok && bichar;
    if (sides_ok && bichar) {
      const auto g = graded_tensor(m, n, kappa, method == "coequalizer" ? std::nullopt : frob);
      json gt;
      gt["graded_dims"] = io::graded_dims_to_json(graded_dimensions(g.module.carrier));
      gt["projection"] = io::morphism_to_json(h, h.tensor(m.obj(), n.obj()), g.data.object.obj, g.data.projection);
      gt["module"] = module_report(check_module(g.module));
      gt["idempotent_checks"] = g.checks ? idempotent_report(*g.checks) : json(nullptr);
      gt["methods_agree"] = g.image_agrees ? json(*g.image_agrees) : json(nullptr);
      ok &= check_module(g.module).ok() && g.image_agrees.value_or(true);
      out["graded_tensor"] = gt;
    }
    return out;
  }

  if (!m.right || !n.left) throw SchemaError(c.path, "tensor over A takes a right module and a left module");
  const auto coeq = tensor_over_A(m, n, TensorMethod::Coequalizer);
  out["graded_dims"] = io::graded_dims_to_json(graded_dimensions(coeq.object));
  out["projection"] = io::morphism_to_json(h, h.tensor(m.obj(), n.obj()), coeq.object.obj, coeq.projection);
  out["methods_agree"] = nullptr;
  out["idempotent_checks"] = nullptr;
  if (method != "coequalizer") {
    const auto idem = tensor_over_A(m, n, TensorMethod::Idempotent, frob);
    const bool agree = graded_dimensions(idem.object) == graded_dimensions(coeq.object);
    out["methods_agree"] = agree;
    out["idempotent_checks"] = idempotent_report(*idem.checks);
    ok &= agree && idem.checks->ok();
    if (method == "idempotent") {
      out["graded_dims"] = io::graded_dims_to_json(graded_dimensions(idem.object));
      out["projection"] = io::morphism_to_json(h, h.tensor(m.obj(), n.obj()), idem.object.obj, idem.projection);
    }
  }
  return out;
}

json schur_cmd(const Ctx& c, bool& ok) {
  const auto aname = pick(c, "algebra", c.w.algebras, "algebras");
  const auto& a = c.w.algebra(aname, c.path + "/algebra");
  if (!c.args.contains("x")) throw SchemaError(c.path + "/x", "required");
  const auto xname = *str_arg(c, "x");
  const auto& x = c.w.object(xname, c.path + "/x");
  if (!a.host->is_simple(x)) throw SchemaError(c.path + "/x", "object '" + xname + "' is not simple");
  auto st = stabilizer(x, a, Gauge::FirstPivot);
  sigma_cocycle(st, x, a);
  if (!st.sigma_cocycle) throw ConsistencyError("sigma extracted from the stabilizer is not a 2-cocycle");
  auto st2 = stabilizer(x, a, Gauge::LastPivot);
  sigma_cocycle(st2, x, a);
  // on an abelian stabilizer a 2-cocycle ratio is a coboundary iff it is symmetric
  for (int s : st.elements)
    for (int t : st.elements)
      if (st.sigma_at(s, t) / st2.sigma_at(s, t) != st.sigma_at(t, s) / st2.sigma_at(t, s))
        throw ConsistencyError("sigma from two gauges differs by more than a coboundary");

  json out;
  json elems = json::array(), names = json::array(), sig = json::array();
  for (int s : st.elements) {
    elems.push_back(s);
    names.push_back(a.gamma.name(s));
  }
  for (const auto& v : st.sigma) sig.push_back(io::scalar_to_json(v));
  out["stabilizer"] = elems;
  out["stabilizer_names"] = names;
  out["sigma"] = {{"elements", elems}, {"values", sig}};
  out["sigma_class"] = st.sigma_class();
  json table = json::array();
  for (const auto& yname : names_arg(c, "y")) {
    const auto& y = c.w.object(yname, c.path + "/y");
    if (!a.host->is_simple(y)) continue;
    const auto r = graded_schur_report(x, y, a);
    ok &= r.ok() && r.hom.routes_agree;
    table.push_back({{"x", xname},
                     {"y", yname},
                     {"dims_by_grade", io::graded_dims_to_json(r.hom.dims_by_grade)},
                     {"dim", r.hom.dim()},
                     {"pattern", r.pattern},
                     {"expected_pattern", r.expected_pattern},
                     {"routes_agree", r.hom.routes_agree},
                     {"ok", r.ok()}});
    if (yname == xname) out["end_dim"] = r.hom.dim();
  }
  if (!out.contains("end_dim")) out["end_dim"] = hom_A_induced(a, x, x).dim();
  out["hom_table"] = table;
  return out;
}

json interchange_cmd(const Ctx& c, bool& ok) {
  const auto aname = pick(c, "algebra", c.w.algebras, "algebras");
  const auto& a = c.w.algebra(aname, c.path + "/algebra");
  const auto kname = pick(c, "kappa", c.w.cochains2, "2-cochains");
  const auto& kappa = c.w.cochain2(kname, c.path + "/kappa");
  if (kappa.group != a.gamma) throw SchemaError(c.path + "/kappa", "kappa lives on a different group");
  std::vector<HostObject> objs;
  for (const auto& n : names_arg(c, "objects")) objs.push_back(c.w.object(n, c.path + "/objects"));
  if (objs.empty()) throw SchemaError(c.path + "/objects", "no objects");
  const auto r = check_twisted_interchange(a, kappa, objs, {c.opt.samples, c.opt.seed, c.opt.exhaustive_dim});
  auto quad = [&](const std::optional<Quadruple>& q) -> json {
    if (!q) return nullptr;
    return {{"f", io::kleisli_to_json(a, q->f)},
            {"g", io::kleisli_to_json(a, q->g)},
            {"f_prime", io::kleisli_to_json(a, q->fp)},
            {"g_prime", io::kleisli_to_json(a, q->gp)}};
  };
  ok &= r.ok();
  // everything that depends on the sample draw lives under "witness"
  return {{"checked", r.checked},
          {"exhaustive", r.exhaustive},
          {"witness",
           {{"failures", r.failures},
            {"max_residual", r.max_residual},
            {"failure", quad(r.failure)},
            {"untwisted_failures", r.untwisted_failures},
            {"untwisted_witness", quad(r.untwisted_witness)}}}};
}

json monoidal_monad_cmd(const Ctx& c, bool& ok) {
  const auto aname = pick(c, "algebra", c.w.algebras, "algebras");
  const auto& a = c.w.algebra(aname, c.path + "/algebra");
  const auto names = names_arg(c, "objects");
  std::vector<HostObject> objs;
  for (const auto& n : names) objs.push_back(c.w.object(n, c.path + "/objects"));
  std::optional<FrobeniusData> frob;
  if (c.w.frobenius.count(aname)) frob = c.w.frobenius.at(aname);
  const auto r = check_monoidal_monad(a, objs, frob);
  if (r.algebra_criterion != r.commutative)
    throw ConsistencyError("algebra-level monoidality criterion disagrees with commutativity");
  for (const auto& o : objs)
    if (o == a.host->unit() && r.mul_monoidal != r.algebra_criterion)
      throw ConsistencyError("mul-monoidality on the unit object disagrees with the algebra criterion");
  json out;
  out["unit_monoidal"] = r.unit_monoidal;
  out["mul_monoidal"] = r.mul_monoidal;
  out["naturality"] = r.naturality;
  out["algebra_criterion"] = r.algebra_criterion;
  out["commutative"] = r.commutative;
  out["s2_t2_is_p"] = r.s2_t2_is_p ? json(*r.s2_t2_is_p) : json(nullptr);
  out["t2_s2_is_id"] = r.t2_s2_is_id ? json(*r.t2_s2_is_id) : json(nullptr);
  out["witness"] = r.witness ? json{{"x", names[r.witness->first]}, {"y", names[r.witness->second]}} : json(nullptr);
  out["violations"] = io::violations_to_json(r.violations);
  ok &= r.unit_monoidal && r.mul_monoidal && r.naturality && r.s2_t2_is_p.value_or(true);
  if (frob) {
    const auto fm = check_frobenius_monad(a, *frob, objs);
    out["frobenius_monad"] = {{"ok", fm.ok()}, {"monad", fm.monad}, {"comonad", fm.comonad},
                              {"frobenius", fm.frobenius}, {"separable", fm.separable}};
  }
  if (auto kname = str_arg(c, "kappa")) {
    const auto& kappa = c.w.cochain2(*kname, c.path + "/kappa");
    std::size_t pairs = 0;
    bool all = true;
    for (const auto& x : objs)
      for (const auto& y : objs) {
        const auto iso = kleisli_tilde_iso(a, kappa, x, y);
        all &= iso.ok() && graded_dimensions(iso.kleisli_side.carrier) == graded_dimensions(iso.tilde.module.carrier);
        ++pairs;
      }
    out["kleisli_tilde_iso"] = {{"pairs", pairs}, {"ok", all}};
    ok &= all;
  }
  return out;
}

json obstruction_cmd(const Ctx& c, bool&) {
  const auto name = pick(c, "psi", c.w.cochains3, "3-cochains");
  const auto& psi = c.w.cochain3(name, c.path + "/psi");
  const auto omega = solve_pointed_obstruction(psi.group, psi);
  json out;
  out["exists"] = omega.has_value();
  out["omega"] = omega ? io::cochain_to_json(*omega) : json(nullptr);
  out["message"] = omega ? "algebra exists" : "no algebra exists";
  return out;
}

using Handler = json (*)(const Ctx&, bool&);

Handler handler(const std::string& command) {
  static const std::map<std::string, Handler> table{
      {"check-cocycle", check_cocycle},   {"cohomologous", cohomologous_cmd}, {"check-algebra", check_algebra_cmd},
      {"twist", twist_cmd},               {"tensor", tensor_cmd},             {"schur", schur_cmd},
      {"interchange", interchange_cmd},   {"monoidal-monad", monoidal_monad_cmd}, {"obstruction", obstruction_cmd}};
  auto it = table.find(command);
  if (it == table.end()) throw SchemaError("", "unknown command '" + command + "'");
  return it->second;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"check-cocycle", "cohomologous", "check-algebra",  "twist",      "tensor",
                                          "schur",         "interchange",  "monoidal-monad", "obstruction"};
  return c;
}

bool is_query(const std::string& command) { return command == "obstruction" || command == "cohomologous"; }

Result run_command(const std::string& command, const io::Workspace& w, const Options& opt) {
  const Handler h = handler(command);
  struct Job {
    std::string id;
    json args;
    std::string path;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < w.tasks.size(); ++i) {
    const auto& t = w.tasks[i];
    if (t.command != command || (opt.task && *opt.task != t.id)) continue;
    json args = t.args;
    for (const auto& [k, v] : opt.args.items()) args[k] = v;
    jobs.push_back({t.id, args, "/tasks/" + std::to_string(i) + "/args"});
  }
  if (jobs.empty()) {
    if (opt.task) throw SchemaError("/tasks", "no task '" + *opt.task + "' for command " + command);
    jobs.push_back({"default", opt.args, "/args"});
  }

  std::vector<std::future<std::pair<json, bool>>> futures;
  for (const auto& j : jobs)
    futures.push_back(std::async(std::launch::async, [&w, &opt, &j, h] {
      bool ok = true;
      json r = h(Ctx{w, j.args, opt, j.path}, ok);
      return std::make_pair(std::move(r), ok);
    }));
  Result res;
  bool all = true;
  json tasks = json::object();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [r, ok] = futures[i].get();
    r["ok"] = ok;
    all &= ok;
    tasks[jobs[i].id] = std::move(r);
  }
  res.report = {{"command", command}, {"version", io::kVersion}, {"ok", all}, {"tasks", tasks}};
  res.exit_code = (all || is_query(command)) ? kPass : kVerdictFail;
  return res;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for graded algebras, their modules and induced-module tensor products"};
  app.require_subcommand(1);
  std::string file, out_path;
  Options opt;
  std::map<std::string, std::string> names;
  std::vector<std::string> ys, objects;
  for (const auto& cmd : commands()) {
    auto* sub = app.add_subcommand(cmd);
    sub->add_option("file", file, "workspace JSON")->required();
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_option("--seed", opt.seed, "seed for sampled checks");
    sub->add_option("--samples", opt.samples, "random samples per sampled block");
    sub->add_option("--exhaustive-dim", opt.exhaustive_dim, "largest object dimension checked exhaustively");
    sub->add_option("--max-root-order", opt.max_root_order, "largest root-of-unity order accepted");
    sub->add_option("--task", opt.task, "run only this task id");
    for (const char* key : {"cochain", "a", "b", "algebra", "kappa", "psi", "left", "right", "method", "x"})
      sub->add_option(std::string("--") + key, names[key]);
    sub->add_option("--y", ys, "object names");
    sub->add_option("--objects", objects, "object names");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kSchemaError;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  for (const auto& [k, v] : names)
    if (!v.empty()) opt.args[k] = v;
  if (!ys.empty()) opt.args["y"] = ys;
  if (!objects.empty()) opt.args["objects"] = objects;

  try {
    const int saved = max_order();
    set_max_order(opt.max_root_order);
    io::Workspace w;
    Result r;
    try {
      w = io::load_workspace_file(file, {opt.max_root_order});
      r = run_command(command, w, opt);
    } catch (...) {
      set_max_order(saved);
      throw;
    }
    set_max_order(saved);
    const std::string text = io::serialize(r.report);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << out_path << "\n";
        return kSchemaError;
      }
      f << text;
    }
    return r.exit_code;
  } catch (const SchemaError& e) {
    err << "schema error at " << (e.path().empty() ? "/" : e.path()) << ": " << e.what() << "\n";
    return kSchemaError;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << "\n";
    return kConsistencyError;
  } catch (const UnsupportedInput& e) {
    err << "unsupported input: " << e.what() << "\n";
    return kSchemaError;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kSchemaError;
  }
}

}  // namespace gradalg::cli
