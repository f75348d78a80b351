#include "gradalg/gmod.hpp"

#include <sstream>

#include "gradalg/errors.hpp"
#include "gradalg/linalg.hpp"

namespace gradalg {

namespace {

std::vector<long> decode(std::size_t idx, const std::vector<std::size_t>& dims) {
  std::vector<long> out(dims.size());
  for (std::size_t t = dims.size(); t-- > 0;) {
    out[t] = static_cast<long>(idx % dims[t]);
    idx /= dims[t];
  }
  return out;
}

void compare(std::vector<Violation>& out, bool& flag, const std::string& check, const Matrix& lhs, const Matrix& rhs,
             const std::vector<std::size_t>& dims) {
  if (lhs == rhs) return;
  flag = false;
  const std::size_t before = out.size();
  compare_maps(out, check, {}, lhs, rhs);
  if (out.size() > before) out.back().indices = decode(out.back().entry[1], dims);
}

Matrix id(std::size_t n) { return Matrix::identity(n); }

Matrix scale_columns(const Matrix& f, const std::vector<int>& ga, const std::vector<int>& gb, const Cochain2& k,
                     bool invert) {
  Matrix out = f;
  const std::size_t db = gb.size();
  for (std::size_t c = 0; c < f.cols(); ++c) {
    Cyclotomic s = k(ga[c / db], gb[c % db]);
    if (s.is_one()) continue;
    if (invert) s = s.inverse();
    SparseVec col = f.col(c);
    for (auto& e : col) e.second = s * e.second;
    out.set_col(c, std::move(col));
  }
  return out;
}

void require_same(const Module& m, const Module& n) {
  if (!same_algebra(m.algebra, n.algebra)) throw DomainError("modules over different algebras");
}

void require_graded_commutative(const GradedAlgebra& a, const Cochain2& kappa) {
  const auto rep = check_graded_commutative(a, kappa);
  if (rep.ok) return;
  std::ostringstream os;
  os << "algebra is not graded-commutative w.r.t. the given cocycle";
  if (rep.defect) {
    os << "; defect table:";
    const int n = a.gamma.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& v = (*rep.defect)[i * n + j];
        if (v) os << " (" << i << "," << j << ")=" << v->to_string();
      }
  }
  throw DomainError(os.str());
}

GradedObject pick_grades(const HostObject& obj, const std::vector<int>& src, const std::vector<std::size_t>& idx) {
  GradedObject out{obj, {}};
  for (auto t : idx) out.mgrades.push_back(src[t]);
  return out;
}

}  // namespace

bool same_algebra(const GradedAlgebra& a, const GradedAlgebra& b) {
  return (a.host == b.host || *a.host == *b.host) && a.gamma == b.gamma && a.carrier == b.carrier && a.mul == b.mul &&
         a.unit == b.unit;
}

std::map<int, std::size_t> graded_dimensions(const GradedObject& x) {
  std::map<int, std::size_t> out;
  for (int g : x.mgrades) ++out[g];
  return out;
}

Module regular_module(const GradedAlgebra& a, bool left, bool right) {
  Module m{a, a.carrier, {}, {}};
  if (left) m.left = a.mul;
  if (right) m.right = a.mul;
  return m;
}

Module induced_right_module(const GradedAlgebra& a, const HostObject& x, const std::vector<int>& xgrades) {
  if (xgrades.size() != x.dim) throw DomainError("one module grade per basis vector expected");
  Module m{a, graded_tensor_object(*a.host, {x, xgrades}, a.carrier, a.gamma), {}, {}};
  m.right = Matrix::kron(id(x.dim), a.mul);
  return m;
}

Module induced_left_module(const GradedAlgebra& a, const HostObject& y, const std::vector<int>& ygrades) {
  if (ygrades.size() != y.dim) throw DomainError("one module grade per basis vector expected");
  Module m{a, graded_tensor_object(*a.host, a.carrier, {y, ygrades}, a.gamma), {}, {}};
  m.left = Matrix::kron(a.mul, id(y.dim));
  return m;
}

Module shift_grading(const Module& m, int d) {
  Module out = m;
  for (int& g : out.carrier.mgrades) g = m.algebra.gamma.add(g, d);
  return out;
}

Module transport(const Module& m, const Matrix& t, const HostObject& target) {
  const auto& h = *m.algebra.host;
  if (!h.is_morphism(m.obj(), target, t)) throw DomainError("transport map is not a host morphism");
  const auto inv = inverse(t);
  if (!inv) throw DomainError("transport map is not invertible");
  const Matrix& ti = *inv;
  Module out{m.algebra, {target, std::vector<int>(target.dim, -1)}, {}, {}};
  for (std::size_t c = 0; c < t.cols(); ++c) {
    for (const auto& [r, v] : t.col(c)) {
      int& g = out.carrier.mgrades[r];
      if (g >= 0 && g != m.carrier.mgrades[c]) throw DomainError("transport map is not homogeneous");
      g = m.carrier.mgrades[c];
    }
  }
  const std::size_t da = m.algebra.dim();
  if (m.right) out.right = t * *m.right * Matrix::kron(ti, id(da));
  if (m.left) out.left = t * *m.left * Matrix::kron(id(da), ti);
  return out;
}

ModuleReport check_module(const Module& m) {
  ModuleReport rep;
  const auto& a = m.algebra;
  const auto& h = *a.host;
  const std::size_t dm = m.dim(), da = a.dim();
  const auto& mg = m.carrier.mgrades;
  const auto& ag = a.carrier.mgrades;
  if (m.right) {
    const Matrix& r = *m.right;
    if (!h.is_morphism(h.tensor(m.obj(), a.obj()), m.obj(), r)) {
      rep.host_morphisms = false;
      rep.violations.push_back({"host_morphism", {}, {}, {}, {}, "right action is not a host morphism"});
    } else {
      compare(rep.violations, rep.assoc, "right_assoc", r * Matrix::kron(r, id(da)), r * Matrix::kron(id(dm), a.mul),
              {dm, da, da});
      compare(rep.violations, rep.unit, "right_unit", r * Matrix::kron(id(dm), a.unit), id(dm), {dm});
      for (std::size_t c = 0; c < dm * da && rep.even; ++c)
        for (const auto& [row, v] : r.col(c))
          if (mg[row] != a.gamma.add(mg[c / da], ag[c % da])) {
            rep.even = false;
            rep.violations.push_back({"right_even", decode(c, {dm, da}), v, Cyclotomic(), {long(row), long(c)}, ""});
            break;
          }
    }
  }
  if (m.left) {
    const Matrix& l = *m.left;
    if (!h.is_morphism(h.tensor(a.obj(), m.obj()), m.obj(), l)) {
      rep.host_morphisms = false;
      rep.violations.push_back({"host_morphism", {}, {}, {}, {}, "left action is not a host morphism"});
    } else {
      compare(rep.violations, rep.assoc, "left_assoc", l * Matrix::kron(id(da), l), l * Matrix::kron(a.mul, id(dm)),
              {da, da, dm});
      compare(rep.violations, rep.unit, "left_unit", l * Matrix::kron(a.unit, id(dm)), id(dm), {dm});
      for (std::size_t c = 0; c < dm * da && rep.even; ++c)
        for (const auto& [row, v] : l.col(c))
          if (mg[row] != a.gamma.add(ag[c / dm], mg[c % dm])) {
            rep.even = false;
            rep.violations.push_back({"left_even", decode(c, {da, dm}), v, Cyclotomic(), {long(row), long(c)}, ""});
            break;
          }
    }
  }
  if (m.left && m.right && rep.host_morphisms) {
    compare(rep.violations, rep.commute, "commute", *m.left * Matrix::kron(id(da), *m.right),
            *m.right * Matrix::kron(*m.left, id(da)), {da, dm, da});
  }
  return rep;
}

Module twist_module(const Module& m, const Cochain2& kappa) {
  Module out = m;
  out.algebra = twist_algebra(m.algebra, kappa);
  const auto& mg = m.carrier.mgrades;
  const auto& ag = m.algebra.carrier.mgrades;
  if (m.right) out.right = scale_columns(*m.right, mg, ag, kappa, false);
  if (m.left) out.left = scale_columns(*m.left, ag, mg, kappa, false);
  return out;
}

SideSwitch left_from_right_braided(const Module& m, const Cochain2& kappa) {
  if (!m.right) throw DomainError("right action required");
  require_graded_commutative(m.algebra, kappa);
  Module out = m;
  const auto& a = m.algebra;
  out.left = scale_columns(*m.right * a.host->braiding(a.obj(), m.obj()), a.carrier.mgrades, m.carrier.mgrades,
                           kappa, true);
  auto rep = check_module(out);
  return {std::move(out), std::move(rep)};
}

SideSwitch right_from_left_braided(const Module& m, const Cochain2& kappa) {
  if (!m.left) throw DomainError("left action required");
  require_graded_commutative(m.algebra, kappa);
  Module out = m;
  const auto& a = m.algebra;
  out.right = scale_columns(*m.left * a.host->braiding(m.obj(), a.obj()), m.carrier.mgrades, a.carrier.mgrades,
                            kappa, true);
  auto rep = check_module(out);
  return {std::move(out), std::move(rep)};
}

Matrix balancing_idempotent(const Module& m, const Module& n, const FrobeniusData& f) {
  if (!m.right || !n.left) throw DomainError("balancing idempotent needs a right and a left module");
  const Matrix de = f.comul * m.algebra.unit;
  return Matrix::kron(*m.right, *n.left) * Matrix::kron(id(m.dim()), Matrix::kron(de, id(n.dim())));
}

IdempotentChecks check_balancing_idempotent(const Module& m, const Module& n, const Matrix& p, const Matrix& r) {
  IdempotentChecks out;
  const std::size_t dm = m.dim(), dn = n.dim(), da = m.algebra.dim();
  compare(out.violations, out.idempotent, "idempotent", p * p, p, {dm, dn});
  compare(out.violations, out.balanced, "balanced", p * Matrix::kron(*m.right, id(dn)),
          p * Matrix::kron(id(dm), *n.left), {dm, da, dn});
  compare(out.violations, out.factors, "factors", r * p, r, {dm, dn});
  return out;
}

TensorOverA tensor_over_A(const Module& m, const Module& n, TensorMethod method, const std::optional<FrobeniusData>& f) {
  if (!m.right || !n.left) throw DomainError("tensor over A needs a right module and a left module");
  require_same(m, n);
  const auto& a = m.algebra;
  const auto& h = *a.host;
  const std::size_t dm = m.dim(), dn = n.dim(), da = a.dim();
  const GradedObject src = graded_tensor_object(h, m.carrier, n.carrier, a.gamma);
  const Matrix diff = Matrix::kron(*m.right, id(dn)) - Matrix::kron(id(dm), *n.left);
  const CokernelData cok = h.cokernel(src.obj, diff);

  TensorOverA out;
  if (method == TensorMethod::Coequalizer) {
    out.object = pick_grades(cok.object, src.mgrades, cok.complement);
    out.projection = cok.projection;
    out.section = cok.section;
  } else {
    if (!f) throw DomainError("idempotent method requires Frobenius data");
    Matrix p = balancing_idempotent(m, n, *f);
    auto checks = check_balancing_idempotent(m, n, p, cok.projection);
    if (!checks.ok()) throw DomainError("balancing idempotent fails; separable Frobenius data required");
    const auto split = h.split_idempotent(src.obj, p);
    out.object = pick_grades(split.object, src.mgrades, split.pivots);
    out.projection = split.r;
    out.section = split.e;
    out.to_coequalizer = cok.projection * split.e;
    out.from_coequalizer = split.r * cok.section;
    if (!(*out.to_coequalizer * *out.from_coequalizer).is_identity() ||
        !(*out.from_coequalizer * *out.to_coequalizer).is_identity()) {
      throw ConsistencyError("coequalizer and idempotent image are not isomorphic");
    }
    out.idempotent = std::move(p);
    out.checks = std::move(checks);
  }
  if (m.left || n.right) {
    Module res{a, out.object, {}, {}};
    if (m.left) res.left = out.projection * Matrix::kron(*m.left, id(dn)) * Matrix::kron(id(da), out.section);
    if (n.right) res.right = out.projection * Matrix::kron(id(dm), *n.right) * Matrix::kron(out.section, id(da));
    out.module = std::move(res);
  }
  return out;
}

GradedTensor graded_tensor(const Module& m, const Module& n, const Cochain2& kappa,
                           const std::optional<FrobeniusData>& f) {
  if (!m.right || !n.right) throw DomainError("graded tensor takes two right modules");
  require_same(m, n);
  if (!check_bicharacter(kappa).ok) throw DomainError("graded tensor product requires a bicharacter");
  const Module mb = left_from_right_braided(m, kappa).module;
  const Module nb = left_from_right_braided(n, kappa).module;
  GradedTensor out;
  out.data = tensor_over_A(mb, nb, TensorMethod::Coequalizer);
  out.module = *out.data.module;
  out.module.left.reset();
  if (f) {
    Matrix p = balancing_idempotent(mb, nb, *f);
    out.checks = check_balancing_idempotent(mb, nb, p, out.data.projection);
    bool agrees = out.checks->ok();
    if (agrees) {
      const GradedObject src = graded_tensor_object(*m.algebra.host, m.carrier, n.carrier, m.algebra.gamma);
      const auto split = m.algebra.host->split_idempotent(src.obj, p);
      agrees = graded_dimensions(pick_grades(split.object, src.mgrades, split.pivots)) ==
               graded_dimensions(out.data.object);
    }
    out.image_agrees = agrees;
    out.twisted_idempotent = std::move(p);
  }
  return out;
}

bool is_right_module_morphism(const Module& m, const Module& m2, const Matrix& f) {
  if (!m.right || !m2.right) return false;
  if (!m.algebra.host->is_morphism(m.obj(), m2.obj(), f)) return false;
  return f * *m.right == *m2.right * Matrix::kron(f, id(m.algebra.dim()));
}

bool is_left_module_morphism(const Module& n, const Module& n2, const Matrix& g) {
  if (!n.left || !n2.left) return false;
  if (!n.algebra.host->is_morphism(n.obj(), n2.obj(), g)) return false;
  return g * *n.left == *n2.left * Matrix::kron(id(n.algebra.dim()), g);
}

AssociatorCheck graded_tensor_associator(const Module& m, const Module& n, const Module& k, const Cochain2& kappa) {
  const auto mn = graded_tensor(m, n, kappa);
  const auto mn_k = graded_tensor(mn.module, k, kappa);
  const auto nk = graded_tensor(n, k, kappa);
  const auto m_nk = graded_tensor(m, nk.module, kappa);
  AssociatorCheck out;
  out.map = m_nk.data.projection * Matrix::kron(id(m.dim()), nk.data.projection) *
            Matrix::kron(mn.data.section, id(k.dim())) * mn_k.data.section;
  const Matrix back = mn_k.data.projection * Matrix::kron(mn.data.projection, id(k.dim())) *
                      Matrix::kron(id(m.dim()), nk.data.section) * m_nk.data.section;
  out.invertible = (out.map * back).is_identity() && (back * out.map).is_identity();
  out.module_morphism = is_right_module_morphism(mn_k.module, m_nk.module, out.map) &&
                        is_homogeneous(out.map, mn_k.module.carrier.mgrades, m_nk.module.carrier.mgrades,
                                       m.algebra.gamma, 0);
  return out;
}

AssociatorCheck graded_tensor_right_unitor(const Module& m, const Cochain2& kappa) {
  const auto ma = graded_tensor(m, regular_module(m.algebra, false, true), kappa);
  AssociatorCheck out;
  out.map = *m.right * ma.data.section;
  const Matrix back = ma.data.projection * Matrix::kron(id(m.dim()), m.algebra.unit);
  out.invertible = (out.map * back).is_identity() && (back * out.map).is_identity();
  out.module_morphism = is_right_module_morphism(ma.module, m, out.map) &&
                        is_homogeneous(out.map, ma.module.carrier.mgrades, m.carrier.mgrades, m.algebra.gamma, 0);
  return out;
}

TensorMorphism tensor_morphisms_over_A(const Module& m, const Module& m2, const Matrix& f, const Module& n,
                                       const Module& n2, const Matrix& g, const FrobeniusData& frob) {
  if (!is_right_module_morphism(m, m2, f)) throw DomainError("f is not a right module morphism");
  if (!is_left_module_morphism(n, n2, g)) throw DomainError("g is not a left module morphism");
  const auto t1 = tensor_over_A(m, n, TensorMethod::Idempotent, frob);
  const auto t2 = tensor_over_A(m2, n2, TensorMethod::Idempotent, frob);
  const Matrix fg = Matrix::kron(f, g);
  TensorMorphism out;
  out.map = t2.projection * fg * t1.section;
  out.interchange = *t2.idempotent * fg == fg * *t1.idempotent;
  return out;
}

}  // namespace gradalg
