#include "gradalg/galg.hpp"

#include <map>

#include "gradalg/errors.hpp"
#include "gradalg/linalg.hpp"
#include "gradalg/zmod.hpp"

namespace gradalg {

namespace {

// Splits a basis index of a d^k-dimensional tensor power into its k factors.
std::vector<long> decode(std::size_t idx, std::size_t d, int k) {
  std::vector<long> out(k);
  for (int t = k - 1; t >= 0; --t) {
    out[t] = static_cast<long>(idx % d);
    idx /= d;
  }
  return out;
}

void compare_tensor(std::vector<Violation>& out, bool& flag, const std::string& check, const Matrix& lhs,
                    const Matrix& rhs, std::size_t d, int k) {
  if (lhs == rhs) return;
  flag = false;
  const std::size_t before = out.size();
  compare_maps(out, check, {}, lhs, rhs);
  if (out.size() > before) out.back().indices = decode(out.back().entry[1], d, k);
}

void require_cocycle(const Cochain2& kappa, const FinAbGroup& gamma) {
  if (kappa.group != gamma) throw DomainError("cocycle lives on a different grading group");
  const auto rep = check_cocycle2(kappa);
  if (!rep.is_normalized || !rep.is_cocycle) throw DomainError("twisting requires a normalized 2-cocycle");
}

Matrix id(std::size_t n) { return Matrix::identity(n); }

}  // namespace

AlgebraReport check_algebra(const GradedAlgebra& a) {
  AlgebraReport rep;
  const auto& h = *a.host;
  const std::size_t d = a.dim();
  const HostObject aa = h.tensor(a.obj(), a.obj());
  if (!h.is_morphism(aa, a.obj(), a.mul) || !h.is_morphism(h.unit(), a.obj(), a.unit)) {
    rep.host_morphisms = false;
    rep.violations.push_back({"host_morphism", {}, {}, {}, {}, "mul or unit is not a morphism of the host"});
    return rep;
  }
  compare_tensor(rep.violations, rep.assoc, "assoc", a.mul * Matrix::kron(a.mul, id(d)),
                 a.mul * Matrix::kron(id(d), a.mul), d, 3);
  compare_tensor(rep.violations, rep.unit, "unit_left", a.mul * Matrix::kron(a.unit, id(d)), id(d), d, 1);
  compare_tensor(rep.violations, rep.unit, "unit_right", a.mul * Matrix::kron(id(d), a.unit), id(d), d, 1);
  for (std::size_t c = 0; c < d * d; ++c) {
    for (const auto& [r, v] : a.mul.col(c)) {
      if (a.carrier.mgrades[r] != pair_grade(a, c)) {
        rep.even = false;
        Violation w;
        w.check = "even";
        w.indices = decode(c, d, 2);
        w.lhs = v;
        w.rhs = Cyclotomic();
        w.entry = {static_cast<long>(r), static_cast<long>(c)};
        rep.violations.push_back(std::move(w));
        break;
      }
    }
  }
  for (const auto& [r, v] : a.unit.col(0)) {
    if (a.carrier.mgrades[r] != 0) {
      rep.even = false;
      rep.violations.push_back({"unit_grade", {static_cast<long>(r)}, v, Cyclotomic(), {static_cast<long>(r), 0}, ""});
    }
  }
  return rep;
}

GradedAlgebra twist_algebra(const GradedAlgebra& a, const Cochain2& kappa) {
  require_cocycle(kappa, a.gamma);
  GradedAlgebra out = a;
  const std::size_t d = a.dim();
  for (std::size_t c = 0; c < d * d; ++c) {
    const Cyclotomic& k = kappa(a.carrier.mgrades[c / d], a.carrier.mgrades[c % d]);
    if (k.is_one()) continue;
    SparseVec col = a.mul.col(c);
    for (auto& e : col) e.second = k * e.second;
    out.mul.set_col(c, std::move(col));
  }
  return out;
}

std::optional<Matrix> algebra_iso_even(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(*a.host == *b.host) || a.gamma != b.gamma) throw DomainError("algebras live in different contexts");
  const int n = a.gamma.size();
  std::map<int, std::size_t> ia, ib;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!ia.emplace(a.carrier.mgrades[i], i).second) {
      throw UnsupportedInput("algebra_iso_even: homogeneous component of dimension > 1");
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (!ib.emplace(b.carrier.mgrades[i], i).second) {
      throw UnsupportedInput("algebra_iso_even: homogeneous component of dimension > 1");
    }
  }
  std::vector<int> support;
  for (const auto& [g, i] : ia) {
    if (!ib.count(g)) return std::nullopt;
    support.push_back(g);
  }
  if (ia.size() != ib.size() || !ia.count(0)) return std::nullopt;
  const Cyclotomic ua = a.unit.get(ia[0], 0), ub = b.unit.get(ib[0], 0);
  if (ua.is_zero() || ub.is_zero()) return std::nullopt;
  const Cyclotomic c = ub / ua;
  // x_g = c * y_g with y_i y_j / y_{i+j} = r(i,j) / c wherever mu is nonzero.
  std::vector<std::pair<int, int>> pairs;
  std::vector<Cyclotomic> ratios;
  for (int i : support) {
    for (int j : support) {
      const int s = a.gamma.add(i, j);
      const Cyclotomic ma = ia.count(s) ? a.mul.get(ia[s], ia[i] * a.dim() + ia[j]) : Cyclotomic();
      const Cyclotomic mb = ib.count(s) ? b.mul.get(ib[s], ib[i] * b.dim() + ib[j]) : Cyclotomic();
      if (ma.is_zero() != mb.is_zero()) return std::nullopt;
      if (ma.is_zero()) continue;
      pairs.emplace_back(i, j);
      ratios.push_back(ma / mb / c);
    }
  }
  const long long m = root_order(ratios);
  const long long mm = m * a.gamma.exponent();
  if (mm > max_order()) throw UnsupportedInput("algebra_iso_even: required root order exceeds the configured maximum");
  const auto logs = discrete_logs(ratios, m);
  std::map<int, std::size_t> var;
  for (int g : support) {
    if (g != 0) var.emplace(g, var.size());
  }
  std::vector<std::vector<long long>> rows;
  std::vector<long long> rhs;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    std::vector<long long> row(var.size(), 0);
    if (i) row[var[i]] += 1;
    if (j) row[var[j]] += 1;
    if (const int s = a.gamma.add(i, j)) row[var.at(s)] -= 1;
    rows.push_back(std::move(row));
    rhs.push_back(logs[k] * (mm / m));
  }
  const auto sol = solve_mod(rows, rhs, mm);
  if (!sol) return std::nullopt;
  Matrix phi(b.dim(), a.dim());
  for (int g : support) {
    const Cyclotomic y = g == 0 ? Cyclotomic(1) : Cyclotomic::root_of_unity(static_cast<int>(mm), (*sol)[var[g]]);
    phi.set(ib[g], ia[g], c * y);
  }
  if (phi * a.mul != b.mul * Matrix::kron(phi, phi) || phi * a.unit != b.unit) return std::nullopt;
  (void)n;
  return phi;
}

FrobeniusReport check_frobenius(const GradedAlgebra& a, const FrobeniusData& f) {
  FrobeniusReport rep;
  const auto& h = *a.host;
  const std::size_t d = a.dim();
  const HostObject aa = h.tensor(a.obj(), a.obj());
  if (!h.is_morphism(a.obj(), aa, f.comul) || !h.is_morphism(a.obj(), h.unit(), f.counit)) {
    rep.host_morphisms = false;
    rep.violations.push_back({"host_morphism", {}, {}, {}, {}, "comul or counit is not a morphism of the host"});
    return rep;
  }
  const Matrix& dl = f.comul;
  compare_tensor(rep.violations, rep.coassoc, "coassoc", Matrix::kron(dl, id(d)) * dl, Matrix::kron(id(d), dl) * dl, d,
                 1);
  compare_tensor(rep.violations, rep.counit, "counit_left", Matrix::kron(f.counit, id(d)) * dl, id(d), d, 1);
  compare_tensor(rep.violations, rep.counit, "counit_right", Matrix::kron(id(d), f.counit) * dl, id(d), d, 1);
  const Matrix dm = dl * a.mul;
  compare_tensor(rep.violations, rep.frobenius_left, "frobenius_left",
                 Matrix::kron(id(d), a.mul) * Matrix::kron(dl, id(d)), dm, d, 2);
  compare_tensor(rep.violations, rep.frobenius_right, "frobenius_right",
                 Matrix::kron(a.mul, id(d)) * Matrix::kron(id(d), dl), dm, d, 2);
  for (std::size_t c = 0; c < d; ++c) {
    for (const auto& [r, v] : dl.col(c)) {
      if (pair_grade(a, r) != a.carrier.mgrades[c]) rep.comul_even = false;
    }
    for (const auto& [r, v] : f.counit.col(c)) {
      if (a.carrier.mgrades[c] != 0) rep.comul_even = false;
    }
  }
  return rep;
}

SeparabilityReport check_separability(const GradedAlgebra& a, const FrobeniusData& f) {
  SeparabilityReport rep;
  const std::size_t d = a.dim();
  rep.delta_separable = (a.mul * f.comul).is_identity();
  if (rep.delta_separable) {
    rep.separable = true;
    rep.zeta = a.unit;
    return rep;
  }
  const auto basis = a.host->hom_basis(a.host->unit(), a.obj());
  if (basis.empty()) return rep;
  // Columns: vec(mu (id x mu) (id x z_k x id) Delta); right-hand side vec(id).
  const Matrix inner = a.mul * Matrix::kron(id(d), a.mul);
  std::vector<SparseVec> cols;
  for (const auto& z : basis) {
    const Matrix mk = inner * Matrix::kron(id(d), Matrix::kron(z, id(d))) * f.comul;
    SparseVec v;
    for (std::size_t c = 0; c < d; ++c) {
      for (const auto& [r, x] : mk.col(c)) v.emplace_back(static_cast<std::uint32_t>(c * d + r), x);
    }
    cols.push_back(std::move(v));
  }
  const Matrix sys = Matrix::from_columns(d * d, std::move(cols));
  Matrix rhs(d * d, 1);
  SparseVec idv;
  for (std::size_t c = 0; c < d; ++c) idv.emplace_back(static_cast<std::uint32_t>(c * d + c), Cyclotomic(1));
  rhs.set_col(0, idv);
  const auto sol = solve(sys, rhs);
  if (!sol) return rep;
  Matrix zeta(d, 1);
  for (const auto& [k, x] : sol->col(0)) zeta += x * basis[k];
  rep.separable = true;
  rep.zeta = zeta;
  return rep;
}

std::pair<GradedAlgebra, FrobeniusData> twist_frobenius(const GradedAlgebra& a, const FrobeniusData& f,
                                                        const Cochain2& kappa) {
  GradedAlgebra ta = twist_algebra(a, kappa);
  FrobeniusData tf = f;
  const std::size_t d = a.dim();
  for (std::size_t c = 0; c < d; ++c) {
    SparseVec col = f.comul.col(c);
    for (auto& [r, v] : col) v = kappa(a.carrier.mgrades[r / d], a.carrier.mgrades[r % d]).inverse() * v;
    tf.comul.set_col(c, std::move(col));
  }
  return {std::move(ta), std::move(tf)};
}

GradedCommReport check_graded_commutative(const GradedAlgebra& a, const Cochain2& kappa) {
  if (kappa.group != a.gamma) throw DomainError("cocycle lives on a different grading group");
  GradedCommReport rep;
  const std::size_t d = a.dim();
  const int n = a.gamma.size();
  const Matrix braided = a.mul * a.host->braiding(a.obj(), a.obj());
  std::vector<std::vector<std::size_t>> blocks(static_cast<std::size_t>(n) * n);
  for (std::size_t c = 0; c < d * d; ++c) {
    blocks[a.carrier.mgrades[c / d] * n + a.carrier.mgrades[c % d]].push_back(c);
  }
  bool rank_le_one = true;
  std::vector<std::optional<Cyclotomic>> defect(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& cols = blocks[i * n + j];
      if (cols.empty()) continue;
      const Matrix l = braided.select_cols(cols), m = a.mul.select_cols(cols);
      if (l != kappa(i, j) * m) {
        rep.ok = false;
        const std::size_t before = rep.violations.size();
        compare_maps(rep.violations, "graded_commutative", {i, j}, l, kappa(i, j) * m);
        if (rep.violations.size() > before) rep.violations.back().entry[1] = static_cast<long>(cols[rep.violations.back().entry[1]]);
      }
      if (rank(m) > 1) {
        rank_le_one = false;
        continue;
      }
      if (m.is_zero()) continue;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m.col(c).empty()) continue;
        const auto& [r, v] = m.col(c).front();
        const Cyclotomic lam = l.get(r, c) / v;
        if (l == lam * m) defect[i * n + j] = lam;
        break;
      }
    }
  }
  if (rank_le_one) rep.defect = std::move(defect);
  return rep;
}

GradedAlgebra opposite_algebra(const GradedAlgebra& a) {
  GradedAlgebra out = a;
  out.mul = a.mul * a.host->braiding(a.obj(), a.obj());
  return out;
}

std::optional<Cochain2> solve_pointed_obstruction(const FinAbGroup& gamma, const Cochain3& psi) {
  if (psi.group != gamma) throw DomainError("psi lives on a different group");
  const int n = gamma.size();
  const long long m = root_order(psi.values);
  const long long mm = m * gamma.exponent();
  if (mm > max_order()) throw UnsupportedInput("obstruction: required root order exceeds the configured maximum");
  const auto logs = discrete_logs(psi.values, m);
  auto var = [n](int i, int j) { return (i - 1) * (n - 1) + (j - 1); };
  const std::size_t nv = static_cast<std::size_t>(n - 1) * (n - 1);
  std::vector<std::vector<long long>> rows;
  std::vector<long long> rhs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        std::vector<long long> row(nv, 0);
        auto put = [&](int x, int y, long long s) {
          if (x && y) row[var(x, y)] += s;
        };
        put(i, j, 1);
        put(gamma.add(i, j), k, 1);
        put(j, k, -1);
        put(i, gamma.add(j, k), -1);
        rows.push_back(std::move(row));
        rhs.push_back(logs[(static_cast<std::size_t>(i) * n + j) * n + k] * (mm / m));
      }
    }
  }
  const auto sol = solve_mod(rows, rhs, mm);
  if (!sol) return std::nullopt;
  Cochain2 omega = Cochain2::trivial(gamma);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) omega(i, j) = Cyclotomic::root_of_unity(static_cast<int>(mm), (*sol)[var(i, j)]);
  const auto check = check_pointed_model({gamma, psi, omega});
  if (!check.associative) throw ConsistencyError("obstruction: solution fails verification");
  return omega;
}

std::pair<GradedAlgebra, FrobeniusData> build_twisted_group_algebra(const Host& host, const FinAbGroup& gamma,
                                                                    const Cochain2& omega,
                                                                    std::vector<HostObject> components) {
  if (omega.group != gamma) throw DomainError("omega lives on a different group");
  const auto coc = check_cocycle2(omega);
  if (!coc.is_normalized || !coc.is_cocycle) {
    throw DomainError("omega is not a normalized 2-cocycle; solve the pointed obstruction first (solve_pointed_obstruction)");
  }
  const int n = gamma.size();
  if (components.empty()) {
    if (host->kind() != HostKind::GradedVec || host->group() != gamma) {
      throw DomainError("components must be given unless the host is GradedVec over the grading group");
    }
    for (int i = 0; i < n; ++i) components.push_back(host->graded_object({i}));
  }
  if (static_cast<int>(components.size()) != n) throw DomainError("one component per group element expected");
  if (!(components[0] == host->unit())) throw DomainError("component at grade 0 must be the tensor unit");
  for (int i = 0; i < n; ++i) {
    if (components[i].dim != 1) throw DomainError("twisted group algebra components must be one-dimensional");
    for (int j = 0; j < n; ++j) {
      if (!(host->tensor(components[i], components[j]) == components[gamma.add(i, j)])) {
        throw DomainError("components do not multiply according to the group law");
      }
    }
  }
  GradedAlgebra a;
  a.host = host;
  a.gamma = gamma;
  HostObject obj = host->zero_object();
  for (const auto& c : components) obj = host->direct_sum(obj, c);
  a.carrier.obj = std::move(obj);
  for (int i = 0; i < n; ++i) a.carrier.mgrades.push_back(i);
  a.mul = Matrix(n, static_cast<std::size_t>(n) * n);
  FrobeniusData f{Matrix(static_cast<std::size_t>(n) * n, n), Matrix(1, n)};
  const Cyclotomic inv_n = Cyclotomic::rational(1, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a.mul.set(gamma.add(i, j), i * n + j, omega(i, j));
      f.comul.set(i * n + j, gamma.add(i, j), inv_n * omega(i, j).inverse());
    }
  }
  a.unit = Matrix(n, 1);
  a.unit.set(0, 0, 1);
  f.counit.set(0, 0, n);
  return {std::move(a), std::move(f)};
}

PointedModelReport check_pointed_model(const PointedAlgebraModel& m) {
  PointedModelReport rep;
  const auto& g = m.gamma;
  const int n = g.size();
  const auto& w = m.omega;
  const auto& p = m.psi;
  const Cyclotomic inv_n = Cyclotomic::rational(1, n);
  auto delta = [&](int i, int j) { return inv_n * w(i, j).inverse(); };
  auto add = [&](const char* check, std::vector<long> idx, const Cyclotomic& l, const Cyclotomic& r) {
    if (rep.violations.size() < 32) rep.violations.push_back({check, std::move(idx), l, r, {}, ""});
  };
  for (int i = 0; i < n; ++i) {
    if (!w(0, i).is_one() || !w(i, 0).is_one()) {
      rep.normalized = false;
      add("normalized", {i}, w(0, i), w(i, 0));
    }
    // counit: eps_0 * Delta^{0,i} = 1 with eps_0 = |Gamma|
    const Cyclotomic cl = Cyclotomic(n) * delta(0, i), cr = Cyclotomic(n) * delta(i, 0);
    if (!cl.is_one() || !cr.is_one()) {
      rep.counit = false;
      add("counit", {i}, cl, cr);
    }
    Cyclotomic s;
    for (int j = 0; j < n; ++j) s += w(j, g.sub(i, j)) * delta(j, g.sub(i, j));
    if (!s.is_one()) {
      rep.delta_separable = false;
      add("delta_separable", {i}, s, 1);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Cyclotomic l = w(i, j) * w(g.add(i, j), k);
        const Cyclotomic r = w(j, k) * w(i, g.add(j, k)) * p(i, j, k);
        if (l != r) {
          rep.associative = false;
          add("associative", {i, j, k}, l, r);
        }
        const Cyclotomic cl = delta(i, j) * delta(g.add(i, j), k) * p(i, j, k);
        const Cyclotomic cr = delta(j, k) * delta(i, g.add(j, k));
        if (cl != cr) {
          rep.coassociative = false;
          add("coassociative", {i, j, k}, cl, cr);
        }
      }
    }
  }
  return rep;
}

}  // namespace gradalg
