#include "gradalg/induced.hpp"

#include <algorithm>

#include "gradalg/errors.hpp"
#include "gradalg/linalg.hpp"
#include "gradalg/zmod.hpp"

namespace gradalg {

namespace {

Matrix id(std::size_t n) { return Matrix::identity(n); }

SparseVec vec(const Matrix& f) {
  SparseVec out;
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (const auto& [r, v] : f.col(c)) out.emplace_back(static_cast<std::uint32_t>(c * f.rows() + r), v);
  return out;
}

std::vector<int> induced_grades(const GradedAlgebra& a, std::size_t dx) {
  std::vector<int> g;
  for (std::size_t i = 0; i < dx; ++i)
    for (int ag : a.carrier.mgrades) g.push_back(ag);
  return g;
}

// First or last nonzero entry in column-major order.
std::optional<std::pair<std::size_t, std::size_t>> pivot_entry(const Matrix& f, bool last) {
  std::optional<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t c = 0; c < f.cols(); ++c) {
    if (f.col(c).empty()) continue;
    if (!last) return std::make_pair(static_cast<std::size_t>(f.col(c).front().first), c);
    out = std::make_pair(static_cast<std::size_t>(f.col(c).back().first), c);
  }
  return out;
}

// Isomorphism type name of a subgroup given by its elements.
std::string subgroup_name(const FinAbGroup& g, const std::vector<int>& elems) {
  const int n = static_cast<int>(elems.size());
  if (n == 1) return "1";
  int max_order = 1;
  for (int e : elems) max_order = std::max(max_order, g.element_order(e));
  if (max_order == n) return "Z/" + std::to_string(n);
  if (max_order == 2) {
    int k = 0;
    for (int m = n; m > 1; m /= 2) ++k;
    std::string s = "Z/2";
    for (int t = 1; t < k; ++t) s += "xZ/2";
    return s;
  }
  return "order " + std::to_string(n);
}

std::optional<int> shift_between(const std::map<int, std::size_t>& a, const std::map<int, std::size_t>& b,
                                 const FinAbGroup& g) {
  for (int j = 0; j < g.size(); ++j) {
    std::map<int, std::size_t> s;
    for (const auto& [d, n] : b) s[g.add(d, j)] = n;
    if (s == a) return j;
  }
  return std::nullopt;
}

}  // namespace

std::string group_name(const FinAbGroup& g) {
  if (g.orders().empty()) return "1";
  std::string s;
  for (std::size_t t = 0; t < g.orders().size(); ++t) {
    if (t) s += "x";
    s += "Z/" + std::to_string(g.orders()[t]);
  }
  return s;
}

InducedModule induce(const GradedAlgebra& a, const HostObject& x) {
  return {x, induced_right_module(a, x, std::vector<int>(x.dim, 0))};
}

Matrix induce(const GradedAlgebra& a, const Matrix& f) { return Matrix::kron(f, id(a.dim())); }

Component component(const GradedAlgebra& a, int i) {
  const auto& h = *a.host;
  std::vector<std::size_t> idx;
  for (std::size_t t = 0; t < a.dim(); ++t)
    if (a.carrier.mgrades[t] == i) idx.push_back(t);
  Component out;
  out.inclusion = Matrix(a.dim(), idx.size());
  for (std::size_t t = 0; t < idx.size(); ++t) out.inclusion.set(idx[t], t, 1);
  if (h.kind() == HostKind::GradedVec) {
    std::vector<int> g;
    for (auto t : idx) g.push_back(a.obj().grades[t]);
    out.object = h.graded_object(g);
  } else {
    std::vector<Matrix> rep;
    for (const auto& m : a.obj().rep) {
      Matrix r = m.select(idx, idx);
      if (m * out.inclusion != out.inclusion * r) throw DomainError("homogeneous component is not a subobject");
      rep.push_back(std::move(r));
    }
    out.object = h.rep_object_all(std::move(rep));
  }
  return out;
}

HomInduced hom_A_induced(const GradedAlgebra& a, const HostObject& x, const HostObject& y) {
  const auto& h = *a.host;
  const auto& g = a.gamma;
  const std::size_t da = a.dim();
  HomInduced out;
  const Matrix act_y = Matrix::kron(id(y.dim), a.mul);
  std::vector<Component> comps;
  for (int d = 0; d < g.size(); ++d) comps.push_back(component(a, d));
  for (int d = 0; d < g.size(); ++d) {
    const auto& cd = comps[d];
    if (cd.object.dim == 0) continue;
    const auto gs = h.hom_basis(x, h.tensor(y, cd.object));
    if (!gs.empty()) out.dims_by_grade[d] = gs.size();
    for (const auto& gm : gs) {
      const Matrix gt = Matrix::kron(id(y.dim), cd.inclusion) * gm;
      out.basis.push_back(act_y * Matrix::kron(gt, id(da)));
      out.grades.push_back(d);
    }
    const auto& cm = comps[g.neg(d)];
    if (cm.object.dim == 0) continue;
    const std::size_t nc = h.hom_basis(h.tensor(x, cm.object), y).size();
    if (nc) out.counit_route[d] = nc;
  }

  const auto xg = induced_grades(a, x.dim), yg = induced_grades(a, y.dim);
  const Matrix act_x = Matrix::kron(id(x.dim), a.mul);
  for (std::size_t k = 0; k < out.basis.size(); ++k) {
    const auto& f = out.basis[k];
    if (f * act_x != act_y * Matrix::kron(f, id(da)) || !is_homogeneous(f, xg, yg, g, out.grades[k])) {
      throw ConsistencyError("adjunction produced a non-module morphism");
    }
  }

  const auto hb = h.hom_basis(h.tensor(x, a.obj()), h.tensor(y, a.obj()));
  if (!hb.empty()) {
    std::vector<SparseVec> eqs;
    for (const auto& b : hb) eqs.push_back(vec(b * act_x - act_y * Matrix::kron(b, id(da))));
    const std::size_t rows = y.dim * da * x.dim * da * da;
    const Matrix ns = nullspace(Matrix::from_columns(rows, std::move(eqs)));
    std::map<int, SpanBuilder> spans;
    for (std::size_t c = 0; c < ns.cols(); ++c) {
      Matrix f(y.dim * da, x.dim * da);
      for (const auto& [k, v] : ns.col(c)) f += v * hb[k];
      for (const auto& [d, fd] : grade_components(f, xg, yg, g)) {
        spans.try_emplace(d, fd.rows() * fd.cols()).first->second.add(vec(fd));
      }
    }
    for (const auto& [d, sp] : spans)
      if (sp.dim()) out.direct_route[d] = sp.dim();
  }
  out.routes_agree = out.dims_by_grade == out.counit_route && out.dims_by_grade == out.direct_route;
  return out;
}

std::size_t StabilizerData::index(int g) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) throw DomainError("element not in the stabilizer");
  return static_cast<std::size_t>(it - elements.begin());
}

StabilizerData stabilizer(const HostObject& x, const GradedAlgebra& a, Gauge gauge) {
  const auto& h = *a.host;
  if (!h.is_simple(x)) throw DomainError("stabilizer requires a simple object");
  StabilizerData st;
  for (int i = 0; i < a.gamma.size(); ++i) {
    const auto c = component(a, i);
    if (c.object.dim == 0) continue;
    const HostObject xi = h.tensor(x, c.object);
    if (xi.dim != x.dim) continue;
    const auto hb = h.hom_basis(x, xi);
    if (hb.size() != 1 || !inverse(hb[0])) continue;
    const auto piv = pivot_entry(hb[0], gauge == Gauge::LastPivot);
    st.elements.push_back(i);
    st.varphi.push_back(hb[0].get(piv->first, piv->second).inverse() * hb[0]);
  }
  if (st.elements.empty() || st.elements.front() != 0) throw ConsistencyError("stabilizer misses the neutral element");
  for (int s : st.elements)
    for (int t : st.elements)
      if (!std::binary_search(st.elements.begin(), st.elements.end(), a.gamma.add(s, t))) {
        throw ConsistencyError("stabilizer is not closed under addition");
      }
  return st;
}

void sigma_cocycle(StabilizerData& st, const HostObject& x, const GradedAlgebra& a) {
  const auto& g = a.gamma;
  const std::size_t n = st.elements.size(), da = a.dim();
  const auto grades = induced_grades(a, x.dim);
  const Matrix act = Matrix::kron(id(x.dim), a.mul);
  st.phi.clear();
  for (std::size_t k = 0; k < n; ++k) {
    const auto c = component(a, st.elements[k]);
    const Matrix vt = Matrix::kron(id(x.dim), c.inclusion) * st.varphi[k];
    Matrix p = act * Matrix::kron(vt, id(da));
    if (p * act != act * Matrix::kron(p, id(da)) || !is_homogeneous(p, grades, grades, g, st.elements[k])) {
      throw ConsistencyError("phi_s is not a homogeneous module endomorphism");
    }
    st.phi.push_back(std::move(p));
  }
  st.sigma.assign(n * n, Cyclotomic());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix lhs = st.phi[j] * st.phi[i];
      const Matrix& tgt = st.phi[st.index(g.add(st.elements[i], st.elements[j]))];
      const auto piv = pivot_entry(tgt, false);
      const Cyclotomic s = lhs.get(piv->first, piv->second) / tgt.get(piv->first, piv->second);
      if (lhs != s * tgt) throw ConsistencyError("phi composites are not proportional");
      st.sigma[i * n + j] = s;
    }
  st.sigma_cocycle = true;
  st.sigma_symmetric = true;
  for (int s : st.elements)
    for (int t : st.elements) {
      if (st.sigma_at(s, t) != st.sigma_at(t, s)) st.sigma_symmetric = false;
      for (int u : st.elements) {
        if (st.sigma_at(s, t) * st.sigma_at(g.add(s, t), u) != st.sigma_at(t, u) * st.sigma_at(s, g.add(t, u))) {
          st.sigma_cocycle = false;
        }
      }
    }
  st.trivializer.reset();
  if (!st.sigma_symmetric) return;
  try {
    const long long m = root_order(st.sigma);
    const long long mm = m * g.exponent();
    if (mm > max_order()) return;
    const auto logs = discrete_logs(st.sigma, m);
    std::vector<std::vector<long long>> rows;
    std::vector<long long> rhs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<long long> row(n, 0);
        row[i] += 1;
        row[j] += 1;
        row[st.index(g.add(st.elements[i], st.elements[j]))] -= 1;
        rows.push_back(std::move(row));
        rhs.push_back(logs[i * n + j] * (mm / m));
      }
    std::vector<long long> zero(n, 0);
    zero[0] = 1;
    rows.push_back(zero);
    rhs.push_back(0);
    const auto sol = solve_mod(rows, rhs, mm);
    if (!sol) return;
    std::vector<Cyclotomic> tau;
    for (long long e : *sol) tau.push_back(Cyclotomic::root_of_unity(static_cast<int>(mm), e));
    st.trivializer = std::move(tau);
  } catch (const UnsupportedInput&) {
  }
}

SchurReport graded_schur_report(const HostObject& x, const HostObject& y, const GradedAlgebra& a) {
  const auto& h = *a.host;
  const auto& g = a.gamma;
  if (!h.is_simple(x) || !h.is_simple(y)) throw DomainError("graded Schur report requires simple objects");
  SchurReport rep;
  rep.hom = hom_A_induced(a, x, y);
  rep.end_dims = hom_A_induced(a, x, x).dims_by_grade;
  const auto end_y = hom_A_induced(a, y, y).dims_by_grade;
  if (rep.hom.dim() == 0) {
    rep.zero_or_graded_iso = true;
  } else {
    rep.zero_or_graded_iso = shift_between(rep.hom.dims_by_grade, rep.end_dims, g).has_value() &&
                             shift_between(rep.hom.dims_by_grade, end_y, g).has_value();
  }
  rep.homogeneous_invertible = true;
  for (const auto& f : rep.hom.basis)
    if (!inverse(f)) rep.homogeneous_invertible = false;
  rep.components_at_most_one = true;
  for (const auto& [d, n] : rep.hom.dims_by_grade)
    if (n > 1) rep.components_at_most_one = false;

  // observed: occupied grades shifted to contain 0
  if (rep.hom.dim() == 0) {
    rep.pattern = "0";
  } else if (rep.hom.dim() == 1) {
    rep.pattern = "k";
  } else {
    std::vector<int> occ;
    const int base = rep.hom.dims_by_grade.begin()->first;
    for (const auto& [d, n] : rep.hom.dims_by_grade) occ.push_back(g.sub(d, base));
    std::sort(occ.begin(), occ.end());
    rep.pattern = "k(" + subgroup_name(g, occ) + ")";
  }
  bool related = false;
  for (int i = 0; i < g.size() && !related; ++i) {
    const auto c = component(a, i);
    if (c.object.dim && h.find_isomorphism(x, h.tensor(y, c.object))) related = true;
  }
  if (!related) {
    rep.expected_pattern = "0";
  } else {
    const auto st = stabilizer(x, a);
    rep.expected_pattern = st.elements.size() == 1 ? "k" : "k(" + subgroup_name(g, st.elements) + ")";
  }
  return rep;
}

InducedSimplicity induced_simple(const HostObject& x, const GradedAlgebra& a,
                                 const std::vector<HostObject>& candidates) {
  InducedSimplicity out;
  const std::size_t dxa = x.dim * a.dim();
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const auto& y = candidates[k];
    if (y.dim == 0) continue;
    const auto hom = hom_A_induced(a, x, y);
    if (hom.basis.empty()) continue;
    const std::size_t dya = y.dim * a.dim();
    std::vector<Matrix> trials = hom.basis;
    Matrix generic(dya, dxa);
    for (std::size_t t = 0; t < hom.basis.size(); ++t) generic += Cyclotomic(static_cast<long long>(t * t + 1)) * hom.basis[t];
    trials.push_back(generic);
    bool iso = false, epi = false;
    for (const auto& f : trials) {
      const std::size_t r = rank(f);
      if (r == dya && dya == dxa) iso = true;
      if (r == dya) epi = true;
    }
    if (epi && !iso) {
      out.simple = false;
      out.witness = k;
      return out;
    }
  }
  return out;
}

}  // namespace gradalg
