#include "gradalg/cohomology.hpp"

#include "gradalg/errors.hpp"
#include "gradalg/zmod.hpp"

namespace gradalg {

namespace {

constexpr std::size_t kMaxViolations = 32;

void record(std::vector<Violation>& out, const std::string& check, std::vector<long> idx, const Cyclotomic& lhs,
            const Cyclotomic& rhs) {
  if (out.size() >= kMaxViolations) return;
  Violation v;
  v.check = check;
  v.indices = std::move(idx);
  v.lhs = lhs;
  v.rhs = rhs;
  out.push_back(std::move(v));
}

void same_group(const FinAbGroup& a, const FinAbGroup& b) {
  if (a != b) throw DomainError("cochains live on different groups");
}

}  // namespace

bool Cochain2::is_trivial() const {
  for (const auto& v : values) {
    if (!v.is_one()) return false;
  }
  return true;
}

bool Cochain3::is_trivial() const {
  for (const auto& v : values) {
    if (!v.is_one()) return false;
  }
  return true;
}

Cochain2 Cochain2::inverse() const {
  Cochain2 r = *this;
  for (auto& v : r.values) v = v.inverse();
  return r;
}

Cochain2 operator*(const Cochain2& a, const Cochain2& b) {
  same_group(a.group, b.group);
  Cochain2 r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] *= b.values[i];
  return r;
}

Cochain2 d1(const Cochain1& tau) {
  const auto& g = tau.group;
  Cochain2 r = Cochain2::trivial(g);
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) r(i, j) = tau(i) * tau(j) / tau(g.add(i, j));
  }
  return r;
}

Cochain3 d2(const Cochain2& k) {
  const auto& g = k.group;
  Cochain3 r = Cochain3::trivial(g);
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      for (int l = 0; l < g.size(); ++l) {
        r(i, j, l) = k(j, l) * k(i, g.add(j, l)) / (k(g.add(i, j), l) * k(i, j));
      }
    }
  }
  return r;
}

CocycleReport check_cocycle2(const Cochain2& k) {
  CocycleReport rep;
  const auto& g = k.group;
  for (int i = 0; i < g.size(); ++i) {
    if (!k(i, 0).is_one()) {
      rep.is_normalized = false;
      record(rep.violations, "normalized", {i, 0}, k(i, 0), 1);
    }
    if (!k(0, i).is_one()) {
      rep.is_normalized = false;
      record(rep.violations, "normalized", {0, i}, k(0, i), 1);
    }
  }
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      for (int l = 0; l < g.size(); ++l) {
        const Cyclotomic lhs = k(j, l) * k(i, g.add(j, l));
        const Cyclotomic rhs = k(g.add(i, j), l) * k(i, j);
        if (lhs != rhs) {
          rep.is_cocycle = false;
          record(rep.violations, "cocycle", {i, j, l}, lhs, rhs);
        }
      }
    }
  }
  return rep;
}

CocycleReport check_cocycle3(const Cochain3& p) {
  CocycleReport rep;
  const auto& g = p.group;
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        if ((i == 0 || j == 0 || l == 0) && !p(i, j, l).is_one()) {
          rep.is_normalized = false;
          record(rep.violations, "normalized", {i, j, l}, p(i, j, l), 1);
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const Cyclotomic lhs = p(j, k, l) * p(i, g.add(j, k), l) * p(i, j, k);
          const Cyclotomic rhs = p(g.add(i, j), k, l) * p(i, j, g.add(k, l));
          if (lhs != rhs) {
            rep.is_cocycle = false;
            record(rep.violations, "cocycle", {i, j, k, l}, lhs, rhs);
          }
        }
      }
    }
  }
  return rep;
}

BicharacterReport check_bicharacter(const Cochain2& k) {
  BicharacterReport rep;
  const auto& g = k.group;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      for (int l = 0; l < g.size(); ++l) {
        const Cyclotomic left = k(g.add(i, j), l), left_rhs = k(i, l) * k(j, l);
        if (left != left_rhs) {
          rep.ok = false;
          record(rep.violations, "multiplicative_first", {i, j, l}, left, left_rhs);
        }
        const Cyclotomic right = k(i, g.add(j, l)), right_rhs = k(i, j) * k(i, l);
        if (right != right_rhs) {
          rep.ok = false;
          record(rep.violations, "multiplicative_second", {i, j, l}, right, right_rhs);
        }
      }
    }
  }
  return rep;
}

long long root_order(const std::vector<Cyclotomic>& values) {
  long long m = 1;
  for (const auto& v : values) {
    if (v.is_one()) continue;
    if (v == Cyclotomic(-1)) {
      m = lcm_ll(m, 2);
      continue;
    }
    auto o = v.multiplicative_order();
    if (!o) throw UnsupportedInput("value " + v.to_string() + " is not a root of unity");
    m = lcm_ll(m, *o);
  }
  return m;
}

std::vector<long long> discrete_logs(const std::vector<Cyclotomic>& values, long long m) {
  std::vector<Cyclotomic> powers;
  powers.reserve(m);
  const Cyclotomic z = Cyclotomic::root_of_unity(static_cast<int>(m), 1);
  Cyclotomic w = 1;
  for (long long e = 0; e < m; ++e) {
    powers.push_back(w);
    w *= z;
  }
  std::vector<long long> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    long long found = -1;
    if (v.is_one()) found = 0;
    for (long long e = 1; e < m && found < 0; ++e) {
      if (powers[e] == v) found = e;
    }
    if (found < 0) throw UnsupportedInput("value " + v.to_string() + " is not a power of z" + std::to_string(m));
    out.push_back(found);
  }
  return out;
}

std::optional<Cochain1> cohomologous(const Cochain2& kappa, const Cochain2& kappa2, SolveMethod method) {
  same_group(kappa.group, kappa2.group);
  const auto& g = kappa.group;
  const int n = g.size();
  std::vector<Cyclotomic> ratio(kappa.values.size());
  for (std::size_t i = 0; i < ratio.size(); ++i) ratio[i] = kappa2.values[i] / kappa.values[i];
  const long long m = root_order(ratio);
  const long long mm = m * g.exponent();
  if (mm > max_order()) throw UnsupportedInput("cohomologous: required root order exceeds the configured maximum");
  const auto logs = discrete_logs(ratio, m);
  // Unknowns t_1..t_{n-1} (t_0 = 0): t_i + t_j - t_{i+j} = log ratio(i,j) * mm/m.
  std::vector<std::vector<long long>> a;
  std::vector<long long> b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<long long> row(n > 1 ? n - 1 : 0, 0);
      if (i) row[i - 1] += 1;
      if (j) row[j - 1] += 1;
      if (const int s = g.add(i, j)) row[s - 1] -= 1;
      a.push_back(std::move(row));
      b.push_back(logs[static_cast<std::size_t>(i) * n + j] * (mm / m));
    }
  }
  auto sol = method == SolveMethod::Linear ? solve_mod(a, b, mm) : solve_mod_exhaustive(a, b, mm);
  if (!sol) return std::nullopt;
  Cochain1 tau = Cochain1::trivial(g);
  for (int i = 1; i < n; ++i) tau(i) = Cyclotomic::root_of_unity(static_cast<int>(mm), (*sol)[i - 1]);
  if (d1(tau) * kappa != kappa2) throw ConsistencyError("cohomologous: solution fails verification");
  return tau;
}

Abelian3Report validate_abelian3(const AbelianCocycleData& data) {
  const auto& psi = data.psi;
  const auto& om = data.omega_braid;
  same_group(psi.group, om.group);
  Abelian3Report rep;
  const auto c3 = check_cocycle3(psi);
  rep.psi_normalized = c3.is_normalized;
  rep.psi_cocycle = c3.is_cocycle;
  rep.violations = c3.violations;
  const auto& g = psi.group;
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Cyclotomic l1 = om(g.add(i, j), k);
        const Cyclotomic r1 = om(i, k) * om(j, k) * psi(i, j, k) * psi(k, i, j) / psi(i, k, j);
        if (l1 != r1) {
          rep.hexagon1 = false;
          record(rep.violations, "hexagon1", {i, j, k}, l1, r1);
        }
        const Cyclotomic l2 = om(i, g.add(j, k));
        const Cyclotomic r2 = om(i, j) * om(i, k) * psi(j, i, k) / (psi(i, j, k) * psi(j, k, i));
        if (l2 != r2) {
          rep.hexagon2 = false;
          record(rep.violations, "hexagon2", {i, j, k}, l2, r2);
        }
      }
    }
  }
  rep.q.resize(n);
  for (int i = 0; i < n; ++i) rep.q[i] = om(i, i);
  Cochain2 b = Cochain2::trivial(g);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = rep.q[g.add(i, j)] / (rep.q[i] * rep.q[j]);
  }
  rep.b_bimultiplicative = check_bicharacter(b).ok;
  return rep;
}

}  // namespace gradalg
