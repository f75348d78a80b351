#pragma once

#include <optional>
#include <vector>

#include "gradalg/group.hpp"
#include "gradalg/report.hpp"
#include "gradalg/scalar.hpp"

namespace gradalg {

struct Cochain1 {
  FinAbGroup group;
  std::vector<Cyclotomic> values;

  static Cochain1 trivial(const FinAbGroup& g) { return {g, std::vector<Cyclotomic>(g.size(), 1)}; }
  const Cyclotomic& operator()(int i) const { return values[i]; }
  Cyclotomic& operator()(int i) { return values[i]; }
  friend bool operator==(const Cochain1&, const Cochain1&) = default;
};

struct Cochain2 {
  FinAbGroup group;
  std::vector<Cyclotomic> values;  // row-major, values[i * |G| + j]

  static Cochain2 trivial(const FinAbGroup& g) {
    return {g, std::vector<Cyclotomic>(static_cast<std::size_t>(g.size()) * g.size(), 1)};
  }
  const Cyclotomic& operator()(int i, int j) const { return values[static_cast<std::size_t>(i) * group.size() + j]; }
  Cyclotomic& operator()(int i, int j) { return values[static_cast<std::size_t>(i) * group.size() + j]; }
  bool is_trivial() const;
  Cochain2 inverse() const;
  friend Cochain2 operator*(const Cochain2& a, const Cochain2& b);
  friend bool operator==(const Cochain2&, const Cochain2&) = default;
};

struct Cochain3 {
  FinAbGroup group;
  std::vector<Cyclotomic> values;  // i-major

  static Cochain3 trivial(const FinAbGroup& g) {
    const std::size_t n = g.size();
    return {g, std::vector<Cyclotomic>(n * n * n, 1)};
  }
  const Cyclotomic& operator()(int i, int j, int k) const {
    const std::size_t n = group.size();
    return values[(i * n + j) * n + k];
  }
  Cyclotomic& operator()(int i, int j, int k) {
    const std::size_t n = group.size();
    return values[(i * n + j) * n + k];
  }
  bool is_trivial() const;
  friend bool operator==(const Cochain3&, const Cochain3&) = default;
};

struct AbelianCocycleData {
  Cochain3 psi;
  Cochain2 omega_braid;
};

Cochain2 d1(const Cochain1& tau);
Cochain3 d2(const Cochain2& kappa);

struct CocycleReport {
  bool is_normalized = true;
  bool is_cocycle = true;
  std::vector<Violation> violations;
};
CocycleReport check_cocycle2(const Cochain2& kappa);
CocycleReport check_cocycle3(const Cochain3& psi);

struct BicharacterReport {
  bool ok = true;
  std::vector<Violation> violations;
};
BicharacterReport check_bicharacter(const Cochain2& kappa);

enum class SolveMethod { Linear, Exhaustive };

// tau with kappa2 = d1(tau) * kappa, or none.
std::optional<Cochain1> cohomologous(const Cochain2& kappa, const Cochain2& kappa2,
                                     SolveMethod method = SolveMethod::Linear);

struct Abelian3Report {
  bool psi_normalized = true;
  bool psi_cocycle = true;
  bool hexagon1 = true;
  bool hexagon2 = true;
  std::vector<Cyclotomic> q;
  bool b_bimultiplicative = true;
  std::vector<Violation> violations;
  bool ok() const { return psi_normalized && psi_cocycle && hexagon1 && hexagon2; }
};
Abelian3Report validate_abelian3(const AbelianCocycleData& data);

// Least common multiple of the multiplicative orders of all values; throws
// UnsupportedInput if some value is not a root of unity.
long long root_order(const std::vector<Cyclotomic>& values);
// Discrete logarithms of the values w.r.t. zeta_m.
std::vector<long long> discrete_logs(const std::vector<Cyclotomic>& values, long long m);

}  // namespace gradalg
