#include <functional>
#include <random>

#include "doctest.h"
#include "gradalg/cohomology.hpp"
#include "gradalg/errors.hpp"

using namespace gradalg;

namespace {

Cyclotomic z(int n, long long e = 1) { return Cyclotomic::root_of_unity(n, e); }

Cochain2 table(const FinAbGroup& g, const std::function<Cyclotomic(std::vector<int>, std::vector<int>)>& f) {
  Cochain2 k = Cochain2::trivial(g);
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) k(i, j) = f(g.digits(i), g.digits(j));
  return k;
}

Cochain2 z2_kappa(const Cyclotomic& v) {
  Cochain2 k = Cochain2::trivial(FinAbGroup({2}));
  k(1, 1) = v;
  return k;
}

// Brute force over all normalized mu_m-valued tau, written independently of the library solver.
bool exists_tau_brute(const Cochain2& a, const Cochain2& b, int m) {
  const auto& g = a.group;
  const int n = g.size();
  std::vector<int> e(n, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        ok = z(m, e[i] + e[j] - e[g.add(i, j)]) * a(i, j) == b(i, j);
    if (ok) return true;
    int k = 1;
    while (k < n && ++e[k] == m) e[k++] = 0;
    if (k == n) return false;
  }
}

}  // namespace

TEST_CASE("group enumeration") {
  FinAbGroup g({2, 3});
  CHECK(g.size() == 6);
  CHECK(g.digits(4) == std::vector<int>{1, 1});
  CHECK(g.index({1, 2}) == 5);
  CHECK(g.add(4, 5) == g.index({0, 0}));
  CHECK(g.exponent() == 6);
  CHECK(g.element_order(g.index({1, 1})) == 6);
  CHECK(FinAbGroup().size() == 1);
}

TEST_CASE("d1 examples") {
  FinAbGroup z2({2});
  Cochain1 t = Cochain1::trivial(z2);
  CHECK(d1(t).is_trivial());
  t(1) = z(4);
  const auto d = d1(t);
  CHECK(d(1, 1) == Cyclotomic(-1));
  CHECK(d(0, 1).is_one());
  CHECK(d(1, 0).is_one());

  FinAbGroup z3({3});
  Cochain1 t3 = Cochain1::trivial(z3);
  t3(1) = z(3);
  const auto d3 = d1(t3);
  // Independent enumeration: dtau(i,j) = tau(i) tau(j) / tau((i+j) mod 3).
  const Cyclotomic tv[3] = {1, z(3), 1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(d3(i, j) == tv[i] * tv[j] / tv[(i + j) % 3]);
  CHECK(d3(1, 1) == z(3, 2));
  CHECK(d3(1, 2) == z(3));
  CHECK(d3(2, 2) == z(3, 2));
  CHECK(d3(2, 1) == z(3));
}

TEST_CASE("d2 examples and d2 of d1") {
  CHECK(d2(Cochain2::trivial(FinAbGroup({3}))).is_trivial());
  CHECK(d2(z2_kappa(z(4))).is_trivial());
  std::mt19937_64 rng(1);
  for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {6}, {2, 4}, {4, 4}, {2, 2, 2}}) {
    FinAbGroup g(orders);
    for (int rep = 0; rep < 3; ++rep) {
      Cochain1 t = Cochain1::trivial(g);
      for (int i = 1; i < g.size(); ++i) t(i) = z(8, static_cast<long long>(rng() % 8));
      CHECK(d2(d1(t)).is_trivial());
      CHECK(check_cocycle2(d1(t)).is_cocycle);
    }
  }
}

TEST_CASE("check_cocycle2") {
  const auto triv = check_cocycle2(Cochain2::trivial(FinAbGroup({2, 2})));
  CHECK(triv.is_normalized);
  CHECK(triv.is_cocycle);
  CHECK(triv.violations.empty());
  FinAbGroup v4({2, 2});
  const auto k = table(v4, [](auto a, auto b) { return Cyclotomic(a[1] * b[0] % 2 ? -1 : 1); });
  const auto r = check_cocycle2(k);
  CHECK(r.is_normalized);
  CHECK(r.is_cocycle);
  CHECK(r.violations.empty());
  Cochain2 bad = Cochain2::trivial(FinAbGroup({2}));
  bad(1, 0) = -1;
  const auto rb = check_cocycle2(bad);
  CHECK_FALSE(rb.is_normalized);
  CHECK_FALSE(rb.violations.empty());
}

TEST_CASE("check_bicharacter") {
  CHECK(check_bicharacter(z2_kappa(-1)).ok);
  const auto r = check_bicharacter(z2_kappa(z(4)));
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.violations.empty());
  FinAbGroup v4({2, 2});
  CHECK(check_bicharacter(table(v4, [](auto a, auto b) { return Cyclotomic(a[0] * b[1] % 2 ? -1 : 1); })).ok);
  // every bicharacter is a cocycle
  FinAbGroup z4({4});
  for (int e = 0; e < 4; ++e) {
    const auto k = table(z4, [e](auto a, auto b) { return z(4, e * a[0] * b[0]); });
    CHECK(check_bicharacter(k).ok);
    CHECK(check_cocycle2(k).is_cocycle);
  }
}

TEST_CASE("cohomologous") {
  FinAbGroup z2({2});
  const auto triv = Cochain2::trivial(z2);
  const auto same = cohomologous(z2_kappa(-1), z2_kappa(-1));
  REQUIRE(same);
  for (const auto& v : same->values) CHECK(v.is_one());

  const auto tau = cohomologous(triv, z2_kappa(-1));
  REQUIRE(tau);
  CHECK((*tau)(1) * (*tau)(1) == Cyclotomic(-1));
  CHECK(exists_tau_brute(triv, z2_kappa(-1), 4));

  FinAbGroup v4({2, 2});
  const auto nc = table(v4, [](auto a, auto b) { return Cyclotomic(a[1] * b[0] % 2 ? -1 : 1); });
  CHECK_FALSE(cohomologous(Cochain2::trivial(v4), nc));
  CHECK_FALSE(cohomologous(Cochain2::trivial(v4), nc, SolveMethod::Exhaustive));
  CHECK_FALSE(exists_tau_brute(Cochain2::trivial(v4), nc, 2));
  CHECK_FALSE(exists_tau_brute(Cochain2::trivial(v4), nc, 4));

  CHECK_THROWS_AS(cohomologous(triv, z2_kappa(2)), UnsupportedInput);
}

TEST_CASE("cohomologous recovers generated coboundaries") {
  std::mt19937_64 rng(9);
  for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {6}, {2, 4}, {3, 3}}) {
    FinAbGroup g(orders);
    const auto base = table(g, [&](auto a, auto b) {
      long long e = 0;
      for (std::size_t t = 0; t < a.size(); ++t) e += static_cast<long long>(a[t]) * b[(t + 1) % a.size()];
      return z(g.exponent(), e % g.exponent());
    });
    for (int rep = 0; rep < 3; ++rep) {
      Cochain1 t = Cochain1::trivial(g);
      for (int i = 1; i < g.size(); ++i) t(i) = z(4, static_cast<long long>(rng() % 4));
      const auto target = d1(t) * base;
      const auto found = cohomologous(base, target);
      REQUIRE(found);
      CHECK(d1(*found) * base == target);
    }
  }
}

TEST_CASE("linear and exhaustive cohomologous agree") {
  std::mt19937_64 rng(21);
  for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {2, 2}}) {
    FinAbGroup g(orders);
    for (int rep = 0; rep < 6; ++rep) {
      const long long e = g.exponent();
      std::vector<long long> coef(g.orders().size() * g.orders().size());
      for (auto& c : coef) c = static_cast<long long>(rng() % e);
      const auto k = table(g, [&](auto a, auto b) {
        long long s = 0;
        for (std::size_t p = 0; p < a.size(); ++p)
          for (std::size_t q = 0; q < b.size(); ++q) s += coef[p * b.size() + q] * a[p] * b[q];
        return z(static_cast<int>(e), s);
      });
      const auto triv = Cochain2::trivial(g);
      CHECK(cohomologous(triv, k).has_value() == cohomologous(triv, k, SolveMethod::Exhaustive).has_value());
    }
  }
}

TEST_CASE("validate_abelian3") {
  FinAbGroup z2({2});
  const auto psi = Cochain3::trivial(z2);
  const auto sv = validate_abelian3({psi, z2_kappa(-1)});
  CHECK(sv.ok());
  CHECK(sv.q[1] == Cyclotomic(-1));
  const auto bad = validate_abelian3({psi, z2_kappa(z(4))});
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.violations.empty());
  const auto triv = validate_abelian3({psi, Cochain2::trivial(z2)});
  CHECK(triv.ok());
  CHECK(triv.q[1].is_one());
  // with trivial psi: both hexagons hold iff Omega is a bicharacter
  FinAbGroup z4({4});
  for (int e = 0; e < 4; ++e) {
    Cochain2 om = Cochain2::trivial(z4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) om(i, j) = z(4, e * i * j);
    om(1, 1) = om(1, 1) * z(4);
    const auto rep = validate_abelian3({Cochain3::trivial(z4), om});
    CHECK((rep.hexagon1 && rep.hexagon2) == check_bicharacter(om).ok);
  }
}
