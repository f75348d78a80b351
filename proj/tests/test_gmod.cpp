#include <random>

#include "doctest.h"
#include "gradalg/errors.hpp"
#include "gradalg/fixtures.hpp"
#include "gradalg/gmod.hpp"
#include "gradalg/linalg.hpp"

using namespace gradalg;
namespace fx = gradalg::fixtures;

namespace {

struct Setting {
  std::string name;
  GradedAlgebra a;
  FrobeniusData f;
  Cochain2 kappa;  // graded-commutativity cocycle (a bicharacter)
  std::vector<HostObject> objects;
  bool single_grade;  // module grading must be constant on objects (RepCat)
};

Cochain2 klein_omega() {
  Cochain2 w = Cochain2::trivial(FinAbGroup({2, 2}));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if ((i & 1) && (j >> 1)) w(i, j) = -1;
  return w;
}

Cochain2 klein_kappa() {
  Cochain2 k = Cochain2::trivial(FinAbGroup({2, 2}));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if ((((i >> 1) & j & 1) + (i & 1 & (j >> 1))) % 2) k(i, j) = -1;
  return k;
}

std::vector<Setting> settings() {
  std::vector<Setting> out;
  const FinAbGroup z2({2});
  {
    auto h = fx::graded_host({2});
    auto [a, f] = build_twisted_group_algebra(h, z2, Cochain2::trivial(z2));
    out.push_back({"vect_z2", a, f, Cochain2::trivial(z2),
                   {h->graded_object({0}), h->graded_object({1}), h->graded_object({0, 1}), h->graded_object({1, 1, 0})},
                   false});
  }
  {
    auto h = fx::super_host();
    auto [a, f] = build_twisted_group_algebra(h, z2, Cochain2::trivial(z2));
    Cochain2 k = Cochain2::trivial(z2);
    k(1, 1) = -1;
    out.push_back({"super", a, f, k, {h->graded_object({0}), h->graded_object({1}), h->graded_object({0, 1})}, false});
  }
  {
    const FinAbGroup g({2, 2});
    auto h = fx::graded_host({2, 2});
    auto [a, f] = build_twisted_group_algebra(h, g, klein_omega());
    out.push_back({"klein", a, f, klein_kappa(), {h->graded_object({0}), h->graded_object({3}), h->graded_object({1, 2})},
                   false});
  }
  {
    auto h = fx::d4_host();
    auto [a, f] = build_twisted_group_algebra(h, z2, Cochain2::trivial(z2), {h->unit(), fx::d4_character(*h, 1, 0)});
    out.push_back({"d4", a, f, Cochain2::trivial(z2),
                   {h->unit(), fx::d4_character(*h, 0, 1), fx::d4_irrep2(*h)}, true});
  }
  return out;
}

std::vector<int> random_grades(const Setting& s, const HostObject& x, std::mt19937_64& rng) {
  const int n = s.a.gamma.size();
  std::vector<int> g(x.dim, static_cast<int>(rng() % n));
  if (!s.single_grade)
    for (auto& v : g) v = static_cast<int>(rng() % n);
  return g;
}

// Random even module automorphism-conjugate of an induced module.
Module scramble(const Module& m, std::mt19937_64& rng) {
  const auto& h = *m.algebra.host;
  const auto basis = h.hom_basis(m.obj(), m.obj());
  for (int attempt = 0; attempt < 20; ++attempt) {
    Matrix t(m.dim(), m.dim());
    for (const auto& b : basis) t += Cyclotomic(static_cast<long long>(rng() % 5) - 2) * b;
    auto comps = grade_components(t, m.carrier.mgrades, m.carrier.mgrades, m.algebra.gamma);
    if (!comps.count(0)) continue;
    if (inverse(comps[0])) return transport(m, comps[0], m.obj());
  }
  return m;
}

Module random_right(const Setting& s, std::mt19937_64& rng) {
  const auto& x = s.objects[rng() % s.objects.size()];
  return scramble(induced_right_module(s.a, x, random_grades(s, x, rng)), rng);
}

Module random_left(const Setting& s, std::mt19937_64& rng) {
  const auto& x = s.objects[rng() % s.objects.size()];
  return scramble(induced_left_module(s.a, x, random_grades(s, x, rng)), rng);
}

}  // namespace

TEST_CASE("regular and induced modules") {
  for (const auto& s : settings()) {
    CAPTURE(s.name);
    CHECK(check_module(regular_module(s.a, false, true)).ok());
    CHECK(check_module(regular_module(s.a, true, false)).ok());
    CHECK(check_module(regular_module(s.a, true, true)).ok());
    std::mt19937_64 rng(1);
    for (int k = 0; k < 5; ++k) {
      CHECK(check_module(random_right(s, rng)).ok());
      CHECK(check_module(random_left(s, rng)).ok());
    }
  }
  auto sh = fx::super_host();
  auto x = fx::degenerate_algebra(sh, sh->graded_object({1}));
  CHECK(check_module(regular_module(x, true, true)).ok());
  auto t = fx::exterior_toy_algebra();
  CHECK(check_algebra(t).ok());
  CHECK(check_module(regular_module(t, true, true)).ok());
}

TEST_CASE("broken unit law") {
  auto s = settings()[0];
  auto m = regular_module(s.a, false, true);
  *m.right = Cyclotomic(2) * *m.right;
  const auto rep = check_module(m);
  CHECK_FALSE(rep.unit);
  bool found = false;
  for (const auto& v : rep.violations) found |= v.check == "right_unit";
  CHECK(found);
}

TEST_CASE("odd action into the wrong grade") {
  auto s = settings()[0];
  auto m = shift_grading(regular_module(s.a, false, true), 1);
  CHECK(check_module(m).ok());
  CHECK(m.carrier.mgrades == std::vector<int>{1, 0});
  m.carrier.mgrades = {0, 0};
  CHECK_FALSE(check_module(m).even);
}

TEST_CASE("twisted modules") {
  const FinAbGroup z2({2});
  auto s = settings()[0];
  auto m = regular_module(s.a, false, true);
  CHECK(twist_module(m, Cochain2::trivial(z2)).right == m.right);
  Cochain2 k = Cochain2::trivial(z2);
  k(1, 1) = -1;
  auto t = twist_module(m, k);
  CHECK(check_module(t).ok());
  CHECK(*t.right == twist_algebra(s.a, k).mul);
  CHECK(*twist_module(t, k.inverse()).right == *m.right);

  std::mt19937_64 rng(9);
  for (const auto& st : settings()) {
    const auto& g = st.a.gamma;
    Cochain1 tau = Cochain1::trivial(g);
    for (int i = 1; i < g.size(); ++i) tau(i) = Cyclotomic::root_of_unity(6, static_cast<int>(rng() % 6));
    const auto kk = d1(tau) * (st.name == "klein" ? klein_omega() : Cochain2::trivial(g));
    auto mm = random_right(st, rng);
    auto tw = twist_module(mm, kk);
    CHECK(check_module(tw).ok());
    // restriction along the even isomorphism A -> A^[d tau] for coboundary twists
    if (st.name != "klein") {
      auto phi = algebra_iso_even(st.a, tw.algebra);
      REQUIRE(phi);
      Module back{st.a, mm.carrier, {}, *tw.right * Matrix::kron(Matrix::identity(mm.dim()), *phi)};
      CHECK(check_module(back).ok());
    }
  }
  Cochain2 bad = Cochain2::trivial(FinAbGroup({3}));
  bad(1, 1) = Cyclotomic::root_of_unity(3, 1);
  auto a3 = build_twisted_group_algebra(fx::graded_host({3}), FinAbGroup({3}), Cochain2::trivial(FinAbGroup({3}))).first;
  CHECK_THROWS_AS(twist_module(regular_module(a3, false, true), bad), DomainError);
}

TEST_CASE("side switching and the bicharacter criterion") {
  const FinAbGroup z2({2});
  for (const auto& s : settings()) {
    CAPTURE(s.name);
    std::mt19937_64 rng(4);
    for (int k = 0; k < 4; ++k) {
      const auto sw = left_from_right_braided(random_right(s, rng), s.kappa);
      CHECK(sw.bimodule.ok());
      auto only_left = sw.module;
      only_left.right.reset();
      const auto back = right_from_left_braided(only_left, s.kappa);
      CHECK(back.bimodule.ok());
    }
  }

  auto toy = fx::exterior_toy_algebra();
  Cochain2 k4 = Cochain2::trivial(z2);
  k4(1, 1) = Cyclotomic::root_of_unity(4, 1);
  CHECK(check_graded_commutative(toy, k4).ok);
  CHECK_FALSE(check_bicharacter(k4).ok);
  const auto sw = left_from_right_braided(shift_grading(regular_module(toy, false, true), 1), k4);
  CHECK(sw.bimodule.assoc);
  CHECK(sw.bimodule.unit);
  CHECK(sw.bimodule.even);
  CHECK_FALSE(sw.bimodule.commute);
  REQUIRE_FALSE(sw.bimodule.violations.empty());
  const auto& v = sw.bimodule.violations.back();
  CHECK(v.check == "commute");
  REQUIRE(v.lhs);
  REQUIRE(v.rhs);
  CHECK(*v.lhs == Cyclotomic(-1) * *v.rhs);

  CHECK_THROWS_AS(left_from_right_braided(regular_module(toy, false, true), Cochain2::trivial(z2)), DomainError);
}

TEST_CASE("tensor over A: coequalizer against idempotent image") {
  for (const auto& s : settings()) {
    CAPTURE(s.name);
    const auto aa = tensor_over_A(regular_module(s.a, false, true), regular_module(s.a, true, false));
    CHECK(graded_dimensions(aa.object) == graded_dimensions(s.a.carrier));
    std::mt19937_64 rng(20);
    for (int k = 0; k < 20; ++k) {
      const auto m = random_right(s, rng);
      const auto n = random_left(s, rng);
      const auto c = tensor_over_A(m, n);
      const auto i = tensor_over_A(m, n, TensorMethod::Idempotent, s.f);
      CHECK(graded_dimensions(c.object) == graded_dimensions(i.object));
      REQUIRE(i.checks);
      CHECK(i.checks->ok());
      // source splits as image plus kernel
      const auto p = *i.idempotent;
      CHECK(rank(p) + nullspace(p).cols() == m.dim() * n.dim());
      CHECK(rank(p) == i.object.dim());
      CHECK(s.a.host->is_morphism(c.object.obj, i.object.obj, *i.from_coequalizer));
    }
  }
}

TEST_CASE("induced modules tensor to x (x) A (x) y") {
  for (const auto& s : settings()) {
    std::mt19937_64 rng(2);
    for (const auto& x : s.objects)
      for (const auto& y : s.objects) {
        const auto gx = random_grades(s, x, rng), gy = random_grades(s, y, rng);
        const auto m = induced_right_module(s.a, x, gx);
        const auto n = induced_left_module(s.a, y, gy);
        const auto t = tensor_over_A(m, n);
        std::map<int, std::size_t> want;
        for (int a : gx)
          for (int b : s.a.carrier.mgrades)
            for (int c : gy) ++want[s.a.gamma.add(s.a.gamma.add(a, b), c)];
        CHECK(graded_dimensions(t.object) == want);
      }
  }
}

TEST_CASE("without Frobenius data the idempotent method is refused") {
  auto s = settings()[0];
  CHECK_THROWS_AS(tensor_over_A(regular_module(s.a, false, true), regular_module(s.a, true, false),
                                TensorMethod::Idempotent),
                  DomainError);
  auto f = s.f;
  f.comul = Cyclotomic(2) * f.comul;
  CHECK_THROWS_AS(tensor_over_A(regular_module(s.a, false, true), regular_module(s.a, true, false),
                                TensorMethod::Idempotent, f),
                  DomainError);
}

TEST_CASE("bimodule tensor product keeps both actions") {
  auto s = settings()[1];
  auto ab = regular_module(s.a, true, true);
  const auto t = tensor_over_A(ab, ab);
  REQUIRE(t.module);
  CHECK(check_module(*t.module).ok());
  CHECK(t.module->is_left());
  CHECK(t.module->is_right());
}

TEST_CASE("graded tensor product") {
  for (const auto& s : settings()) {
    CAPTURE(s.name);
    std::mt19937_64 rng(33);
    for (int k = 0; k < 5; ++k) {
      const auto m = random_right(s, rng), n = random_right(s, rng);
      const auto t = graded_tensor(m, n, s.kappa, s.f);
      CHECK(check_module(t.module).ok());
      CHECK_FALSE(t.module.is_left());
      REQUIRE(t.checks);
      CHECK(t.checks->ok());
      REQUIRE(t.image_agrees);
      CHECK(*t.image_agrees);
      const auto unit = graded_tensor(m, regular_module(s.a, false, true), s.kappa);
      CHECK(graded_dimensions(unit.module.carrier) == graded_dimensions(m.carrier));
      const auto u = graded_tensor_right_unitor(m, s.kappa);
      CHECK(u.invertible);
      CHECK(u.module_morphism);
    }
    for (int k = 0; k < 2; ++k) {
      const auto m = random_right(s, rng), n = random_right(s, rng), l = random_right(s, rng);
      const auto left = graded_tensor(graded_tensor(m, n, s.kappa).module, l, s.kappa);
      const auto right = graded_tensor(m, graded_tensor(n, l, s.kappa).module, s.kappa);
      CHECK(graded_dimensions(left.module.carrier) == graded_dimensions(right.module.carrier));
      const auto assoc = graded_tensor_associator(m, n, l, s.kappa);
      CHECK(assoc.invertible);
      CHECK(assoc.module_morphism);
    }
  }
}

TEST_CASE("graded tensor of induced modules") {
  for (const auto& s : settings()) {
    CAPTURE(s.name);
    std::mt19937_64 rng(8);
    for (const auto& x : s.objects)
      for (const auto& y : s.objects) {
        const auto gx = random_grades(s, x, rng), gy = random_grades(s, y, rng);
        const auto t = graded_tensor(induced_right_module(s.a, x, gx), induced_right_module(s.a, y, gy), s.kappa);
        std::vector<int> gxy;
        for (int a : gx)
          for (int b : gy) gxy.push_back(s.a.gamma.add(a, b));
        const auto ind = induced_right_module(s.a, s.a.host->tensor(x, y), gxy);
        CHECK(graded_dimensions(t.module.carrier) == graded_dimensions(ind.carrier));
      }
  }
}

TEST_CASE("graded tensor rejects non-bicharacters") {
  auto toy = fx::exterior_toy_algebra();
  Cochain2 k4 = Cochain2::trivial(FinAbGroup({2}));
  k4(1, 1) = Cyclotomic::root_of_unity(4, 1);
  auto m = regular_module(toy, false, true);
  CHECK_THROWS_AS(graded_tensor(m, m, k4), DomainError);
}

TEST_CASE("tensor product of module morphisms") {
  for (const auto& s : settings()) {
    CAPTURE(s.name);
    const auto& h = *s.a.host;
    std::mt19937_64 rng(12);
    const std::size_t da = s.a.dim();
    for (const auto& x : s.objects)
      for (const auto& y : s.objects) {
        const auto gx = std::vector<int>(x.dim, 0), gy = std::vector<int>(y.dim, 0);
        const auto m = induced_right_module(s.a, x, gx);
        const auto n = induced_left_module(s.a, y, gy);
        const Matrix idm = Matrix::identity(m.dim()), idn = Matrix::identity(n.dim());
        const auto idt = tensor_morphisms_over_A(m, m, idm, n, n, idn, s.f);
        CHECK(idt.map.is_identity());
        CHECK(idt.interchange);
        auto random_end = [&](const HostObject& o) {
          Matrix t(o.dim, o.dim);
          for (const auto& b : h.hom_basis(o, o)) t += Cyclotomic(static_cast<long long>(rng() % 5) - 2) * b;
          return t;
        };
        const Matrix f1 = Matrix::kron(random_end(x), Matrix::identity(da));
        const Matrix f2 = Matrix::kron(random_end(x), Matrix::identity(da));
        const Matrix g1 = Matrix::kron(Matrix::identity(da), random_end(y));
        const Matrix g2 = Matrix::kron(Matrix::identity(da), random_end(y));
        const auto a1 = tensor_morphisms_over_A(m, m, f1, n, n, g1, s.f);
        const auto a2 = tensor_morphisms_over_A(m, m, f2, n, n, g2, s.f);
        const auto a21 = tensor_morphisms_over_A(m, m, f2 * f1, n, n, g2 * g1, s.f);
        CHECK(a1.interchange);
        CHECK(a21.map == a2.map * a1.map);
        const auto zero = tensor_morphisms_over_A(m, m, Matrix(m.dim(), m.dim()), n, n, g1, s.f);
        CHECK(zero.map.is_zero());
      }
  }
  auto s = settings()[0];
  auto m = regular_module(s.a, false, true);
  auto n = regular_module(s.a, true, false);
  Matrix swap(2, 2);
  swap.set(0, 1, 1);
  swap.set(1, 0, 1);
  CHECK_THROWS_AS(tensor_morphisms_over_A(m, m, Matrix::identity(2), n, n, swap, s.f), DomainError);
}
