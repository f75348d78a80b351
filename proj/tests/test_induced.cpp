#include "doctest.h"
#include "gradalg/errors.hpp"
#include "gradalg/fixtures.hpp"
#include "gradalg/induced.hpp"
#include "gradalg/linalg.hpp"

using namespace gradalg;
namespace fx = gradalg::fixtures;

namespace {

GradedAlgebra d4_character_tga(const Host& h) {
  const FinAbGroup g({2, 2});
  std::vector<HostObject> comps;
  for (int i = 0; i < 4; ++i) comps.push_back(fx::d4_character(*h, i >> 1, i & 1));
  return build_twisted_group_algebra(h, g, Cochain2::trivial(g), comps).first;
}

// Z/2 twisted group algebra 1 + 2 inside GradedVec(Z/4).
GradedAlgebra z4_even_tga(const Host& h) {
  const FinAbGroup z2({2});
  return build_twisted_group_algebra(h, z2, Cochain2::trivial(z2), {h->graded_object({0}), h->graded_object({2})})
      .first;
}

Cyclotomic trace(const Matrix& m) {
  Cyclotomic t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.get(i, i);
  return t;
}

// Stabilizer from characters alone: chi_x * chi_{A_i} == chi_x.
std::vector<int> character_stabilizer(const HostContext& h, const HostObject& x, const GradedAlgebra& a) {
  std::vector<int> out;
  for (int i = 0; i < a.gamma.size(); ++i) {
    const auto c = component(a, i);
    bool same = c.object.dim == 1;
    for (int g = 0; g < h.group_order() && same; ++g)
      same = trace(x.rep[g]) * trace(c.object.rep[g]) == trace(x.rep[g]);
    if (same) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("induction functor") {
  const FinAbGroup z2({2});
  auto h = fx::graded_host({2});
  auto a = build_twisted_group_algebra(h, z2, Cochain2::trivial(z2)).first;
  const auto one = induce(a, h->unit());
  CHECK(*one.module.right == a.mul);
  CHECK(one.module.carrier == a.carrier);
  const auto x = h->graded_object({0, 1, 1});
  CHECK(induce(a, Matrix::identity(3)).is_identity());
  CHECK(check_module(induce(a, x).module).ok());

  auto d4 = fx::d4_host();
  auto ad = d4_character_tga(d4);
  const auto ix = induce(ad, fx::d4_irrep2(*d4));
  CHECK(check_module(ix.module).ok());
  // functoriality on host endomorphisms of the irrep
  const auto r = fx::d4_irrep2(*d4).rep[1];
  const auto y = fx::d4_irrep2(*d4);
  const auto e = d4->hom_basis(y, y);
  REQUIRE(e.size() == 1);
  const Matrix f = Cyclotomic(3) * e[0];
  CHECK(induce(ad, f * f) == induce(ad, f) * induce(ad, f));
  CHECK(is_right_module_morphism(ix.module, ix.module, induce(ad, f)));
  CHECK(is_homogeneous(induce(ad, f), ix.module.carrier.mgrades, ix.module.carrier.mgrades, ad.gamma, 0));
  (void)r;
}

TEST_CASE("Hom between induced modules") {
  const FinAbGroup z2({2});
  auto h = fx::graded_host({2});
  auto a = build_twisted_group_algebra(h, z2, Cochain2::trivial(z2)).first;
  const auto end1 = hom_A_induced(a, h->unit(), h->unit());
  CHECK(end1.dim() == 1);
  CHECK(end1.dims_by_grade == std::map<int, std::size_t>{{0, 1}});
  CHECK(end1.routes_agree);
  const auto odd = hom_A_induced(a, h->graded_object({0}), h->graded_object({1}));
  CHECK(odd.dims_by_grade == std::map<int, std::size_t>{{1, 1}});
  CHECK(odd.routes_agree);

  auto d4 = fx::d4_host();
  auto ad = d4_character_tga(d4);
  const auto x = fx::d4_irrep2(*d4);
  const auto end = hom_A_induced(ad, x, x);
  CHECK(end.dim() == 4);
  CHECK(end.dims_by_grade == std::map<int, std::size_t>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  CHECK(end.routes_agree);

  const auto zero = hom_A_induced(ad, x, fx::d4_character(*d4, 0, 0));
  CHECK(zero.dim() == 0);
  CHECK(zero.routes_agree);

  std::vector<HostObject> objs;
  for (int i = 0; i < 4; ++i) objs.push_back(fx::d4_character(*d4, i >> 1, i & 1));
  objs.push_back(x);
  objs.push_back(d4->direct_sum(objs[0], x));
  for (const auto& p : objs)
    for (const auto& q : objs) CHECK(hom_A_induced(ad, p, q).routes_agree);
}

TEST_CASE("stabilizers") {
  auto gv = fx::graded_host({4});
  auto az = z4_even_tga(gv);
  for (int g = 0; g < 4; ++g) CHECK(stabilizer(gv->graded_object({g}), az).elements == std::vector<int>{0});
  CHECK_THROWS_AS(stabilizer(gv->graded_object({0, 1}), az), DomainError);

  auto d4 = fx::d4_host();
  auto ad = d4_character_tga(d4);
  std::vector<HostObject> simples;
  for (int i = 0; i < 4; ++i) simples.push_back(fx::d4_character(*d4, i >> 1, i & 1));
  simples.push_back(fx::d4_irrep2(*d4));
  for (const auto& x : simples) {
    const auto st = stabilizer(x, ad);
    CHECK(st.elements == character_stabilizer(*d4, x, ad));
    CHECK(hom_A_induced(ad, x, x).dim() == st.elements.size());
  }
  CHECK(stabilizer(fx::d4_irrep2(*d4), ad).elements.size() == 4);

  auto s3 = fx::s3_host();
  const FinAbGroup z2({2});
  auto as = build_twisted_group_algebra(s3, z2, Cochain2::trivial(z2), {s3->unit(), fx::s3_sign(*s3)}).first;
  CHECK(stabilizer(fx::s3_irrep2(*s3), as).elements == std::vector<int>{0, 1});
  CHECK(stabilizer(s3->unit(), as).elements == std::vector<int>{0});
}

TEST_CASE("sigma cocycle") {
  auto d4 = fx::d4_host();
  auto ad = d4_character_tga(d4);
  const auto x = fx::d4_irrep2(*d4);
  auto st = stabilizer(x, ad);
  sigma_cocycle(st, x, ad);
  CHECK(st.sigma_cocycle);
  CHECK_FALSE(st.sigma_symmetric);
  CHECK(st.sigma_class() == "nontrivial");
  CHECK_FALSE(st.trivializer);
  for (int s : st.elements) CHECK(st.sigma_at(0, s) == Cyclotomic(1));

  // structure constants of End_A(Ind x) from the Hom basis give the same commutation defect
  const auto end = hom_A_induced(ad, x, x);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const int s = st.elements[i], t = st.elements[j];
      const Matrix ab = st.phi[j] * st.phi[i], ba = st.phi[i] * st.phi[j];
      CHECK(ab == (st.sigma_at(s, t) / st.sigma_at(t, s)) * ba);
    }
  (void)end;

  auto alt = stabilizer(x, ad, Gauge::LastPivot);
  sigma_cocycle(alt, x, ad);
  // ratio of the two gauges is the coboundary of the varphi ratios
  for (int s : st.elements)
    for (int t : st.elements) {
      auto c = [&](int u) {
        const auto& v1 = st.varphi[st.index(u)];
        const auto& v2 = alt.varphi[alt.index(u)];
        for (std::size_t col = 0; col < v1.cols(); ++col)
          if (!v1.col(col).empty()) return v2.get(v1.col(col).front().first, col) / v1.col(col).front().second;
        return Cyclotomic(1);
      };
      CHECK(alt.sigma_at(s, t) == st.sigma_at(s, t) * c(s) * c(t) / c(ad.gamma.add(s, t)));
    }

  // an arbitrary rescaling of varphi
  auto scaled = stabilizer(x, ad);
  for (std::size_t k = 1; k < scaled.varphi.size(); ++k) scaled.varphi[k] = Cyclotomic(static_cast<long long>(k + 1)) * scaled.varphi[k];
  sigma_cocycle(scaled, x, ad);
  std::vector<Cyclotomic> ratio;
  for (std::size_t k = 0; k < 16; ++k) ratio.push_back(scaled.sigma[k] / st.sigma[k]);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(ratio[i * 4 + j] == ratio[j * 4 + i]);

  auto s3 = fx::s3_host();
  const FinAbGroup z2({2});
  auto as = build_twisted_group_algebra(s3, z2, Cochain2::trivial(z2), {s3->unit(), fx::s3_sign(*s3)}).first;
  auto ss = stabilizer(fx::s3_irrep2(*s3), as);
  sigma_cocycle(ss, fx::s3_irrep2(*s3), as);
  CHECK(ss.sigma_cocycle);
  CHECK(ss.sigma_class() == "trivial");
  const auto& s11 = ss.sigma_at(1, 1);
  if (ss.trivializer) CHECK((*ss.trivializer)[1] * (*ss.trivializer)[1] == s11);

  auto gv = fx::graded_host({4});
  auto st0 = stabilizer(gv->graded_object({1}), z4_even_tga(gv));
  sigma_cocycle(st0, gv->graded_object({1}), z4_even_tga(gv));
  CHECK(st0.sigma == std::vector<Cyclotomic>{Cyclotomic(1)});
}

TEST_CASE("graded Schur lemma trichotomy") {
  auto gv = fx::graded_host({4});
  auto az = z4_even_tga(gv);
  struct Case {
    int x, y;
    std::string pattern;
  };
  for (const auto& c : std::vector<Case>{{0, 0, "k"}, {0, 2, "k"}, {1, 3, "k"}, {0, 1, "0"}, {1, 2, "0"}}) {
    const auto rep = graded_schur_report(gv->graded_object({c.x}), gv->graded_object({c.y}), az);
    CAPTURE(c.x);
    CAPTURE(c.y);
    CHECK(rep.pattern == c.pattern);
    CHECK(rep.ok());
  }

  auto d4 = fx::d4_host();
  const FinAbGroup z2({2});
  auto a2 = build_twisted_group_algebra(d4, z2, Cochain2::trivial(z2), {d4->unit(), fx::d4_character(*d4, 1, 0)}).first;
  const auto rho = fx::d4_irrep2(*d4);
  const auto c00 = fx::d4_character(*d4, 0, 0), c10 = fx::d4_character(*d4, 1, 0), c01 = fx::d4_character(*d4, 0, 1);
  auto r1 = graded_schur_report(rho, rho, a2);
  CHECK(r1.pattern == "k(Z/2)");
  CHECK(r1.ok());
  auto r2 = graded_schur_report(c00, c10, a2);
  CHECK(r2.pattern == "k");
  CHECK(r2.hom.dims_by_grade == std::map<int, std::size_t>{{1, 1}});
  CHECK(r2.ok());
  auto r3 = graded_schur_report(c00, c01, a2);
  CHECK(r3.pattern == "0");
  CHECK(r3.ok());
  auto r4 = graded_schur_report(rho, c00, a2);
  CHECK(r4.pattern == "0");

  auto ad = d4_character_tga(d4);
  auto r5 = graded_schur_report(rho, rho, ad);
  CHECK(r5.hom.dim() == 4);
  CHECK(r5.components_at_most_one);
  CHECK(r5.homogeneous_invertible);
  CHECK(r5.pattern == "k(Z/2xZ/2)");
  CHECK(r5.ok());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto r = graded_schur_report(fx::d4_character(*d4, i >> 1, i & 1), fx::d4_character(*d4, j >> 1, j & 1), ad);
      CHECK(r.ok());
      CHECK(r.pattern == "k");
    }
}

TEST_CASE("simplicity of induced modules") {
  auto d4 = fx::d4_host();
  auto ad = d4_character_tga(d4);
  std::vector<HostObject> simples;
  for (int i = 0; i < 4; ++i) simples.push_back(fx::d4_character(*d4, i >> 1, i & 1));
  simples.push_back(fx::d4_irrep2(*d4));
  for (const auto& x : simples) CHECK(induced_simple(x, ad, simples).simple);
  const auto sum = d4->direct_sum(simples[0], simples[4]);
  const auto ns = induced_simple(sum, ad, simples);
  CHECK_FALSE(ns.simple);
  REQUIRE(ns.witness);

  auto gv = fx::graded_host({4});
  auto az = z4_even_tga(gv);
  std::vector<HostObject> gs;
  for (int g = 0; g < 4; ++g) gs.push_back(gv->graded_object({g}));
  for (const auto& x : gs) CHECK(induced_simple(x, az, gs).simple);
  CHECK_FALSE(induced_simple(gv->graded_object({0, 3}), az, gs).simple);
  CHECK_FALSE(induced_simple(gv->graded_object({0, 2}), az, gs).simple);
}
