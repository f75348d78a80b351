#include "gradalg/kleisli.hpp"

#include <array>
#include <random>

#include "gradalg/errors.hpp"
#include "gradalg/induced.hpp"
#include "gradalg/linalg.hpp"

namespace gradalg {

namespace {

Matrix id(std::size_t n) { return Matrix::identity(n); }

std::vector<int> target_mgrades(const GradedAlgebra& a, const HostObject& y) {
  std::vector<int> g;
  g.reserve(y.dim * a.dim());
  for (std::size_t w = 0; w < y.dim; ++w)
    for (std::size_t t = 0; t < a.dim(); ++t) g.push_back(a.carrier.mgrades[t]);
  return g;
}

void require_shape(const GradedAlgebra& a, const KleisliMorphism& f) {
  if (f.map.cols() != f.source.dim || f.map.rows() != f.target.dim * a.dim())
    throw DomainError("Kleisli morphism has the wrong shape");
}

// mu^A_c = id_c (x) mu and friends on T c = c (x) A.
Matrix mu_T(const GradedAlgebra& a, std::size_t c) { return Matrix::kron(id(c), a.mul); }
Matrix eta_T(const GradedAlgebra& a, std::size_t c) { return Matrix::kron(id(c), a.unit); }

Matrix random_combination(const std::vector<Matrix>& basis, std::mt19937_64& rng, std::size_t rows,
                          std::size_t cols) {
  Matrix out(rows, cols);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (const auto& b : basis) {
    const int c = coef(rng);
    if (c != 0) out += Cyclotomic(c) * b;
  }
  return out;
}

}  // namespace

KleisliMorphism kleisli_identity(const GradedAlgebra& a, const HostObject& x) { return {x, x, eta_T(a, x.dim)}; }

KleisliMorphism kleisli_compose(const GradedAlgebra& a, const KleisliMorphism& g, const KleisliMorphism& f) {
  require_shape(a, f);
  require_shape(a, g);
  if (f.target != g.source) throw DomainError("Kleisli composition: objects do not match");
  return {f.source, g.target, mu_T(a, g.target.dim) * Matrix::kron(g.map, id(a.dim())) * f.map};
}

std::map<int, KleisliMorphism> kleisli_components(const GradedAlgebra& a, const KleisliMorphism& f) {
  require_shape(a, f);
  std::map<int, KleisliMorphism> out;
  for (auto& [d, m] : grade_components(f.map, std::vector<int>(f.source.dim, 0), target_mgrades(a, f.target), a.gamma))
    out.emplace(d, KleisliMorphism{f.source, f.target, std::move(m)});
  return out;
}

bool is_kleisli_homogeneous(const GradedAlgebra& a, const KleisliMorphism& f, int grade) {
  require_shape(a, f);
  return is_homogeneous(f.map, std::vector<int>(f.source.dim, 0), target_mgrades(a, f.target), a.gamma, grade);
}

Matrix t2(const GradedAlgebra& a, const HostObject& x, const HostObject& y) {
  const auto& h = *a.host;
  const Matrix swap = Matrix::kron(id(x.dim), Matrix::kron(h.braiding(a.obj(), y), id(a.dim())));
  return Matrix::kron(id(x.dim * y.dim), a.mul) * swap;
}

Matrix s2(const GradedAlgebra& a, const FrobeniusData& f, const HostObject& x, const HostObject& y) {
  const auto& h = *a.host;
  const Matrix swap = Matrix::kron(id(x.dim), Matrix::kron(h.braiding_inverse(a.obj(), y), id(a.dim())));
  return swap * Matrix::kron(id(x.dim * y.dim), f.comul);
}

KleisliMorphism kleisli_tensor(const GradedAlgebra& a, const KleisliMorphism& f, const KleisliMorphism& g) {
  require_shape(a, f);
  require_shape(a, g);
  const auto& h = *a.host;
  return {h.tensor(f.source, g.source), h.tensor(f.target, g.target),
          t2(a, f.target, g.target) * Matrix::kron(f.map, g.map)};
}

std::pair<Matrix, Matrix> twisted_interchange_sides(const GradedAlgebra& a, const Cochain2& kappa,
                                                    const Quadruple& q) {
  const Matrix lhs = kleisli_tensor(a, kleisli_compose(a, q.fp, q.f), kleisli_compose(a, q.gp, q.g)).map;
  const auto fi = kleisli_components(a, q.f);
  const auto gj = kleisli_components(a, q.gp);
  Matrix rhs(lhs.rows(), lhs.cols());
  for (const auto& [i, f] : fi) {
    const auto right = kleisli_tensor(a, f, q.g);
    for (const auto& [j, gp] : gj) {
      const auto left = kleisli_tensor(a, q.fp, gp);
      rhs += kappa(i, j).inverse() * kleisli_compose(a, left, right).map;
    }
  }
  return {lhs, rhs};
}

Matrix untwisted_interchange_rhs(const GradedAlgebra& a, const Quadruple& q) {
  return kleisli_compose(a, kleisli_tensor(a, q.fp, q.gp), kleisli_tensor(a, q.f, q.g)).map;
}

InterchangeReport check_twisted_interchange(const GradedAlgebra& a, const Cochain2& kappa,
                                            const std::vector<HostObject>& objects,
                                            const InterchangeSampling& sampling) {
  if (objects.empty()) throw DomainError("interchange check needs at least one object");
  const auto& h = *a.host;
  const std::size_t n = objects.size();
  // Kleisli hom bases Hom(x, y (x) A), cached per ordered pair.
  std::vector<std::vector<Matrix>> bases(n * n);
  std::vector<bool> have(n * n, false);
  auto basis = [&](std::size_t i, std::size_t j) -> const std::vector<Matrix>& {
    if (!have[i * n + j]) {
      bases[i * n + j] = h.hom_basis(objects[i], h.tensor(objects[j], a.obj()));
      have[i * n + j] = true;
    }
    return bases[i * n + j];
  };

  InterchangeReport rep;
  std::mt19937_64 rng(sampling.seed);
  auto run = [&](const Quadruple& q) {
    const auto [lhs, rhs] = twisted_interchange_sides(a, kappa, q);
    const Matrix diff = lhs - rhs;
    ++rep.checked;
    if (!diff.is_zero()) {
      ++rep.failures;
      rep.max_residual = std::max(rep.max_residual, diff.nnz());
      if (!rep.failure) rep.failure = q;
    }
    if (lhs != untwisted_interchange_rhs(a, q)) {
      ++rep.untwisted_failures;
      if (!rep.untwisted_witness) rep.untwisted_witness = q;
    }
  };

  auto run_tuple = [&](const std::array<std::size_t, 6>& t) {
    // t = (x, y, x', y', x'', y'')
    const auto& bf = basis(t[0], t[2]);
    const auto& bg = basis(t[1], t[3]);
    const auto& bfp = basis(t[2], t[4]);
    const auto& bgp = basis(t[3], t[5]);
    if (bf.empty() || bg.empty() || bfp.empty() || bgp.empty()) return;
    auto km = [&](std::size_t s, std::size_t d, const Matrix& m) { return KleisliMorphism{objects[s], objects[d], m}; };
    bool small = bf.size() * bg.size() * bfp.size() * bgp.size() <= 256;
    for (std::size_t k : t)
      if (objects[k].dim > sampling.exhaustive_dim) small = false;
    if (small) {
      for (const auto& f : bf)
        for (const auto& g : bg)
          for (const auto& fp : bfp)
            for (const auto& gp : bgp)
              run({km(t[0], t[2], f), km(t[1], t[3], g), km(t[2], t[4], fp), km(t[3], t[5], gp)});
      return;
    }
    rep.exhaustive = false;
    auto pick = [&](std::size_t s, std::size_t d, const std::vector<Matrix>& b) {
      return km(s, d, random_combination(b, rng, objects[d].dim * a.dim(), objects[s].dim));
    };
    for (std::size_t r = 0; r < sampling.samples; ++r)
      run({pick(t[0], t[2], bf), pick(t[1], t[3], bg), pick(t[2], t[4], bfp), pick(t[3], t[5], bgp)});
  };

  std::size_t tuples = 1;
  for (int k = 0; k < 6; ++k) tuples *= n;
  if (tuples <= 4096) {
    for (std::size_t code = 0; code < tuples; ++code) {
      std::array<std::size_t, 6> t{};
      std::size_t c = code;
      for (auto& v : t) {
        v = c % n;
        c /= n;
      }
      run_tuple(t);
    }
  } else {
    rep.exhaustive = false;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t r = 0; r < sampling.samples; ++r) {
      std::array<std::size_t, 6> t{};
      for (auto& v : t) v = pick(rng);
      run_tuple(t);
    }
  }
  return rep;
}

MonoidalMonadReport check_monoidal_monad(const GradedAlgebra& a, const std::vector<HostObject>& objects,
                                         const std::optional<FrobeniusData>& f) {
  const auto& h = *a.host;
  const std::size_t d = a.dim();
  MonoidalMonadReport rep;
  const Matrix c_aa = h.braiding(a.obj(), a.obj());
  const Matrix mumu = a.mul * Matrix::kron(a.mul, a.mul);
  rep.algebra_criterion =
      compare_maps(rep.violations, "algebra_criterion", {}, mumu * Matrix::kron(id(d), Matrix::kron(c_aa, id(d))), mumu);
  rep.commutative = compare_maps(rep.violations, "commutative", {}, a.mul * c_aa, a.mul);

  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      const HostObject& x = objects[i];
      const HostObject& y = objects[j];
      const std::vector<long> idx{static_cast<long>(i), static_cast<long>(j)};
      const Matrix t = t2(a, x, y);
      rep.unit_monoidal &= compare_maps(rep.violations, "unit_monoidal", idx,
                                        t * Matrix::kron(eta_T(a, x.dim), eta_T(a, y.dim)), eta_T(a, x.dim * y.dim));

      const HostObject tx = h.tensor(x, a.obj());
      const HostObject ty = h.tensor(y, a.obj());
      const Matrix lhs = mu_T(a, x.dim * y.dim) * Matrix::kron(t, id(d)) * t2(a, tx, ty);
      const Matrix rhs = t * Matrix::kron(mu_T(a, x.dim), mu_T(a, y.dim));
      if (!compare_maps(rep.violations, "mul_monoidal", idx, lhs, rhs)) {
        rep.mul_monoidal = false;
        if (!rep.witness) rep.witness = std::make_pair(i, j);
      }

      // naturality against one endomorphism-like map between each pair of listed objects
      for (std::size_t k = 0; k < objects.size(); ++k) {
        const auto fs = h.hom_basis(x, objects[k]);
        const auto gs = h.hom_basis(y, objects[j]);
        if (fs.empty() || gs.empty()) continue;
        const Matrix& fm = fs.back();
        const Matrix& gm = gs.back();
        rep.naturality &= compare_maps(
            rep.violations, "naturality", {static_cast<long>(i), static_cast<long>(j), static_cast<long>(k)},
            t2(a, objects[k], objects[j]) * Matrix::kron(Matrix::kron(fm, id(d)), Matrix::kron(gm, id(d))),
            Matrix::kron(Matrix::kron(fm, gm), id(d)) * t);
      }

      if (f) {
        const Matrix s = s2(a, *f, x, y);
        const bool ts = (t * s).is_identity();
        rep.t2_s2_is_id = rep.t2_s2_is_id.value_or(true) && ts;
        if (rep.commutative) {
          const Module mx = induce(a, x).module;
          const Module my = left_from_right_braided(induce(a, y).module, Cochain2::trivial(a.gamma)).module;
          const Matrix p = balancing_idempotent(mx, my, *f);
          const bool ok = compare_maps(rep.violations, "s2_t2_is_p", idx, s * t, p);
          rep.s2_t2_is_p = rep.s2_t2_is_p.value_or(true) && ok;
        }
      }
    }
  }
  return rep;
}

FrobeniusMonadReport check_frobenius_monad(const GradedAlgebra& a, const FrobeniusData& f,
                                           const std::vector<HostObject>& objects) {
  const std::size_t d = a.dim();
  FrobeniusMonadReport rep;
  for (const auto& obj : objects) {
    const std::size_t c = obj.dim;
    const std::size_t cA = c * d;
    const Matrix mu_c = mu_T(a, c), mu_Tc = mu_T(a, cA), T_mu_c = Matrix::kron(mu_c, id(d));
    const Matrix eta_c = eta_T(a, c), eta_Tc = eta_T(a, cA), T_eta_c = Matrix::kron(eta_c, id(d));
    const Matrix de_c = Matrix::kron(id(c), f.comul), de_Tc = Matrix::kron(id(cA), f.comul),
                 T_de_c = Matrix::kron(de_c, id(d));
    const Matrix ep_c = Matrix::kron(id(c), f.counit), ep_Tc = Matrix::kron(id(cA), f.counit),
                 T_ep_c = Matrix::kron(ep_c, id(d));

    rep.monad &= mu_c * mu_Tc == mu_c * T_mu_c;
    rep.monad &= (mu_c * eta_Tc).is_identity() && (mu_c * T_eta_c).is_identity();
    rep.comonad &= de_Tc * de_c == T_de_c * de_c;
    rep.comonad &= (ep_Tc * de_c).is_identity() && (T_ep_c * de_c).is_identity();
    const Matrix mid = de_c * mu_c;
    rep.frobenius &= mu_Tc * T_de_c == mid && T_mu_c * de_Tc == mid;
    rep.separable &= (mu_c * de_c).is_identity();
  }
  return rep;
}

Matrix kleisli_to_induced(const GradedAlgebra& a, const KleisliMorphism& f) {
  require_shape(a, f);
  return mu_T(a, f.target.dim) * Matrix::kron(f.map, id(a.dim()));
}

KleisliMorphism induced_to_kleisli(const GradedAlgebra& a, const HostObject& x, const HostObject& y, const Matrix& g) {
  if (g.cols() != x.dim * a.dim() || g.rows() != y.dim * a.dim()) throw DomainError("induced morphism has the wrong shape");
  return {x, y, g * eta_T(a, x.dim)};
}

KleisliTildeIso kleisli_tilde_iso(const GradedAlgebra& a, const Cochain2& kappa, const HostObject& x,
                                  const HostObject& y) {
  const auto& h = *a.host;
  KleisliTildeIso out;
  out.tilde = graded_tensor(induce(a, x).module, induce(a, y).module, kappa);
  out.kleisli_side = induce(a, h.tensor(x, y)).module;
  out.theta = out.tilde.data.projection * Matrix::kron(id(x.dim), Matrix::kron(a.unit, id(y.dim * a.dim())));
  out.invertible = out.theta.rows() == out.theta.cols() && inverse(out.theta).has_value();
  out.module_morphism = is_right_module_morphism(out.kleisli_side, out.tilde.module, out.theta);
  out.even = is_homogeneous(out.theta, out.kleisli_side.carrier.mgrades, out.tilde.module.carrier.mgrades, a.gamma, 0);
  return out;
}

bool even_morphisms_correspond(const GradedAlgebra& a, const Cochain2& kappa, const KleisliMorphism& f,
                               const KleisliMorphism& g) {
  if (!is_kleisli_homogeneous(a, f, 0) || !is_kleisli_homogeneous(a, g, 0))
    throw DomainError("correspondence is stated for even Kleisli morphisms");
  const auto src = kleisli_tilde_iso(a, kappa, f.source, g.source);
  const auto dst = kleisli_tilde_iso(a, kappa, f.target, g.target);
  const Matrix k = kleisli_to_induced(a, kleisli_tensor(a, f, g));
  const Matrix fg = dst.tilde.data.projection *
                    Matrix::kron(kleisli_to_induced(a, f), kleisli_to_induced(a, g)) * src.tilde.data.section;
  return src.ok() && dst.ok() && dst.theta * k == fg * src.theta;
}

}  // namespace gradalg
