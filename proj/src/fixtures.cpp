#include "gradalg/fixtures.hpp"

namespace gradalg::fixtures {

std::vector<std::vector<int>> dihedral_table(int n) {
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const int a = x % n, b = x / n, c = y % n, d = y / n;
      const int rot = ((a + (b ? -c : c)) % n + n) % n;
      t[x][y] = rot + n * ((b + d) % 2);
    }
  }
  return t;
}

Host super_host() {
  FinAbGroup z2({2});
  Cochain2 beta = Cochain2::trivial(z2);
  beta(1, 1) = -1;
  return HostContext::graded_vec(z2, beta);
}

Host graded_host(std::vector<int> orders) {
  FinAbGroup g(std::move(orders));
  return HostContext::graded_vec(g, Cochain2::trivial(g));
}

Host d4_host() { return HostContext::rep_cat(dihedral_table(4), {1, 4}); }
Host s3_host() { return HostContext::rep_cat(dihedral_table(3), {1, 3}); }

HostObject d4_character(const HostContext& h, int a, int b) {
  return h.rep_object({Matrix::from_dense({{a % 2 ? -1 : 1}}), Matrix::from_dense({{b % 2 ? -1 : 1}})});
}

HostObject d4_irrep2(const HostContext& h) {
  return h.rep_object({Matrix::from_dense({{0, -1}, {1, 0}}), Matrix::from_dense({{1, 0}, {0, -1}})});
}

HostObject s3_sign(const HostContext& h) {
  return h.rep_object({Matrix::from_dense({{1}}), Matrix::from_dense({{-1}})});
}

HostObject s3_irrep2(const HostContext& h) {
  return h.rep_object({Matrix::from_dense({{0, -1}, {1, -1}}), Matrix::from_dense({{0, 1}, {1, 0}})});
}

}  // namespace gradalg::fixtures

namespace gradalg::fixtures {

GradedAlgebra degenerate_algebra(const Host& h, const HostObject& x) {
  GradedAlgebra a;
  a.host = h;
  a.gamma = FinAbGroup({2});
  a.carrier.obj = h->direct_sum(h->unit(), x);
  const std::size_t d = a.carrier.obj.dim;
  a.carrier.mgrades.assign(d, 1);
  a.carrier.mgrades[0] = 0;
  a.mul = Matrix(d, d * d);
  for (std::size_t b = 0; b < d; ++b) {
    a.mul.set(b, b, 1);
    a.mul.set(b, b * d, 1);
  }
  a.unit = Matrix(d, 1);
  a.unit.set(0, 0, 1);
  return a;
}

FrobeniusData degenerate_coalgebra(const GradedAlgebra& x) {
  const std::size_t d = x.dim();
  FrobeniusData f{Matrix(d * d, d), Matrix(1, d)};
  f.comul.set(0, 0, 1);
  for (std::size_t b = 1; b < d; ++b) {
    f.comul.set(b, b, 1);
    f.comul.set(b * d, b, 1);
  }
  f.counit.set(0, 0, 1);
  return f;
}

}  // namespace gradalg::fixtures

namespace gradalg::fixtures {

Host z4_host() {
  const FinAbGroup g({4});
  Cochain2 b = Cochain2::trivial(g);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b(i, j) = Cyclotomic::root_of_unity(4, i * j);
  return HostContext::graded_vec(g, b);
}

GradedAlgebra exterior_toy_algebra() {
  GradedAlgebra a;
  a.host = z4_host();
  a.gamma = FinAbGroup({2});
  // basis 1, u, u', e = u u'
  a.carrier.obj = a.host->graded_object({0, 1, 3, 0});
  a.carrier.mgrades = {0, 1, 1, 0};
  a.mul = Matrix(4, 16);
  for (int b = 0; b < 4; ++b) {
    a.mul.set(b, b, 1);
    a.mul.set(b, 4 * b, 1);
  }
  a.mul.set(3, 1 * 4 + 2, 1);
  a.mul.set(3, 2 * 4 + 1, -1);
  a.unit = Matrix(4, 1);
  a.unit.set(0, 0, 1);
  return a;
}

}  // namespace gradalg::fixtures
