#include <random>

#include "doctest.h"
#include "gradalg/linalg.hpp"
#include "gradalg/zmod.hpp"

using namespace gradalg;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density = 3) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (rng() % density == 0) m.set(i, j, static_cast<long long>(rng() % 5) - 2);
    }
  }
  return m;
}

// Dense product straight from the definition.
Matrix dense_product(const Matrix& a, const Matrix& b) {
  const auto x = a.to_dense(), y = b.to_dense();
  std::vector<std::vector<Cyclotomic>> out(a.rows(), std::vector<Cyclotomic>(b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) out[i][j] += x[i][k] * y[k][j];
  return Matrix::from_dense(out, b.cols());
}

}  // namespace

TEST_CASE("sparse product matches dense product") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_matrix(rng, 5, 7), b = random_matrix(rng, 7, 4);
    CHECK(a * b == dense_product(a, b));
  }
  const auto a = random_matrix(rng, 3, 3);
  CHECK(a * Matrix::identity(3) == a);
  CHECK((Matrix(2, 3) * a).is_zero());
}

TEST_CASE("kronecker product") {
  std::mt19937_64 rng(4);
  const auto a = random_matrix(rng, 2, 3, 1), b = random_matrix(rng, 3, 2, 1);
  const auto k = Matrix::kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q) CHECK(k.get(i * 3 + p, j * 2 + q) == a.get(i, j) * b.get(p, q));
  const auto c = random_matrix(rng, 3, 2, 1), d = random_matrix(rng, 2, 3, 1);
  CHECK(Matrix::kron(a, b) * Matrix::kron(c, d) == Matrix::kron(a * c, b * d));
}

TEST_CASE("nullspace, solve, inverse") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_matrix(rng, 4, 6, 2);
    const auto n = nullspace(a);
    CHECK((a * n).is_zero());
    CHECK(n.cols() + rank(a) == 6);
    const auto x0 = random_matrix(rng, 6, 1, 1);
    const auto b = a * x0;
    const auto x = solve(a, b);
    REQUIRE(x);
    CHECK(a * *x == b);
  }
  Matrix s = Matrix::from_dense({{1, 2}, {3, 4}});
  auto inv = inverse(s);
  REQUIRE(inv);
  CHECK((s * *inv).is_identity());
  CHECK_FALSE(inverse(Matrix::from_dense({{1, 2}, {2, 4}})));
  CHECK_FALSE(solve(Matrix::from_dense({{1, 0}, {1, 0}}), Matrix::from_dense({{1}, {2}})));
}

TEST_CASE("quotient by a column space") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_matrix(rng, 6, 3, 2);
    const auto q = quotient(a);
    CHECK((q.q * a).is_zero());
    CHECK((q.q * q.section).is_identity());
    CHECK(q.q.rows() == 6 - rank(a));
  }
}

TEST_CASE("linear systems over Z/m agree with exhaustive search") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const long long m = 2 + static_cast<long long>(rng() % 11);
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 3;
    std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
    std::vector<long long> b(rows);
    for (auto& r : a)
      for (auto& x : r) x = static_cast<long long>(rng() % m);
    for (auto& x : b) x = static_cast<long long>(rng() % m);
    const auto lin = solve_mod(a, b, m);
    const auto ex = solve_mod_exhaustive(a, b, m);
    CHECK(lin.has_value() == ex.has_value());
    if (lin) {
      for (std::size_t i = 0; i < rows; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += a[i][j] * (*lin)[j];
        CHECK(((s - b[i]) % m + m) % m == 0);
      }
    }
  }
}
