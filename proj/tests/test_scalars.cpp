#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gradalg/errors.hpp"
#include "gradalg/scalar.hpp"

using gradalg::BigInt;
using gradalg::Cyclotomic;

namespace {

Cyclotomic z(int n, long long e = 1) { return Cyclotomic::root_of_unity(n, e); }

// Floating-point evaluation at exp(2 pi i / N); independent of the exact reduction.
std::complex<double> eval(const Cyclotomic& a) {
  std::complex<double> s = 0;
  const auto num = a.numerator();
  for (std::size_t e = 0; e < num.size(); ++e) {
    const double ang = 2 * std::numbers::pi * static_cast<double>(e) / a.order();
    s += num[e].convert_to<double>() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s / a.denominator().convert_to<double>();
}

Cyclotomic random_scalar(std::mt19937_64& rng) {
  static const int orders[] = {1, 3, 4, 5, 8, 12};
  const int n = orders[rng() % 6];
  std::vector<BigInt> c(n);
  for (auto& x : c) x = static_cast<long long>(rng() % 7) - 3;
  return Cyclotomic::from_coefficients(n, c, 1 + static_cast<long long>(rng() % 4));
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("basic products and sums") {
  CHECK(z(4) * z(4) == Cyclotomic(-1));
  CHECK(Cyclotomic::rational(1, 2) + Cyclotomic::rational(1, 2) == Cyclotomic(1));
  CHECK((z(3) * z(3, 2)).is_one());
  CHECK((z(4) * z(4)).is_rational());
}

TEST_CASE("canonical form") {
  const auto a = Cyclotomic::from_coefficients(4, {0, 0, 0, 1});
  CHECK(a == -z(4));
  CHECK(a.numerator() == std::vector<BigInt>{0, -1});
  CHECK(Cyclotomic::from_coefficients(4, {2, 0}, 2).is_one());
  CHECK(Cyclotomic::from_coefficients(3, {1, 1, 1}).is_zero());
  const auto b = Cyclotomic::from_coefficients(12, {4, 6, 0, 2, 8}, -6);
  CHECK(b.denominator() > 0);
  const auto again = Cyclotomic::from_coefficients(b.order(), b.numerator(), b.denominator());
  CHECK(again.numerator() == b.numerator());
  CHECK(again.denominator() == b.denominator());
  CHECK_THROWS_AS(Cyclotomic::from_coefficients(4, {1}, 0), gradalg::DomainError);
}

TEST_CASE("equality across orders") {
  CHECK(z(8, 2) == z(4));
  CHECK(z(6) == -z(3, 2));
  CHECK(z(12, 4) == z(3));
  CHECK(z(8) != z(4));
  CHECK(z(8, 2).reduce_order().order() == 4);
}

TEST_CASE("root exponent") {
  CHECK(Cyclotomic(-1).root_exponent(4) == 2);
  CHECK(Cyclotomic(1).root_exponent(6) == 0);
  CHECK_FALSE((1 + z(4)).root_exponent(4).has_value());
  CHECK_FALSE(z(8).root_exponent(4).has_value());
  for (int n = 1; n <= 24; ++n) {
    for (int e = 0; e < n; ++e) CHECK(z(n, e).root_exponent(n) == e);
  }
  CHECK(z(12, 3).multiplicative_order() == 4);
  CHECK(Cyclotomic(-1).multiplicative_order() == 2);
  CHECK_FALSE(Cyclotomic(2).multiplicative_order().has_value());
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 150; ++t) {
    const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(close(eval(a * b), eval(a) * eval(b)));
    CHECK(close(eval(a + b), eval(a) + eval(b)));
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(close(eval(a.inverse()), 1.0 / eval(a)));
    }
    CHECK(close(eval(a.conj()), std::conj(eval(a))));
  }
}

TEST_CASE("errors and limits") {
  CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), gradalg::DomainError);
  CHECK_THROWS_AS(z(241), gradalg::UnsupportedInput);
  gradalg::set_max_order(300);
  CHECK_NOTHROW(z(241));
  gradalg::set_max_order(240);
}

TEST_CASE("text form") {
  CHECK(z(8, 2).to_string() == "z4^1");
  CHECK((-z(3)).to_string() == "z6^5");
  CHECK((1 + z(4)).to_string() == "(1+z4)");
  CHECK(Cyclotomic::rational(-3, 6).to_string() == "-1/2");
  CHECK(Cyclotomic().to_string() == "0");
}

TEST_CASE("galois action") {
  CHECK(z(8).conj() == z(8, 7));
  CHECK(z(5).galois(2) == z(5, 2));
  const auto a = 2 + z(5) - z(5, 3);
  const auto nrm = a * a.conj();
  CHECK(nrm.conj() == nrm);
}
