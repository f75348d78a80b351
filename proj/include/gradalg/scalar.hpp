#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace gradalg {

using BigInt = boost::multiprecision::cpp_int;

// Upper bound on the cyclotomic order N accepted anywhere in the library.
int max_order();
void set_max_order(int n);

int euler_phi(int n);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// Exact element of Q(zeta_N).
///
/// Stored as (sum_e num[e] * zeta_N^e) / den with num reduced modulo Phi_N
/// (length phi(N)), gcd(num, den) = 1 and den > 0.  Values with no
/// non-constant coefficient are kept at order 1, zero has an empty numerator.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long long v);  // NOLINT: integers convert implicitly

  static Cyclotomic rational(const BigInt& num, const BigInt& den);
  static Cyclotomic root_of_unity(int n, long long e);
  // Coefficients in the spanning set zeta_n^0, zeta_n^1, ... (any length).
  static Cyclotomic from_coefficients(int n, std::vector<BigInt> coeffs, const BigInt& den = 1);

  int order() const { return order_; }
  // Numerator padded to length phi(order()).
  std::vector<BigInt> numerator() const;
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_rational() const { return order_ == 1; }
  bool is_one() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& b);
  Cyclotomic& operator/=(const Cyclotomic& b);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic inverse() const;
  Cyclotomic pow(long long e) const;
  // The automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1.
  Cyclotomic galois(long long k) const;
  Cyclotomic conj() const { return galois(-1); }

  // Same value written at order m (order() must divide m).
  Cyclotomic at_order(int m) const;
  // Same value at the smallest order whose field contains it.
  Cyclotomic reduce_order() const;

  // e in [0, n) with *this == zeta_n^e.
  std::optional<long long> root_exponent(long long n) const;
  // Smallest m >= 1 with *this^m == 1, if *this is a root of unity.
  std::optional<long long> multiplicative_order() const;

  // Compact human-readable form: "3/2", "z8^3", "(1+2*z8^2)/3".
  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_at(int m) const;
  void normalize();

  int order_ = 1;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a);

}  // namespace gradalg
