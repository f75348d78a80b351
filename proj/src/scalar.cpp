#include "gradalg/scalar.hpp"

#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gradalg/errors.hpp"

namespace gradalg {

namespace {

std::atomic<int> g_max_order{240};

using Rational = boost::multiprecision::cpp_rational;

void check_order(long long n) {
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  if (n > g_max_order.load()) {
    throw UnsupportedInput("cyclotomic order " + std::to_string(n) + " exceeds the configured maximum " +
                           std::to_string(g_max_order.load()));
  }
}

// Reduces c (coefficients of powers of zeta_n) to the canonical length phi(n).
void reduce_poly(std::vector<BigInt>& c, int n) {
  if (c.size() > static_cast<std::size_t>(n)) {
    for (std::size_t i = n; i < c.size(); ++i) {
      if (!c[i].is_zero()) c[i % n] += c[i];
    }
    c.resize(n);
  }
  const auto& p = cyclotomic_polynomial(n);
  const std::size_t phi = p.size() - 1;
  for (std::size_t k = c.size(); k-- > phi;) {
    if (c[k].is_zero()) continue;
    const BigInt t = c[k];
    for (std::size_t j = 0; j < phi; ++j) {
      if (p[j] != 0) c[k - phi + j] -= t * p[j];
    }
    c[k] = 0;
  }
  c.resize(phi);
}

}  // namespace

int max_order() { return g_max_order.load(); }

void set_max_order(int n) {
  if (n < 1) throw DomainError("maximum cyclotomic order must be positive");
  g_max_order.store(n);
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
  std::vector<long long> rem(n + 1, 0);
  rem[0] = -1;
  rem[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& q = cyclotomic_polynomial(d);
    const std::size_t dq = q.size() - 1;
    std::vector<long long> out(rem.size() - dq, 0);
    for (std::size_t k = rem.size(); k-- > dq;) {
      const long long t = rem[k];
      out[k - dq] = t;
      if (t == 0) continue;
      for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= t * q[j];
    }
    rem = std::move(out);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(rem)).first->second;
}

Cyclotomic::Cyclotomic(long long v) {
  if (v != 0) num_.push_back(BigInt(v));
}

Cyclotomic Cyclotomic::rational(const BigInt& num, const BigInt& den) {
  return from_coefficients(1, {num}, den);
}

Cyclotomic Cyclotomic::root_of_unity(int n, long long e) {
  check_order(n);
  std::vector<BigInt> c(n, 0);
  c[((e % n) + n) % n] = 1;
  return from_coefficients(n, std::move(c));
}

Cyclotomic Cyclotomic::from_coefficients(int n, std::vector<BigInt> coeffs, const BigInt& den) {
  check_order(n);
  if (den.is_zero()) throw DomainError("zero denominator");
  reduce_poly(coeffs, n);
  Cyclotomic r;
  r.order_ = n;
  r.num_ = std::move(coeffs);
  r.den_ = den;
  r.normalize();
  return r;
}

void Cyclotomic::normalize() {
  bool all_zero = true;
  for (const auto& c : num_) {
    if (!c.is_zero()) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    num_.clear();
    order_ = 1;
    den_ = 1;
    return;
  }
  BigInt g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (!c.is_zero()) g = boost::multiprecision::gcd(g, c);
  }
  if (den_.sign() < 0) g = -abs(g);
  if (g != 1) {
    for (auto& c : num_) c /= g;
    den_ /= g;
  }
  bool constant = true;
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (!num_[i].is_zero()) {
      constant = false;
      break;
    }
  }
  if (constant) {
    num_.resize(1);
    order_ = 1;
  }
}

std::vector<BigInt> Cyclotomic::numerator() const {
  if (num_.empty()) return std::vector<BigInt>(euler_phi(order_), 0);
  return num_;
}

bool Cyclotomic::is_one() const { return order_ == 1 && num_.size() == 1 && num_[0] == 1 && den_ == 1; }

std::vector<BigInt> Cyclotomic::coeffs_at(int m) const {
  if (m % order_ != 0) throw DomainError("order does not divide target order");
  if (num_.empty()) return std::vector<BigInt>(euler_phi(m), 0);
  if (m == order_) return num_;
  const int step = m / order_;
  std::vector<BigInt> c(m, 0);
  for (std::size_t e = 0; e < num_.size(); ++e) c[e * step] = num_[e];
  reduce_poly(c, m);
  return c;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  const long long l = lcm_ll(order_, b.order_);
  check_order(l);
  std::vector<BigInt> x = coeffs_at(static_cast<int>(l));
  const std::vector<BigInt> y = b.coeffs_at(static_cast<int>(l));
  if (den_ == b.den_) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = x[i] * b.den_ + y[i] * den_;
    den_ *= b.den_;
  }
  order_ = static_cast<int>(l);
  num_ = std::move(x);
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) { return *this += -b; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return Cyclotomic();
  if (a.is_rational() || b.is_rational()) {
    const Cyclotomic& r = a.is_rational() ? a : b;
    const Cyclotomic& v = a.is_rational() ? b : a;
    Cyclotomic out = v;
    for (auto& c : out.num_) c *= r.num_[0];
    out.den_ *= r.den_;
    out.normalize();
    return out;
  }
  const long long l = lcm_ll(a.order_, b.order_);
  check_order(l);
  const std::vector<BigInt> x = a.coeffs_at(static_cast<int>(l));
  const std::vector<BigInt> y = b.coeffs_at(static_cast<int>(l));
  std::vector<BigInt> prod(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!y[j].is_zero()) prod[i + j] += x[i] * y[j];
    }
  }
  reduce_poly(prod, static_cast<int>(l));
  Cyclotomic out;
  out.order_ = static_cast<int>(l);
  out.num_ = std::move(prod);
  out.den_ = a.den_ * b.den_;
  out.normalize();
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) { return *this = *this * b; }
Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& b) { return *this = *this / b; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.order_ == b.order_) return a.den_ == b.den_ && a.num_ == b.num_;
  if (a.is_rational() || b.is_rational()) return false;
  const long long l = lcm_ll(a.order_, b.order_);
  const std::vector<BigInt> x = a.coeffs_at(static_cast<int>(l));
  const std::vector<BigInt> y = b.coeffs_at(static_cast<int>(l));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] * b.den_ != y[i] * a.den_) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::galois(long long k) const {
  if (order_ == 1 || is_zero()) return *this;
  const long long n = order_;
  k = ((k % n) + n) % n;
  if (gcd_ll(k, n) != 1) throw DomainError("Galois exponent not coprime to the order");
  std::vector<BigInt> c(n, 0);
  for (std::size_t e = 0; e < num_.size(); ++e) c[(k * static_cast<long long>(e)) % n] = num_[e];
  return from_coefficients(order_, std::move(c), den_);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (is_rational()) return rational(den_, num_[0]);
  Cyclotomic p = 1;
  for (long long k = 2; k < order_; ++k) {
    if (gcd_ll(k, order_) == 1) p *= galois(k);
  }
  const Cyclotomic norm = *this * p;
  if (!norm.is_rational()) throw ConsistencyError("field norm is not rational");
  return p * rational(norm.den_, norm.num_[0]);
}

Cyclotomic Cyclotomic::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this, acc = 1;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

Cyclotomic Cyclotomic::at_order(int m) const {
  check_order(m);
  Cyclotomic r;
  r.order_ = m;
  r.num_ = coeffs_at(m);
  r.den_ = den_;
  if (is_zero()) r.num_.clear();
  return r;
}

Cyclotomic Cyclotomic::reduce_order() const {
  if (order_ == 1) return *this;
  const int n = order_;
  for (int d = 3; d < n; ++d) {
    if (n % d != 0 || d % 4 == 2) continue;
    // Solve E c = num where column e of E is zeta_d^e written at order n.
    const int pd = euler_phi(d), pn = euler_phi(n);
    std::vector<std::vector<Rational>> rows(pn, std::vector<Rational>(pd + 1));
    for (int e = 0; e < pd; ++e) {
      std::vector<BigInt> c(n, 0);
      c[e * (n / d)] = 1;
      reduce_poly(c, n);
      for (int i = 0; i < pn; ++i) rows[i][e] = Rational(c[i]);
    }
    for (int i = 0; i < pn; ++i) rows[i][pd] = Rational(num_[i]);
    int r = 0;
    std::vector<int> pivots;
    for (int col = 0; col < pd && r < pn; ++col) {
      int piv = -1;
      for (int i = r; i < pn; ++i) {
        if (rows[i][col] != 0) {
          piv = i;
          break;
        }
      }
      if (piv < 0) continue;
      std::swap(rows[r], rows[piv]);
      const Rational inv = 1 / rows[r][col];
      for (auto& v : rows[r]) v *= inv;
      for (int i = 0; i < pn; ++i) {
        if (i == r || rows[i][col] == 0) continue;
        const Rational f = rows[i][col];
        for (int j = col; j <= pd; ++j) rows[i][j] -= f * rows[r][j];
      }
      pivots.push_back(col);
      ++r;
    }
    bool consistent = true;
    for (int i = r; i < pn; ++i) {
      if (rows[i][pd] != 0) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    std::vector<Rational> sol(pd, 0);
    for (int i = 0; i < r; ++i) sol[pivots[i]] = rows[i][pd];
    BigInt common = 1;
    for (const auto& s : sol) common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(s));
    std::vector<BigInt> c(pd);
    for (int e = 0; e < pd; ++e) c[e] = boost::multiprecision::numerator(sol[e]) * (common / boost::multiprecision::denominator(sol[e]));
    return from_coefficients(d, std::move(c), den_ * common);
  }
  return *this;
}

std::optional<long long> Cyclotomic::root_exponent(long long n) const {
  if (n < 1 || is_zero()) return std::nullopt;
  if (is_rational() && !(den_ == 1 && (num_[0] == 1 || num_[0] == -1))) return std::nullopt;
  if (!pow(n).is_one()) return std::nullopt;
  const Cyclotomic z = root_of_unity(static_cast<int>(n), 1);
  Cyclotomic w = 1;
  for (long long e = 0; e < n; ++e) {
    if (w == *this) return e;
    w *= z;
  }
  return std::nullopt;
}

std::optional<long long> Cyclotomic::multiplicative_order() const {
  const long long l = lcm_ll(2, order_);
  auto e = root_exponent(l);
  if (!e) return std::nullopt;
  return l / gcd_ll(*e, l);
}

std::string Cyclotomic::to_string() const {
  const Cyclotomic r = reduce_order();
  std::ostringstream os;
  if (r.is_zero()) return "0";
  if (r.is_rational()) {
    os << r.num_[0];
    if (r.den_ != 1) os << "/" << r.den_;
    return os.str();
  }
  for (long long n : {static_cast<long long>(r.order_), lcm_ll(2, r.order_)}) {
    if (auto e = r.root_exponent(n)) {
      os << "z" << n << "^" << *e;
      return os.str();
    }
  }
  os << "(";
  bool first = true;
  for (std::size_t e = 0; e < r.num_.size(); ++e) {
    const BigInt& c = r.num_[e];
    if (c.is_zero()) continue;
    if (!first && c.sign() > 0) os << "+";
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c == -1) os << "-";
    else if (c != 1) os << c << "*";
    os << "z" << r.order_;
    if (e > 1) os << "^" << e;
  }
  os << ")";
  if (r.den_ != 1) os << "/" << r.den_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.to_string(); }

}  // namespace gradalg
