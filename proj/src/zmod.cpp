#include "gradalg/zmod.hpp"

#include <numeric>

#include "gradalg/errors.hpp"

namespace gradalg {

namespace {

long long md(__int128 x, long long m) {
  long long r = static_cast<long long>(x % m);
  return r < 0 ? r + m : r;
}

// g = s*a + t*b
long long ext_gcd(long long a, long long b, long long& s, long long& t) {
  long long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const long long q = a / b;
    long long r = a - q * b;
    a = b;
    b = r;
    r = s0 - q * s1;
    s0 = s1;
    s1 = r;
    r = t0 - q * t1;
    t0 = t1;
    t1 = r;
  }
  s = s0;
  t = t0;
  return a;
}

}  // namespace

std::optional<std::vector<long long>> solve_mod(const std::vector<std::vector<long long>>& a,
                                                const std::vector<long long>& b, long long m) {
  if (m < 1) throw DomainError("modulus must be positive");
  if (a.size() != b.size()) throw DomainError("solve_mod: row count mismatch");
  const std::size_t n = a.empty() ? 0 : a[0].size();
  // Augmented rows; the right-hand side sits in column n.
  std::vector<std::vector<long long>> rows;
  rows.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != n) throw DomainError("solve_mod: ragged rows");
    std::vector<long long> r(n + 1);
    for (std::size_t j = 0; j < n; ++j) r[j] = md(a[i][j], m);
    r[n] = md(b[i], m);
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t cur = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = rows.size();
    for (std::size_t i = cur; i < rows.size(); ++i) {
      if (rows[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p == rows.size()) continue;
    std::swap(rows[cur], rows[p]);
    for (std::size_t i = cur + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      long long s, t;
      const long long x = rows[cur][c], y = rows[i][c];
      const long long g = ext_gcd(x, y, s, t);
      const long long u = y / g, v = x / g;
      // [s t; -u v] has determinant 1.
      for (std::size_t j = c; j <= n; ++j) {
        const long long r0 = rows[cur][j], r1 = rows[i][j];
        rows[cur][j] = md(static_cast<__int128>(s) * r0 + static_cast<__int128>(t) * r1, m);
        rows[i][j] = md(-static_cast<__int128>(u) * r0 + static_cast<__int128>(v) * r1, m);
      }
    }
    const long long d = std::gcd(rows[cur][c], m);
    const long long ann = m / d;
    if (ann != m) {
      std::vector<long long> extra(n + 1, 0);
      bool nonzero = false;
      for (std::size_t j = c; j <= n; ++j) {
        extra[j] = md(static_cast<__int128>(rows[cur][j]) * ann, m);
        nonzero = nonzero || extra[j] != 0;
      }
      if (nonzero) rows.push_back(std::move(extra));
    }
    pivot_col.push_back(c);
    ++cur;
  }
  for (std::size_t i = cur; i < rows.size(); ++i) {
    if (rows[i][n] != 0) return std::nullopt;
  }
  std::vector<long long> x(n, 0);
  for (std::size_t k = cur; k-- > 0;) {
    const std::size_t c = pivot_col[k];
    __int128 rhs = rows[k][n];
    for (std::size_t j = c + 1; j < n; ++j) rhs -= static_cast<__int128>(rows[k][j]) * x[j];
    const long long r = md(rhs, m);
    const long long g = rows[k][c];
    const long long d = std::gcd(g, m);
    if (r % d != 0) return std::nullopt;
    long long s, t;
    ext_gcd(g / d, m / d, s, t);
    const long long mm = m / d;
    x[c] = md(static_cast<__int128>(md(s, mm)) * (r / d), mm);
  }
  return x;
}

std::optional<std::vector<long long>> solve_mod_exhaustive(const std::vector<std::vector<long long>>& a,
                                                           const std::vector<long long>& b, long long m,
                                                           long long max_candidates) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<long double>(m);
  if (total > static_cast<long double>(max_candidates)) throw UnsupportedInput("exhaustive search space too large");
  std::vector<long long> x(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      __int128 s = 0;
      for (std::size_t j = 0; j < n; ++j) s += static_cast<__int128>(a[i][j]) * x[j];
      ok = md(s - b[i], m) == 0;
    }
    if (ok) return x;
    std::size_t k = 0;
    while (k < n && ++x[k] == m) x[k++] = 0;
    if (k == n) return std::nullopt;
  }
}

}  // namespace gradalg
