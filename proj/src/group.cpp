#include "gradalg/group.hpp"

#include <numeric>

#include "gradalg/errors.hpp"

namespace gradalg {

FinAbGroup::FinAbGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  long long n = 1;
  for (int o : orders_) {
    if (o < 1) throw DomainError("cyclic orders must be positive");
    n *= o;
    if (n > 4096) throw UnsupportedInput("group too large");
  }
  size_ = static_cast<int>(n);
  add_.resize(static_cast<std::size_t>(size_) * size_);
  neg_.resize(size_);
  for (int a = 0; a < size_; ++a) {
    const auto da = digits(a);
    std::vector<int> dn(da.size());
    for (std::size_t t = 0; t < da.size(); ++t) dn[t] = (orders_[t] - da[t]) % orders_[t];
    neg_[a] = index(dn);
    for (int b = 0; b < size_; ++b) {
      const auto db = digits(b);
      std::vector<int> ds(da.size());
      for (std::size_t t = 0; t < da.size(); ++t) ds[t] = (da[t] + db[t]) % orders_[t];
      add_[a * size_ + b] = index(ds);
    }
  }
}

std::vector<int> FinAbGroup::digits(int a) const {
  std::vector<int> d(orders_.size());
  for (std::size_t t = orders_.size(); t-- > 0;) {
    d[t] = a % orders_[t];
    a /= orders_[t];
  }
  return d;
}

int FinAbGroup::index(const std::vector<int>& d) const {
  if (d.size() != orders_.size()) throw DomainError("group element has wrong number of components");
  int a = 0;
  for (std::size_t t = 0; t < orders_.size(); ++t) a = a * orders_[t] + ((d[t] % orders_[t]) + orders_[t]) % orders_[t];
  return a;
}

int FinAbGroup::times(long long k, int a) const {
  int r = 0;
  const int o = element_order(a);
  k = ((k % o) + o) % o;
  for (long long i = 0; i < k; ++i) r = add(r, a);
  return r;
}

int FinAbGroup::exponent() const {
  int e = 1;
  for (int o : orders_) e = std::lcm(e, o);
  return e;
}

int FinAbGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = add(x, a);
    ++k;
  }
  return k;
}

std::string FinAbGroup::name(int a) const {
  const auto d = digits(a);
  if (d.size() == 1) return std::to_string(d[0]);
  std::string s = "(";
  for (std::size_t t = 0; t < d.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(d[t]);
  }
  return s + ")";
}

}  // namespace gradalg
