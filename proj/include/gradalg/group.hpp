#pragma once

#include <string>
#include <vector>

namespace gradalg {

/// Z/n_1 x ... x Z/n_r with elements enumerated in mixed radix, first factor most significant.
class FinAbGroup {
 public:
  FinAbGroup() : FinAbGroup(std::vector<int>{}) {}
  explicit FinAbGroup(std::vector<int> cyclic_orders);

  const std::vector<int>& orders() const { return orders_; }
  int size() const { return size_; }
  int zero() const { return 0; }
  int add(int a, int b) const { return add_[a * size_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int times(long long k, int a) const;

  std::vector<int> digits(int a) const;
  int index(const std::vector<int>& digits) const;
  int exponent() const;
  int element_order(int a) const;
  std::string name(int a) const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.orders_ == b.orders_; }
  friend bool operator!=(const FinAbGroup& a, const FinAbGroup& b) { return !(a == b); }

 private:
  std::vector<int> orders_;
  int size_ = 1;
  std::vector<int> add_, neg_;
};

}  // namespace gradalg
