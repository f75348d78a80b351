#pragma once

#include <optional>
#include <vector>

#include "gradalg/matrix.hpp"

namespace gradalg {

/// Incrementally maintained reduced row-echelon basis of a subspace of k^n.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t n) : n_(n), pivot_of_(n, -1) {}

  // Adds v; returns false when v already lies in the span.
  bool add(const SparseVec& v);
  // v minus its projection onto the span along the pivot coordinates.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return n_; }
  // Basis vectors sorted by pivot, each with leading 1 and zeros at the other pivots.
  std::vector<SparseVec> rref() const;
  std::vector<std::uint32_t> pivots() const;

 private:
  std::size_t n_;
  std::vector<SparseVec> basis_;
  std::vector<std::uint32_t> pivot_;
  std::vector<int> pivot_of_;
};

std::size_t rank(const Matrix& a);
// Columns form a basis of {x : a x = 0}.
Matrix nullspace(const Matrix& a);
// Some x with a x = b (free variables set to zero).
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

/// Column space basis of a in reduced echelon form.
/// basis: n x r with the RREF basis as columns; pivots: the r pivot rows;
/// complement: the n-r non-pivot row indices.
struct ColumnSpace {
  Matrix basis;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> complement;
};
ColumnSpace column_space(const Matrix& a);

/// Quotient k^n -> k^n / colspace(a) in the complement coordinates.
/// q: (n-r) x n with q * a = 0; section: n x (n-r) with q * section = id.
struct Quotient {
  Matrix q;
  Matrix section;
  ColumnSpace span;
};
Quotient quotient(const Matrix& a);

}  // namespace gradalg
