#include "gradalg/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "gradalg/errors.hpp"

namespace gradalg {

SparseVec SpanBuilder::reduce(const SparseVec& v) const {
  SparseVec w = v;
  std::size_t pos = 0;
  while (pos < w.size()) {
    const int k = pivot_of_[w[pos].first];
    if (k < 0) {
      ++pos;
      continue;
    }
    const Cyclotomic c = w[pos].second;
    w = axpy(w, -c, basis_[k]);
  }
  return w;
}

bool SpanBuilder::add(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const std::uint32_t lead = r[0].first;
  const Cyclotomic inv = r[0].second.inverse();
  if (!inv.is_one()) {
    for (auto& e : r) e.second = inv * e.second;
  }
  for (auto& b : basis_) {
    const Cyclotomic c = sparse_get(b, lead);
    if (!c.is_zero()) b = axpy(b, -c, r);
  }
  pivot_of_[lead] = static_cast<int>(basis_.size());
  pivot_.push_back(lead);
  basis_.push_back(std::move(r));
  return true;
}

std::vector<std::uint32_t> SpanBuilder::pivots() const {
  std::vector<std::uint32_t> p = pivot_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<SparseVec> SpanBuilder::rref() const {
  std::vector<SparseVec> out;
  out.reserve(basis_.size());
  for (auto p : pivots()) out.push_back(basis_[pivot_of_[p]]);
  return out;
}

std::size_t rank(const Matrix& a) {
  SpanBuilder sb(a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) sb.add(a.col(c));
  return sb.dim();
}

Matrix nullspace(const Matrix& a) {
  const Matrix t = a.transpose();
  SpanBuilder sb(a.cols());
  for (std::size_t r = 0; r < t.cols(); ++r) sb.add(t.col(r));
  const auto rows = sb.rref();
  const auto piv = sb.pivots();
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto p : piv) is_pivot[p] = 1;
  std::vector<SparseVec> cols;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec x;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Cyclotomic c = sparse_get(rows[i], static_cast<std::uint32_t>(f));
      if (!c.is_zero()) x.emplace_back(piv[i], -c);
    }
    x.emplace_back(static_cast<std::uint32_t>(f), Cyclotomic(1));
    std::sort(x.begin(), x.end(), [](const SparseEntry& p, const SparseEntry& q) { return p.first < q.first; });
    cols.push_back(std::move(x));
  }
  return Matrix::from_columns(a.cols(), std::move(cols));
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DomainError("solve: row mismatch");
  const Matrix t = a.transpose();
  const std::size_t n = a.cols();
  std::vector<SparseVec> out;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    SpanBuilder sb(n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      SparseVec row = t.col(r);
      const Cyclotomic rhs = b.get(r, j);
      if (!rhs.is_zero()) row.emplace_back(static_cast<std::uint32_t>(n), rhs);
      sb.add(row);
    }
    const auto piv = sb.pivots();
    if (!piv.empty() && piv.back() == n) return std::nullopt;
    const auto rows = sb.rref();
    SparseVec x;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Cyclotomic c = sparse_get(rows[i], static_cast<std::uint32_t>(n));
      if (!c.is_zero()) x.emplace_back(piv[i], c);
    }
    out.push_back(std::move(x));
  }
  return Matrix::from_columns(n, std::move(out));
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix::identity(a.rows()));
}

ColumnSpace column_space(const Matrix& a) {
  SpanBuilder sb(a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) sb.add(a.col(c));
  ColumnSpace cs;
  cs.basis = Matrix::from_columns(a.rows(), sb.rref());
  std::vector<char> is_pivot(a.rows(), 0);
  for (auto p : sb.pivots()) {
    cs.pivots.push_back(p);
    is_pivot[p] = 1;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!is_pivot[i]) cs.complement.push_back(i);
  }
  return cs;
}

Quotient quotient(const Matrix& a) {
  Quotient out;
  out.span = column_space(a);
  const std::size_t n = a.rows();
  const auto& comp = out.span.complement;
  std::vector<long> where(n, -1);
  for (std::size_t i = 0; i < comp.size(); ++i) where[comp[i]] = static_cast<long>(i);
  out.q = Matrix(comp.size(), n);
  for (std::size_t k = 0; k < out.span.pivots.size(); ++k) {
    SparseVec col;
    for (const auto& [r, v] : out.span.basis.col(k)) {
      if (where[r] >= 0) col.emplace_back(static_cast<std::uint32_t>(where[r]), -v);
    }
    out.q.set_col(out.span.pivots[k], std::move(col));
  }
  out.section = Matrix(n, comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i) {
    out.q.set_col(comp[i], SparseVec{{static_cast<std::uint32_t>(i), Cyclotomic(1)}});
    out.section.set_col(i, SparseVec{{static_cast<std::uint32_t>(comp[i]), Cyclotomic(1)}});
  }
  return out;
}

}  // namespace gradalg
