#include "gradalg/matrix.hpp"

#include <algorithm>

#include "gradalg/errors.hpp"

namespace gradalg {

bool operator==(const SparseEntry& a, const SparseEntry& b) { return a.first == b.first && a.second == b.second; }

SparseVec axpy(const SparseVec& v, const Cyclotomic& c, const SparseVec& w) {
  if (c.is_zero() || w.empty()) return v;
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, c * w[j].second);
      ++j;
    } else {
      Cyclotomic s = v[i].second + c * w[j].second;
      if (!s.is_zero()) out.emplace_back(v[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

Cyclotomic sparse_get(const SparseVec& v, std::uint32_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const SparseEntry& e, std::uint32_t k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return Cyclotomic();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(static_cast<std::uint32_t>(i), Cyclotomic(1));
  return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Cyclotomic>>& rows, std::size_t ncols) {
  if (!rows.empty()) ncols = rows[0].size();
  Matrix m(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) {
      if (!rows[r][c].is_zero()) m.data_[c].emplace_back(static_cast<std::uint32_t>(r), rows[r][c]);
    }
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::vector<SparseVec> cols) {
  Matrix m(rows, cols.size());
  m.data_ = std::move(cols);
  return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t ja = 0; ja < a.cols_; ++ja) {
    for (std::size_t jb = 0; jb < b.cols_; ++jb) {
      auto& col = m.data_[ja * b.cols_ + jb];
      col.reserve(a.data_[ja].size() * b.data_[jb].size());
      for (const auto& [ia, va] : a.data_[ja]) {
        for (const auto& [ib, vb] : b.data_[jb]) {
          col.emplace_back(static_cast<std::uint32_t>(ia * b.rows_ + ib), va * vb);
        }
      }
    }
  }
  return m;
}

Cyclotomic Matrix::get(std::size_t r, std::size_t c) const { return sparse_get(data_.at(c), static_cast<std::uint32_t>(r)); }

void Matrix::set(std::size_t r, std::size_t c, const Cyclotomic& v) {
  if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
  auto& col = data_[c];
  const auto key = static_cast<std::uint32_t>(r);
  auto it = std::lower_bound(col.begin(), col.end(), key, [](const SparseEntry& e, std::uint32_t k) { return e.first < k; });
  if (it != col.end() && it->first == key) {
    if (v.is_zero()) col.erase(it);
    else it->second = v;
  } else if (!v.is_zero()) {
    col.insert(it, SparseEntry(key, v));
  }
}

void Matrix::add(std::size_t r, std::size_t c, const Cyclotomic& v) { set(r, c, get(r, c) + v); }

std::vector<std::vector<Cyclotomic>> Matrix::to_dense() const {
  std::vector<std::vector<Cyclotomic>> out(rows_, std::vector<Cyclotomic>(cols_));
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : data_[c]) out[r][c] = v;
  }
  return out;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVec& c) { return c.empty(); });
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : data_[c]) t.data_[r].emplace_back(static_cast<std::uint32_t>(c), v);
  }
  return t;
}

Matrix Matrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  return select_cols(cols).select_rows(rows);
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.data_[j] = data_.at(cols[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  std::vector<long> where(rows_, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) where.at(rows[i]) = static_cast<long>(i);
  Matrix m(rows.size(), cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const auto& [r, v] : data_[c]) {
      if (where[r] >= 0) m.data_[c].emplace_back(static_cast<std::uint32_t>(where[r]), v);
    }
    std::sort(m.data_[c].begin(), m.data_[c].end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
  }
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw DomainError("hstack row mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + a.cols_);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw DomainError("vstack column mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  for (std::size_t c = 0; c < a.cols_; ++c) {
    m.data_[c] = a.data_[c];
    for (const auto& [r, v] : b.data_[c]) m.data_[c].emplace_back(static_cast<std::uint32_t>(r + a.rows_), v);
  }
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& c : m.data_) {
    for (auto& e : c) e.second = -e.second;
  }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DomainError("matrix shape mismatch in addition");
  for (std::size_t c = 0; c < cols_; ++c) data_[c] = axpy(data_[c], 1, b.data_[c]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DomainError("matrix shape mismatch in subtraction");
  for (std::size_t c = 0; c < cols_; ++c) data_[c] = axpy(data_[c], -1, b.data_[c]);
  return *this;
}

namespace {

// Dense accumulator reused across columns of a product.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : vals_(n), touched_(n, 0) {}
  void add(std::uint32_t i, const Cyclotomic& v) {
    if (!touched_[i]) {
      touched_[i] = 1;
      list_.push_back(i);
      vals_[i] = v;
    } else {
      vals_[i] += v;
    }
  }
  SparseVec flush() {
    std::sort(list_.begin(), list_.end());
    SparseVec out;
    out.reserve(list_.size());
    for (auto i : list_) {
      if (!vals_[i].is_zero()) out.emplace_back(i, std::move(vals_[i]));
      vals_[i] = Cyclotomic();
      touched_[i] = 0;
    }
    list_.clear();
    return out;
  }

 private:
  std::vector<Cyclotomic> vals_;
  std::vector<char> touched_;
  std::vector<std::uint32_t> list_;
};

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw DomainError("matrix shape mismatch in product: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                      " * " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix m(a.rows_, b.cols_);
  Accumulator acc(a.rows_);
  for (std::size_t j = 0; j < b.cols_; ++j) {
    const auto& bc = b.data_[j];
    if (bc.empty()) continue;
    if (bc.size() == 1 && bc[0].second.is_one()) {
      m.data_[j] = a.data_[bc[0].first];
      continue;
    }
    for (const auto& [k, bv] : bc) {
      for (const auto& [i, av] : a.data_[k]) acc.add(i, av * bv);
    }
    m.data_[j] = acc.flush();
  }
  return m;
}

Matrix operator*(const Cyclotomic& s, const Matrix& m) {
  if (s.is_zero()) return Matrix(m.rows_, m.cols_);
  Matrix out = m;
  for (auto& c : out.data_) {
    for (auto& e : c) e.second = s * e.second;
  }
  return out;
}

SparseVec Matrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [k, x] : v) out = axpy(out, x, data_.at(k));
  return out;
}

}  // namespace gradalg
