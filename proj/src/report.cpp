#include "gradalg/report.hpp"

#include "gradalg/errors.hpp"

namespace gradalg {

bool compare_maps(std::vector<Violation>& out, const std::string& check, std::vector<long> indices, const Matrix& lhs,
                  const Matrix& rhs, std::size_t limit) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw DomainError(check + ": compared maps have different shapes");
  }
  if (lhs == rhs) return true;
  if (out.size() >= limit) return false;
  for (std::size_t c = 0; c < lhs.cols(); ++c) {
    if (lhs.col(c) == rhs.col(c)) continue;
    const Matrix diff = Matrix::from_columns(lhs.rows(), {axpy(lhs.col(c), -1, rhs.col(c))});
    const auto r = diff.col(0).front().first;
    Violation v;
    v.check = check;
    v.indices = std::move(indices);
    v.lhs = lhs.get(r, c);
    v.rhs = rhs.get(r, c);
    v.entry = {static_cast<long>(r), static_cast<long>(c)};
    out.push_back(std::move(v));
    break;
  }
  return false;
}

}  // namespace gradalg
