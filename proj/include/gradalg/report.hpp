#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradalg/matrix.hpp"
#include "gradalg/scalar.hpp"

namespace gradalg {

// One concrete witness of a failed identity.  For map identities lhs/rhs are
// the first differing matrix entries and `entry` holds its (row, col).
struct Violation {
  std::string check;
  std::vector<long> indices;
  std::optional<Cyclotomic> lhs, rhs;
  std::vector<long> entry;
  std::string detail;
};

// Appends a violation when the two maps differ; returns true when equal.
bool compare_maps(std::vector<Violation>& out, const std::string& check, std::vector<long> indices, const Matrix& lhs,
                  const Matrix& rhs, std::size_t limit = 16);

}  // namespace gradalg
