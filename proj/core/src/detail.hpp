#pragma once

// Helpers shared by the law checkers of the higher modules.

#include <string>
#include <vector>

#include "measuringkit/report.hpp"
#include "measuringkit/structures.hpp"

namespace measuringkit::detail {

inline void compare(LawReport& report, const std::string& check, const Matrix& lhs, const Matrix& rhs,
                    const std::vector<std::size_t>& in_dims) {
  for (std::size_t c = 0; c < lhs.cols(); ++c)
    for (std::size_t r = 0; r < lhs.rows(); ++r)
      if (!(lhs.at(r, c) == rhs.at(r, c))) {
        report.fail(check, "basis " + format_index(split_index(c, in_dims)) + ", output coordinate " +
                               std::to_string(r));
        return;
      }
  report.pass(check);
}

inline void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(what + ": map has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

/// Columns side by side; `rows` fixes the height when the list is empty.
inline Matrix hstack_all(const Field& field, std::size_t rows, const std::vector<Matrix>& blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix out(field, rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, off + c) = b.at(r, c);
    off += b.cols();
  }
  return out;
}

}  // namespace measuringkit::detail
