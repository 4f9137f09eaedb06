#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bier/vertex_set.hpp"

namespace bier {

/// Integer n×m matrix whose columns are attached to the vertices of a
/// complex (equivalently, the facets of the dual simple polytope).
class CharMatrix {
 public:
  CharMatrix() = default;
  /// Row-major entries; `labels` is empty or has one name per column.
  CharMatrix(int rows, int cols, std::vector<std::int64_t> entries, std::vector<std::string> labels = {});

  static CharMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::vector<std::string> labels = {});
  static CharMatrix from_columns(int rows, const std::vector<std::vector<std::int64_t>>& columns,
                                 std::vector<std::string> labels = {});

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] std::int64_t at(int r, int c) const { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
  [[nodiscard]] std::vector<std::int64_t> column(int c) const;
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<std::int64_t>& entries() const { return entries_; }

  /// Columns taken in the given order (0-based indices).
  [[nodiscard]] CharMatrix select_columns(std::span<const int> order) const;
  /// Entries reduced into {0, 1}.
  [[nodiscard]] CharMatrix mod2() const;

  /// Determinant of the square submatrix on the given 1-based columns,
  /// taken in increasing column order.
  [[nodiscard]] std::int64_t minor(VertexSet columns) const;

  /// Shape and entries; labels are not compared.
  friend bool operator==(const CharMatrix& a, const CharMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> entries_;
  std::vector<std::string> labels_;
};

/// Exact integer determinant by fraction-free (Bareiss) elimination.
std::int64_t determinant(std::vector<std::int64_t> square, int n);

}  // namespace bier
