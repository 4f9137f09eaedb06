#include "bier/char_matrix.hpp"

#include <utility>

#include "bier/error.hpp"

namespace bier {

CharMatrix::CharMatrix(int rows, int cols, std::vector<std::int64_t> entries, std::vector<std::string> labels)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), labels_(std::move(labels)) {
  if (rows < 0 || cols < 0) throw DomainError("matrix shape must be nonnegative");
  if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw DomainError("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                      std::to_string(rows * cols));
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(cols))
    throw DomainError("matrix needs one label per column");
}

CharMatrix CharMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::vector<std::string> labels) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  std::vector<std::int64_t> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw DomainError("ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return CharMatrix(r, c, std::move(entries), std::move(labels));
}

CharMatrix CharMatrix::from_columns(int rows, const std::vector<std::vector<std::int64_t>>& columns,
                                    std::vector<std::string> labels) {
  const int c = static_cast<int>(columns.size());
  std::vector<std::int64_t> entries(static_cast<std::size_t>(rows * c));
  for (int j = 0; j < c; ++j) {
    if (static_cast<int>(columns[static_cast<std::size_t>(j)].size()) != rows) throw DomainError("column has wrong length");
    for (int i = 0; i < rows; ++i) entries[static_cast<std::size_t>(i * c + j)] = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  return CharMatrix(rows, c, std::move(entries), std::move(labels));
}

std::vector<std::int64_t> CharMatrix::column(int c) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
  return out;
}

CharMatrix CharMatrix::select_columns(std::span<const int> order) const {
  std::vector<std::vector<std::int64_t>> cols;
  std::vector<std::string> names;
  for (int c : order) {
    if (c < 0 || c >= cols_) throw DomainError("column index out of range");
    cols.push_back(column(c));
    if (!labels_.empty()) names.push_back(labels_[static_cast<std::size_t>(c)]);
  }
  return from_columns(rows_, cols, std::move(names));
}

CharMatrix CharMatrix::mod2() const {
  std::vector<std::int64_t> reduced(entries_);
  for (auto& e : reduced) e = ((e % 2) + 2) % 2;
  return CharMatrix(rows_, cols_, std::move(reduced), labels_);
}

std::int64_t CharMatrix::minor(VertexSet columns) const {
  if (columns.size() != rows_) throw DomainError("minor needs exactly as many columns as rows");
  if (columns.max_label() > cols_) throw DomainError("minor column out of range");
  std::vector<std::int64_t> square;
  square.reserve(static_cast<std::size_t>(rows_ * rows_));
  const auto picked = columns.labels();
  for (int r = 0; r < rows_; ++r)
    for (int c : picked) square.push_back(at(r, c - 1));
  return determinant(std::move(square), rows_);
}

std::int64_t determinant(std::vector<std::int64_t> a, int n) {
  if (a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) throw DomainError("determinant needs a square matrix");
  if (n == 0) return 1;
  const auto idx = [n](int r, int c) { return static_cast<std::size_t>(r * n + c); };
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[idx(k, k)] == 0) {
      int swap_row = k + 1;
      while (swap_row < n && a[idx(swap_row, k)] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(a[idx(k, c)], a[idx(swap_row, c)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(a[idx(i, j)]) * a[idx(k, k)] - static_cast<__int128>(a[idx(i, k)]) * a[idx(k, j)];
        a[idx(i, j)] = static_cast<std::int64_t>(num / prev);
      }
      a[idx(i, k)] = 0;
    }
    prev = a[idx(k, k)];
  }
  return sign * a[idx(n - 1, n - 1)];
}

}  // namespace bier
