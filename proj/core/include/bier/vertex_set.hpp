#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "bier/error.hpp"

namespace bier {

/// Largest ground set a complex may live on.
inline constexpr int kMaxGroundSize = 64;

/// A subset of the ground set {1, ..., 64}, stored as a bit mask.
///
/// Labels are 1-based everywhere in the public interface; bit (i - 1)
/// holds label i. Ordering compares the raw masks, which gives a total
/// order that is stable across runs but has no combinatorial meaning.
class VertexSet {
 public:
  constexpr VertexSet() = default;

  static constexpr VertexSet from_bits(std::uint64_t bits) { return VertexSet(bits); }

  static VertexSet of(std::initializer_list<int> labels) {
    VertexSet s;
    for (int v : labels) s = s.with(v);
    return s;
  }

  static VertexSet of(const std::vector<int>& labels) {
    VertexSet s;
    for (int v : labels) s = s.with(v);
    return s;
  }

  /// {1, ..., m}
  static constexpr VertexSet range(int m) {
    if (m < 0 || m > kMaxGroundSize) throw DomainError("ground size out of range: " + std::to_string(m));
    return VertexSet(m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1));
  }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }

  [[nodiscard]] constexpr bool contains(int label) const {
    return label >= 1 && label <= kMaxGroundSize && ((bits_ >> (label - 1)) & 1U) != 0;
  }

  [[nodiscard]] constexpr VertexSet with(int label) const {
    check_label(label);
    return VertexSet(bits_ | (std::uint64_t{1} << (label - 1)));
  }

  [[nodiscard]] constexpr VertexSet without(int label) const {
    check_label(label);
    return VertexSet(bits_ & ~(std::uint64_t{1} << (label - 1)));
  }

  [[nodiscard]] constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest label, or 0 for the empty set.
  [[nodiscard]] constexpr int min_label() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest label, or 0 for the empty set.
  [[nodiscard]] constexpr int max_label() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  [[nodiscard]] std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// Calls f(label) for each member in increasing order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b) + 1);
  }

  /// Set with labels shifted up by `offset`.
  [[nodiscard]] constexpr VertexSet shifted(int offset) const {
    if (offset < 0 || max_label() + offset > kMaxGroundSize) throw DomainError("shift leaves the ground range");
    return VertexSet(offset == 64 ? 0 : bits_ << offset);
  }

  /// Labels in (offset, offset + width], moved down to (0, width].
  [[nodiscard]] constexpr VertexSet slice(int offset, int width) const {
    const std::uint64_t window = width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
    return VertexSet((bits_ >> offset) & window);
  }

  /// Lexicographic comparison of the sorted label lists ({1,2,3} < {1,2,4} < {1,3}).
  [[nodiscard]] static bool lex_less(VertexSet a, VertexSet b) {
    const auto la = a.labels();
    const auto lb = b.labels();
    return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
  }

  /// "{1,3,4}"
  [[nodiscard]] std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int v) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    });
    return s + "}";
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) = default;

 private:
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr void check_label(int label) {
    if (label < 1 || label > kMaxGroundSize) throw DomainError("vertex label out of range: " + std::to_string(label));
  }

  std::uint64_t bits_ = 0;
};

}  // namespace bier

template <>
struct std::hash<bier::VertexSet> {
  std::size_t operator()(bier::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
