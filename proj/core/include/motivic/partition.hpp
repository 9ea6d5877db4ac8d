#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace motivic {

/// Integer partition: weakly decreasing positive parts. The empty list is the
/// empty partition. Comparison is lexicographic on the parts.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; negative or increasing parts throw.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }
  /// i-th part (0-based); zero past the end.
  int operator[](int i) const noexcept { return i < length() ? parts_[i] : 0; }

  /// Bracketed form, e.g. "[3,1]" or "[]".
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// The rows x cols rectangle indexing Schubert classes of G(rows, rows + cols).
struct Box {
  int rows = 1;
  int cols = 0;

  bool contains(const Partition& lambda) const noexcept {
    return lambda.length() <= rows && lambda[0] <= cols;
  }
  int area() const noexcept { return rows * cols; }
  Box transposed() const noexcept { return {cols, rows}; }

  friend bool operator==(const Box&, const Box&) = default;
};

enum class Strip { row, column };

/// Pieri rule: all mu in the box with mu/lambda a horizontal (row) or vertical
/// (column) strip of i boxes, sorted in descending lexicographic order.
std::vector<Partition> pieri(const Partition& lambda, int i, Strip kind, const Box& box);

/// Every partition that fits the box, ordered by size then ascending lexicographically.
std::vector<Partition> partitions_in_box(const Box& box);

}  // namespace motivic

template <>
struct std::hash<motivic::Partition> {
  std::size_t operator()(const motivic::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};
