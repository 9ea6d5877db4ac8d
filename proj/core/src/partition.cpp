#include "motivic/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace motivic {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("partition must be written as [a,b,...]");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("bad partition part '" + std::string(item) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (trim(text).empty()) throw std::invalid_argument("trailing comma in partition");
  }
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.empty() ? 0 : lambda[0], 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

namespace {

// Rows of mu are chosen top to bottom; lambda_i <= mu_i <= lambda_{i-1}.
void horizontal_strips(const Partition& lambda, int remaining, int row, int row_limit, int cols,
                       std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    std::vector<int> parts = current;
    for (int r = row; r < lambda.length(); ++r) parts.push_back(lambda[r]);
    out.emplace_back(std::move(parts));
    return;
  }
  if (row >= row_limit) return;
  const int low = lambda[row];
  const int high = row == 0 ? cols : lambda[row - 1];
  if (low > high) return;
  for (int add = std::min(remaining, high - low); add >= 0; --add) {
    if (low + add == 0) break;
    current.push_back(low + add);
    horizontal_strips(lambda, remaining - add, row + 1, row_limit, cols, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> pieri(const Partition& lambda, int i, Strip kind, const Box& box) {
  if (!box.contains(lambda))
    throw std::invalid_argument("partition " + lambda.to_string() + " does not fit the " +
                                std::to_string(box.rows) + "x" + std::to_string(box.cols) + " box");
  if (i < 1) throw std::invalid_argument("Pieri strip length must be positive");
  std::vector<Partition> out;
  if (kind == Strip::column) {
    for (const auto& mu : pieri(conjugate(lambda), i, Strip::row, box.transposed()))
      out.push_back(conjugate(mu));
  } else {
    std::vector<int> current;
    const int row_limit = std::min(box.rows, lambda.length() + 1);
    horizontal_strips(lambda, i, 0, row_limit, box.cols, current, out);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

void enumerate_box(int row, int max_part, const Box& box, std::vector<int>& current,
                   std::vector<Partition>& out) {
  out.emplace_back(current);
  if (row == box.rows) return;
  for (int part = 1; part <= max_part; ++part) {
    current.push_back(part);
    enumerate_box(row + 1, part, box, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(const Box& box) {
  std::vector<Partition> out;
  std::vector<int> current;
  enumerate_box(0, box.cols, box, current, out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace motivic
