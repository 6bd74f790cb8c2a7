#include "hookcert/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace hookcert {

std::string_view to_string(Parity parity) {
  return parity == Parity::odd ? "odd" : "even";
}

Parity parse_parity(std::string_view text) {
  if (text == "odd") return Parity::odd;
  if (text == "even") return Parity::even;
  throw std::invalid_argument("unknown parity '" + std::string(text) + "'");
}

bool is_partition(std::span<const int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!is_partition(parts_)) {
    throw std::invalid_argument("not a partition: " + to_string());
  }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::from_runs(std::initializer_list<std::pair<int, int>> runs) {
  std::vector<int> parts;
  for (auto [value, count] : runs) {
    if (count < 0) throw std::invalid_argument("negative multiplicity");
    parts.insert(parts.end(), static_cast<std::size_t>(count), value);
  }
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unbalanced brackets");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad partition part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

void conjugate_into(std::span<const int> parts, std::vector<int>& out) {
  out.assign(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()), 0);
  // Column j has as many boxes as there are rows of length >= j.
  int row = static_cast<int>(parts.size());
  for (int j = 1; j <= static_cast<int>(out.size()); ++j) {
    while (row > 0 && parts[row - 1] < j) --row;
    out[j - 1] = row;
  }
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  conjugate_into(lambda.parts(), cols);
  return Partition::trusted(std::move(cols));
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

int hook_length(const Partition& lambda, BoxPosition box) {
  if (box.row < 1 || box.col < 1 || box.row > lambda.length() ||
      box.col > lambda.row(box.row)) {
    throw std::out_of_range("box (" + std::to_string(box.row) + "," +
                            std::to_string(box.col) + ") is not in " + lambda.to_string());
  }
  int leg = 0;
  for (int i = box.row + 1; i <= lambda.length() && lambda.row(i) >= box.col; ++i) ++leg;
  return (lambda.row(box.row) - box.col) + leg + 1;
}

std::vector<int> hook_multiset(const Partition& lambda) {
  std::vector<int> cols;
  conjugate_into(lambda.parts(), cols);
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.weight()));
  for_each_hook(lambda.parts(), cols, [&](int h) { hooks.push_back(h); });
  return hooks;
}

bool contains(std::span<const int> outer, std::span<const int> inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

bool contains(const Partition& outer, const Partition& inner) {
  return contains(outer.parts(), inner.parts());
}

Partition witness_partition(int k, Parity parity) {
  if (k < 2) throw std::invalid_argument("witness partition needs k >= 2");
  if (parity == Parity::odd) return Partition::from_runs({{k + 1, 1}, {1, k}});
  return Partition::from_runs({{k + 1, 1}, {2, 1}, {1, k - 1}});
}

}  // namespace hookcert
