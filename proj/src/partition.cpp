#include "a1u/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "a1u/error.hpp"

namespace a1u {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int v : parts_) {
    if (v < 1) throw Error(ErrorCode::InvalidPartition, "partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<int> Partition::nontrivial_parts() const {
  std::vector<int> out;
  std::copy_if(parts_.begin(), parts_.end(), std::back_inserter(out), [](int v) { return v >= 2; });
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::InvalidPartition,
                  "cannot read partition part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw Error(ErrorCode::InvalidPartition, "partition parts must be listed in descending order");
  }
  return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
  std::string out;
  for (int v : p.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  std::vector<int> current;
  if (n > 0) partitions_rec(n, max_part, current, out);
  return out;
}

}  // namespace a1u
