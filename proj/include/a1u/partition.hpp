#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace a1u {

// Descending list of positive integers: the Jordan blocks of a unipotent
// element on the natural module.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws InvalidPartition on a non-positive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int total() const noexcept;
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int part) const noexcept;
  // Parts >= 2.
  std::vector<int> nontrivial_parts() const;
  int trivial_count() const noexcept { return multiplicity(1); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Comma-separated integers, e.g. "6,1,1,1,1". Parts must already be listed in
// descending order (InvalidPartition otherwise).
Partition parse_partition(std::string_view text);

// "6,1,1,1,1".
std::string to_string(const Partition& p);

// All partitions of n with every part <= max_part, in reverse lexicographic
// order starting from the largest first part.
std::vector<Partition> partitions_of(int n, int max_part);

}  // namespace a1u
