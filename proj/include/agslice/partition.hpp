#pragma once

#include <ostream>
#include <vector>

namespace agslice {

/// Weakly decreasing sequence of positive integers. Also used as the Jordan
/// type of a nilpotent matrix (block sizes).
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws std::invalid_argument on negative or
  /// increasing entries.
  explicit Partition(std::vector<int> parts);

  /// Partition with part j repeated mult[j-1] times.
  static Partition from_multiplicities(const std::vector<int>& mult);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// i-th part, 1-based, zero past the end.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  /// Number of parts equal to j.
  int multiplicity(int j) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Transpose of the Young diagram.
Partition conjugate(const Partition& p);

/// a <= b in dominance order: every partial sum of a is at most that of b.
/// Throws std::invalid_argument when the sizes differ.
bool dominance_leq(const Partition& a, const Partition& b);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace agslice
