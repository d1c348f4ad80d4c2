#include "agslice/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace agslice {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiplicities(const std::vector<int>& mult) {
  std::vector<int> parts;
  for (int j = static_cast<int>(mult.size()); j >= 1; --j) {
    if (mult[j - 1] < 0) throw std::invalid_argument("negative part multiplicity");
    parts.insert(parts.end(), mult[j - 1], j);
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int j) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

Partition conjugate(const Partition& p) {
  std::vector<int> t(p.length() == 0 ? 0 : p.parts().front(), 0);
  for (int part : p.parts())
    for (int c = 0; c < part; ++c) ++t[c];
  return Partition(std::move(t));
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominance comparison of partitions of " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
  int sa = 0;
  int sb = 0;
  const int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> cur;
  generate(n, n, cur, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.parts()[i];
  return os << ')';
}

}  // namespace agslice
