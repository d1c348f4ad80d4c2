#include "agslice/dense.hpp"

#include <string>

namespace agslice {

std::vector<IndexSet> subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  IndexSet cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

void validate_index_set(const IndexSet& s, int n, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n)
      throw std::invalid_argument(std::string(what) + " index " + std::to_string(s[i]) +
                                  " outside 1.." + std::to_string(n));
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument(std::string(what) + " must be strictly increasing");
  }
}

}  // namespace agslice
