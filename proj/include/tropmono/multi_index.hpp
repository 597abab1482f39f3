#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tropmono/error.hpp"

namespace tropmono {

/// Strictly increasing list of distinct non-negative indices.
class MultiIndex {
public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> idx) : idx_(idx) { check(); }
  explicit MultiIndex(std::vector<int> idx) : idx_(std::move(idx)) { check(); }

  /// Sorts and validates; duplicates are rejected.
  static MultiIndex from_unsorted(std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    return MultiIndex(std::move(idx));
  }

  [[nodiscard]] std::size_t size() const { return idx_.size(); }
  [[nodiscard]] bool empty() const { return idx_.empty(); }
  [[nodiscard]] int operator[](std::size_t k) const { return idx_[k]; }
  [[nodiscard]] const std::vector<int> &values() const { return idx_; }
  [[nodiscard]] auto begin() const { return idx_.begin(); }
  [[nodiscard]] auto end() const { return idx_.end(); }

  [[nodiscard]] bool contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
  }
  /// Position of i, or -1.
  [[nodiscard]] int position(int i) const {
    auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
    return (it != idx_.end() && *it == i) ? static_cast<int>(it - idx_.begin()) : -1;
  }
  [[nodiscard]] MultiIndex without(int i) const {
    std::vector<int> out;
    out.reserve(idx_.size());
    for (int v : idx_)
      if (v != i) out.push_back(v);
    return MultiIndex(std::move(out));
  }
  [[nodiscard]] MultiIndex without_position(std::size_t k) const {
    std::vector<int> out = idx_;
    out.erase(out.begin() + static_cast<long>(k));
    return MultiIndex(std::move(out));
  }
  [[nodiscard]] bool within(int lo, int hi_exclusive) const {
    return idx_.empty() || (idx_.front() >= lo && idx_.back() < hi_exclusive);
  }
  [[nodiscard]] bool is_subset_of(const MultiIndex &o) const {
    return std::includes(o.idx_.begin(), o.idx_.end(), idx_.begin(), idx_.end());
  }

  [[nodiscard]] std::string str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < idx_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(idx_[k]);
    }
    return s + "}";
  }

  friend bool operator==(const MultiIndex &, const MultiIndex &) = default;
  friend auto operator<=>(const MultiIndex &a, const MultiIndex &b) {
    // shorter first, then lexicographic: subsets enumerate by size
    if (a.idx_.size() != b.idx_.size()) return a.idx_.size() <=> b.idx_.size();
    return a.idx_ <=> b.idx_;
  }

private:
  void check() const {
    for (std::size_t k = 0; k < idx_.size(); ++k) {
      if (idx_[k] < 0) throw DimensionError("negative index in MultiIndex");
      if (k && idx_[k - 1] >= idx_[k])
        throw DimensionError("MultiIndex entries must be strictly increasing");
    }
  }
  std::vector<int> idx_;
};

struct Shuffle {
  int sign;
  MultiIndex merged;
};

/// Sign of the permutation sorting the concatenation a‖b, plus the sorted
/// union. Empty when a and b intersect.
inline std::optional<Shuffle> shuffle_sign(const MultiIndex &a, const MultiIndex &b) {
  std::vector<int> merged;
  merged.reserve(a.size() + b.size());
  long inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      merged.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      // b[j] jumps over the a-entries still waiting
      inversions += static_cast<long>(a.size() - i);
      merged.push_back(b[j++]);
    } else {
      return std::nullopt;
    }
  }
  return Shuffle{inversions % 2 == 0 ? 1 : -1, MultiIndex(std::move(merged))};
}

/// Sign of a permutation given as images of 0..k-1.
inline int permutation_sign(const std::vector<int> &perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[static_cast<std::size_t>(v)])
      throw DimensionError("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
  seen.assign(perm.size(), false);
  int sign = 1;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t c = s; !seen[c]; c = static_cast<std::size_t>(perm[c])) {
      seen[c] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// All k-subsets of {0,..,n-1} in lexicographic order.
inline std::vector<MultiIndex> subsets(int n, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) cur[static_cast<std::size_t>(t)] = t;
  while (true) {
    out.emplace_back(cur);
    int t = k - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] == n - k + t) --t;
    if (t < 0) break;
    ++cur[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u)
      cur[static_cast<std::size_t>(u)] = cur[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

/// All permutations of 0..k-1 in lexicographic order.
inline std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace tropmono
