#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace maw {

/// Sparse-table range minimum: O(n log n) preprocessing, O(1) queries.
class RmqSparseTable {
 public:
  RmqSparseTable() = default;

  explicit RmqSparseTable(std::span<const int32_t> values)
      : n_(static_cast<int32_t>(values.size())) {
    if (n_ == 0) return;
    levels_ = std::bit_width(static_cast<uint32_t>(n_));
    table_.resize(static_cast<size_t>(levels_) * n_);
    std::copy(values.begin(), values.end(), table_.begin());
    for (int32_t k = 1; k < levels_; ++k) {
      const int32_t half = 1 << (k - 1);
      const int32_t* prev = table_.data() + static_cast<size_t>(k - 1) * n_;
      int32_t* cur = table_.data() + static_cast<size_t>(k) * n_;
      for (int32_t i = 0; i + (1 << k) <= n_; ++i)
        cur[i] = std::min(prev[i], prev[i + half]);
    }
  }

  /// Minimum over the inclusive range [l, r].
  int32_t min(int32_t l, int32_t r) const {
    if (l < 0 || r >= n_ || l > r) throw std::out_of_range("rmq range");
    const int32_t k = std::bit_width(static_cast<uint32_t>(r - l + 1)) - 1;
    const int32_t* row = table_.data() + static_cast<size_t>(k) * n_;
    return std::min(row[l], row[r + 1 - (1 << k)]);
  }

  int32_t size() const { return n_; }

 private:
  int32_t n_ = 0;
  int32_t levels_ = 0;
  std::vector<int32_t> table_;
};

}  // namespace maw
