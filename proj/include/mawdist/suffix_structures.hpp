#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mawdist/rmq.hpp"
#include "mawdist/suffix_array.hpp"

namespace maw {

/// Suffix array, inverse, LCP array and an RMQ index over one text,
/// answering longest-common-extension queries in constant time.
/// Immutable after construction; safe to share across readers.
class SuffixStructures {
 public:
  explicit SuffixStructures(std::span<const int32_t> text)
      : n_(static_cast<int32_t>(text.size())),
        sa_(build_suffix_array(text)),
        isa_(invert_permutation(sa_)),
        lcp_(build_lcp(text, sa_, isa_)),
        rmq_(lcp_) {}

  /// Length of the longest common prefix of the suffixes at p and q.
  int32_t lce(int32_t p, int32_t q) const {
    if (p < 0 || p >= n_ || q < 0 || q >= n_)
      throw std::out_of_range("lce position out of range");
    if (p == q) return n_ - p;
    int32_t rp = isa_[p], rq = isa_[q];
    if (rp > rq) std::swap(rp, rq);
    return rmq_.min(rp + 1, rq);
  }

  int32_t size() const { return n_; }
  const std::vector<int32_t>& sa() const { return sa_; }
  const std::vector<int32_t>& isa() const { return isa_; }
  const std::vector<int32_t>& lcp() const { return lcp_; }

 private:
  int32_t n_;
  std::vector<int32_t> sa_;
  std::vector<int32_t> isa_;
  std::vector<int32_t> lcp_;
  RmqSparseTable rmq_;
};

}  // namespace maw
