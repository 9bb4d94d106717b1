#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "mawdist/alphabet.hpp"
#include "mawdist/compare.hpp"
#include "mawdist/phylip.hpp"

namespace maw {

enum class CompareMode { linear, circular };

struct MatrixOptions {
  CompareMode mode = CompareMode::linear;
  std::optional<int32_t> max_len;
  int32_t workers = 1;
  bool lenient = false;
  // called after each finished pair with (done, total); may run on any worker
  std::function<void(size_t, size_t)> progress;
};

/// Full pairwise LW matrix. Per-sequence MAW sets are computed once and
/// shared read-only; each (i, j) pair is an independent work unit, so the
/// result is bitwise identical for any worker count.
inline DistanceMatrix pairwise_matrix(const std::vector<Sequence>& seqs,
                                      const Alphabet& alphabet,
                                      const MatrixOptions& opt = {}) {
  const size_t k = seqs.size();
  if (k < 2) throw std::invalid_argument("need at least 2 sequences");
  const auto workers =
      static_cast<size_t>(opt.workers < 1 ? 1 : opt.workers);

  std::vector<std::vector<int32_t>> codes(k);
  for (size_t i = 0; i < k; ++i)
    codes[i] = encode(seqs[i].symbols, alphabet, opt.lenient);

  std::vector<MawSet> sets;
  sets.reserve(k);
  for (size_t i = 0; i < k; ++i)
    sets.push_back(opt.mode == CompareMode::circular
                       ? circular_maws(codes[i], alphabet)
                       : compute_maws(codes[i], alphabet));

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);

  DistanceMatrix m;
  for (const auto& s : seqs) m.ids.push_back(s.id);
  m.values.assign(k * k, 0.0);

  std::atomic<size_t> next{0};
  std::atomic<size_t> done{0};
  auto work = [&] {
    while (true) {
      const size_t p = next.fetch_add(1);
      if (p >= pairs.size()) break;
      const auto [i, j] = pairs[p];
      const PairContext ctx = build_pair_context(sets[i], sets[j]);
      const double lw = lw_merge(sets[i], sets[j], ctx, opt.max_len).lw;
      m.at(i, j) = lw;
      m.at(j, i) = lw;
      const size_t d = done.fetch_add(1) + 1;
      if (opt.progress) opt.progress(d, pairs.size());
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return m;
}

}  // namespace maw
