#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace maw {

namespace detail {

// SA-IS induced sorting. s holds values in [0, K); s.back() must be 0 and
// must be the unique minimum.
inline void sais(std::span<const int32_t> s, std::span<int32_t> sa, int32_t K) {
  const auto n = static_cast<int32_t>(s.size());
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  std::vector<uint8_t> stype(n);
  stype[n - 1] = 1;
  for (int32_t i = n - 2; i >= 0; --i)
    stype[i] = (s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1])) ? 1 : 0;
  auto is_lms = [&](int32_t i) { return i > 0 && stype[i] && !stype[i - 1]; };

  std::vector<int32_t> bkt(K);
  auto bucket_ends = [&] {
    std::fill(bkt.begin(), bkt.end(), 0);
    for (int32_t i = 0; i < n; ++i) ++bkt[s[i]];
    int32_t sum = 0;
    for (auto& b : bkt) {
      sum += b;
      b = sum;
    }
  };
  auto bucket_starts = [&] {
    std::fill(bkt.begin(), bkt.end(), 0);
    for (int32_t i = 0; i < n; ++i) ++bkt[s[i]];
    int32_t sum = 0;
    for (auto& b : bkt) {
      int32_t t = b;
      b = sum;
      sum += t;
    }
  };
  auto induce = [&] {
    bucket_starts();
    for (int32_t r = 0; r < n; ++r) {
      int32_t j = sa[r] - 1;
      if (sa[r] > 0 && !stype[j]) sa[bkt[s[j]]++] = j;
    }
    bucket_ends();
    for (int32_t r = n - 1; r >= 0; --r) {
      int32_t j = sa[r] - 1;
      if (sa[r] > 0 && stype[j]) sa[--bkt[s[j]]] = j;
    }
  };

  // Stage 1: drop LMS suffixes at their bucket ends and induce once; this
  // sorts the LMS substrings.
  std::fill(sa.begin(), sa.end(), -1);
  bucket_ends();
  int32_t nlms = 0;
  for (int32_t i = 1; i < n; ++i)
    if (is_lms(i)) {
      sa[--bkt[s[i]]] = i;
      ++nlms;
    }
  induce();

  std::vector<int32_t> lms_sorted;
  lms_sorted.reserve(nlms);
  for (int32_t r = 0; r < n; ++r)
    if (is_lms(sa[r])) lms_sorted.push_back(sa[r]);

  // Stage 2: name LMS substrings; equal substrings get equal names.
  std::vector<int32_t> name(n, -1);
  int32_t names = 0, prev = -1;
  for (int32_t pos : lms_sorted) {
    bool same = false;
    if (prev >= 0) {
      same = true;
      for (int32_t d = 0;; ++d) {
        if (s[prev + d] != s[pos + d]) {
          same = false;
          break;
        }
        if (d > 0 && (is_lms(prev + d) || is_lms(pos + d))) {
          same = is_lms(prev + d) && is_lms(pos + d);
          break;
        }
      }
    }
    if (!same) ++names;
    name[pos] = names - 1;
    prev = pos;
  }

  // Stage 3: if names collide, recurse on the reduced string.
  if (names < nlms) {
    std::vector<int32_t> s1, lms_pos;
    s1.reserve(nlms);
    lms_pos.reserve(nlms);
    for (int32_t i = 1; i < n; ++i)
      if (is_lms(i)) {
        lms_pos.push_back(i);
        s1.push_back(name[i]);
      }
    std::vector<int32_t> sa1(nlms);
    sais(s1, sa1, names);
    for (int32_t t = 0; t < nlms; ++t) lms_sorted[t] = lms_pos[sa1[t]];
  }

  // Stage 4: place LMS suffixes in final order and induce the rest.
  std::fill(sa.begin(), sa.end(), -1);
  bucket_ends();
  for (int32_t t = nlms - 1; t >= 0; --t) {
    int32_t pos = lms_sorted[t];
    sa[--bkt[s[pos]]] = pos;
  }
  induce();
}

}  // namespace detail

/// Suffix array over arbitrary non-negative integer codes. Suffixes are
/// compared as plain words (a proper prefix sorts before its extensions);
/// a terminator is appended internally and stripped from the result.
inline std::vector<int32_t> build_suffix_array(std::span<const int32_t> text) {
  if (text.empty()) throw std::invalid_argument("empty text");
  const auto n = static_cast<int32_t>(text.size());
  std::vector<int32_t> s(n + 1);
  int32_t K = 1;
  for (int32_t i = 0; i < n; ++i) {
    if (text[i] < 0) throw std::invalid_argument("negative symbol code");
    s[i] = text[i] + 1;
    K = std::max(K, s[i] + 1);
  }
  s[n] = 0;
  std::vector<int32_t> sa(n + 1);
  detail::sais(s, sa, K);
  return {sa.begin() + 1, sa.end()};
}

inline std::vector<int32_t> invert_permutation(std::span<const int32_t> sa) {
  std::vector<int32_t> isa(sa.size());
  for (int32_t r = 0; r < static_cast<int32_t>(sa.size()); ++r) isa[sa[r]] = r;
  return isa;
}

/// LCP array via Kasai's rank-and-scan: lcp[r] is the longest common prefix
/// of the suffixes at sa[r-1] and sa[r]; lcp[0] = 0.
inline std::vector<int32_t> build_lcp(std::span<const int32_t> text,
                                      std::span<const int32_t> sa,
                                      std::span<const int32_t> isa) {
  const auto n = static_cast<int32_t>(text.size());
  std::vector<int32_t> lcp(n, 0);
  int32_t h = 0;
  for (int32_t i = 0; i < n; ++i) {
    if (isa[i] > 0) {
      int32_t j = sa[isa[i] - 1];
      while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
      lcp[isa[i]] = h;
      if (h > 0) --h;
    } else {
      h = 0;
    }
  }
  return lcp;
}

}  // namespace maw
