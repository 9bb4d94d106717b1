#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mawdist/alphabet.hpp"
#include "mawdist/suffix_array.hpp"

namespace maw {

/// One minimal absent word x = a·u·b as a tuple: x[0] = letter (an alphabet
/// code) and x[1..] = reference[start..end]. Total length end-start+2 >= 2.
struct MawTuple {
  int32_t letter;
  int32_t start;
  int32_t end;
};

/// The minimal absent words of one text. reference holds alphabet codes
/// (-1 marks separator slots in merged references and never lies inside a
/// decoded factor). Tuples are kept in lexicographic order of their decoded
/// words. declared_period is set to |x| for circular sets.
struct MawSet {
  std::vector<int32_t> reference;
  Alphabet alphabet;
  std::vector<MawTuple> tuples;
  std::optional<int32_t> declared_period;

  int32_t word_length(const MawTuple& t) const { return t.end - t.start + 2; }

  std::string decode(const MawTuple& t) const {
    std::string w;
    w.reserve(static_cast<size_t>(word_length(t)));
    w += alphabet.letter(t.letter);
    for (int32_t k = t.start; k <= t.end; ++k) {
      if (reference[k] < 0) throw std::logic_error("tuple crosses separator");
      w += alphabet.letter(reference[k]);
    }
    return w;
  }

  std::vector<std::string> decoded_words() const {
    std::vector<std::string> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) out.push_back(decode(t));
    return out;
  }
};

namespace detail {

// Open lcp-interval on the traversal stack. Closed child intervals are
// recorded left-to-right as [lb, rb] ranges with their letter masks.
struct MawInterval {
  int32_t lcp;
  int32_t lb;
  std::vector<std::array<int32_t, 3>> kids;  // {lb, rb, unused}
  std::vector<uint64_t> kid_masks;
};

// Bottom-up traversal of the lcp-interval tree of e (the text with a
// terminating 0). For each branching factor u and each child edge b it
// emits a·u·b for every letter a preceding an occurrence of u but no
// occurrence of u·b.
inline void emit_maws(std::span<const int32_t> e, std::span<const int32_t> sa,
                      std::span<const int32_t> lcp,
                      std::vector<MawTuple>& tuples) {
  const auto N = static_cast<int32_t>(e.size());
  struct Child {
    int32_t letter_e;
    int32_t repr;
    uint64_t mask;
  };
  std::vector<Child> scratch;

  auto finalize = [&](MawInterval& node, int32_t rb) -> uint64_t {
    scratch.clear();
    uint64_t mask = 0;
    size_t ci = 0;
    for (int32_t p = node.lb; p <= rb;) {
      int32_t repr;
      uint64_t cmask;
      if (ci < node.kids.size() && node.kids[ci][0] == p) {
        repr = sa[p];
        cmask = node.kid_masks[ci];
        p = node.kids[ci][1] + 1;
        ++ci;
      } else {
        repr = sa[p];
        cmask = repr > 0 ? (uint64_t{1} << (e[repr - 1] - 1)) : 0;
        ++p;
      }
      scratch.push_back({e[repr + node.lcp], repr, cmask});
      mask |= cmask;
    }
    for (const auto& c : scratch) {
      if (c.letter_e == 0) continue;  // terminator edge: no word ends here
      uint64_t diff = mask & ~c.mask;
      while (diff) {
        const int32_t a = std::countr_zero(diff);
        diff &= diff - 1;
        tuples.push_back({a, c.repr, c.repr + node.lcp});
      }
    }
    return mask;
  };

  std::vector<MawInterval> stack;
  stack.push_back({0, 0, {}, {}});
  for (int32_t k = 1; k <= N; ++k) {
    const int32_t l = (k < N) ? lcp[k] : -1;
    int32_t lb = k - 1;
    bool have_child = false;
    std::array<int32_t, 3> child_range{};
    uint64_t child_mask = 0;
    while (!stack.empty() && l < stack.back().lcp) {
      MawInterval node = std::move(stack.back());
      stack.pop_back();
      if (have_child) {
        node.kids.push_back(child_range);
        node.kid_masks.push_back(child_mask);
      }
      const int32_t rb = k - 1;
      child_mask = finalize(node, rb);
      child_range = {node.lb, rb, 0};
      have_child = true;
      lb = node.lb;
    }
    if (stack.empty()) break;  // the root interval was flushed (k == N)
    if (l > stack.back().lcp) stack.push_back({l, lb, {}, {}});
    if (have_child) {
      stack.back().kids.push_back(child_range);
      stack.back().kid_masks.push_back(child_mask);
    }
  }
}

}  // namespace detail

/// All minimal absent words of the text, as tuples in lexicographic order
/// of the decoded words. Words have length >= 2; alphabet letters absent
/// from the text are not reported.
inline MawSet compute_maws(std::vector<int32_t> codes,
                           const Alphabet& alphabet) {
  const auto n = static_cast<int32_t>(codes.size());
  if (n == 0) throw std::invalid_argument("empty text");
  for (int32_t c : codes)
    if (c < 0 || c >= alphabet.size())
      throw std::invalid_argument("symbol outside alphabet");

  std::vector<int32_t> e(n + 1);
  for (int32_t i = 0; i < n; ++i) e[i] = codes[i] + 1;
  e[n] = 0;
  const auto sa = build_suffix_array(e);
  const auto isa = invert_permutation(sa);
  const auto lcp = build_lcp(e, sa, isa);

  std::vector<MawTuple> tuples;
  detail::emit_maws(e, sa, lcp, tuples);

  // Antifactoriality makes rank order equal lexicographic word order.
  std::sort(tuples.begin(), tuples.end(),
            [&](const MawTuple& a, const MawTuple& b) {
              if (a.letter != b.letter) return a.letter < b.letter;
              return isa[a.start] < isa[b.start];
            });

  return MawSet{std::move(codes), alphabet, std::move(tuples), std::nullopt};
}

/// Minimal absent words of the circular word x~: the MAWs of the doubled
/// text xx restricted to length at most |x|, with the period recorded.
inline MawSet circular_maws(std::span<const int32_t> codes,
                            const Alphabet& alphabet) {
  const auto m = static_cast<int32_t>(codes.size());
  if (m == 0) throw std::invalid_argument("empty sequence");
  std::vector<int32_t> doubled;
  doubled.reserve(2 * static_cast<size_t>(m));
  doubled.insert(doubled.end(), codes.begin(), codes.end());
  doubled.insert(doubled.end(), codes.begin(), codes.end());
  MawSet set = compute_maws(std::move(doubled), alphabet);
  std::erase_if(set.tuples, [&](const MawTuple& t) {
    return set.word_length(t) > m;
  });
  set.declared_period = m;
  return set;
}

}  // namespace maw
