#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mawdist/maw.hpp"
#include "mawdist/suffix_structures.hpp"

namespace maw {

/// Concatenation w = x · sentinel · y with suffix structures, the basis for
/// constant-time LCE between tuple positions of the two sides. The sentinel
/// (-1) sorts below every letter and occurs exactly once, so no comparison
/// crosses the boundary.
struct PairContext {
  std::vector<int32_t> w;  // alphabet codes, -1 sentinel at index x_len
  int32_t x_len;
  int32_t offset_y;
  SuffixStructures structures;

  PairContext(std::span<const int32_t> x, std::span<const int32_t> y)
      : w(concat(x, y)),
        x_len(static_cast<int32_t>(x.size())),
        offset_y(x_len + 1),
        structures(shifted(w)) {}

  int32_t lce(int32_t p, int32_t q) const { return structures.lce(p, q); }

 private:
  static std::vector<int32_t> concat(std::span<const int32_t> x,
                                     std::span<const int32_t> y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("empty sequence");
    std::vector<int32_t> w;
    w.reserve(x.size() + y.size() + 1);
    w.insert(w.end(), x.begin(), x.end());
    w.push_back(-1);
    w.insert(w.end(), y.begin(), y.end());
    return w;
  }
  static std::vector<int32_t> shifted(const std::vector<int32_t>& w) {
    std::vector<int32_t> s(w.size());
    for (size_t i = 0; i < w.size(); ++i) s[i] = w[i] + 1;
    return s;
  }
};

/// Pair context over the references of two MAW sets (x·s·y for linear sets,
/// xx·s·yy for circular ones). The sets must share an alphabet and a kind.
inline PairContext build_pair_context(const MawSet& mx, const MawSet& my) {
  if (!(mx.alphabet == my.alphabet))
    throw std::invalid_argument("alphabet mismatch");
  if (mx.declared_period.has_value() != my.declared_period.has_value())
    throw std::invalid_argument("cannot mix linear and circular MAW sets");
  return PairContext(mx.reference, my.reference);
}

/// A MAW entry positioned inside w: pos is the start of the tuple's factor
/// occurrence in w, len the full decoded length.
struct OrderedEntry {
  int32_t letter;
  int32_t pos;
  int32_t len;
};

enum class Cmp { less, equal, greater };

/// Entries sorted by (letter, suffix rank of pos) with two counting-sort
/// passes; by antifactoriality this is lexicographic order of the decoded
/// words.
inline std::vector<OrderedEntry> order_maws(const MawSet& set,
                                            const PairContext& ctx,
                                            int32_t base) {
  std::vector<OrderedEntry> entries;
  entries.reserve(set.tuples.size());
  for (const auto& t : set.tuples)
    entries.push_back({t.letter, base + t.start, set.word_length(t)});

  const auto& isa = ctx.structures.isa();
  const auto wn = static_cast<int32_t>(ctx.w.size());

  // LSD radix: rank first, then stable pass on the letter.
  std::vector<int32_t> count(wn + 1, 0);
  for (const auto& e : entries) ++count[isa[e.pos]];
  for (int32_t r = 1; r <= wn; ++r) count[r] += count[r - 1];
  std::vector<OrderedEntry> tmp(entries.size());
  for (auto it = entries.rbegin(); it != entries.rend(); ++it)
    tmp[--count[isa[it->pos]]] = *it;

  const int32_t sigma = set.alphabet.size();
  std::vector<int32_t> lcount(sigma + 1, 0);
  for (const auto& e : tmp) ++lcount[e.letter];
  for (int32_t c = 1; c <= sigma; ++c) lcount[c] += lcount[c - 1];
  for (auto it = tmp.rbegin(); it != tmp.rend(); ++it)
    entries[--lcount[it->letter]] = *it;
  return entries;
}

/// Lexicographic comparison of two decoded MAWs through one LCE query.
/// Equal iff the letters match, the lengths match and the common extension
/// covers the whole factor; a proper prefix sorts first.
inline Cmp tuple_compare(const OrderedEntry& a, const OrderedEntry& b,
                         const PairContext& ctx) {
  if (a.letter != b.letter)
    return a.letter < b.letter ? Cmp::less : Cmp::greater;
  const int32_t la = a.len - 1, lb = b.len - 1;  // factor lengths
  const int32_t e = ctx.lce(a.pos, b.pos);
  if (e >= la && e >= lb) {
    if (la == lb) return Cmp::equal;
    return la < lb ? Cmp::less : Cmp::greater;
  }
  if (e >= la) return Cmp::less;     // a is a proper prefix of b
  if (e >= lb) return Cmp::greater;  // b is a proper prefix of a
  return ctx.w[a.pos + e] < ctx.w[b.pos + e] ? Cmp::less : Cmp::greater;
}

/// LW distance plus the exact integer cross-checks.
struct LwResult {
  double lw = 0.0;
  int64_t sym_diff_count = 0;
  int64_t union_count = 0;
};

namespace detail {

inline void filter_by_length(std::vector<OrderedEntry>& entries,
                             std::optional<int32_t> max_len) {
  if (!max_len) return;
  std::erase_if(entries,
                [&](const OrderedEntry& e) { return e.len > *max_len; });
}

inline double weight(const OrderedEntry& e) {
  const double len = e.len;
  return 1.0 / (len * len);
}

}  // namespace detail

/// Merge the two ordered MAW lists, accumulating 1/|w|^2 over the symmetric
/// difference. With max_len both sets are first restricted to words of
/// length at most max_len.
inline LwResult lw_merge(const MawSet& mx, const MawSet& my,
                         const PairContext& ctx,
                         std::optional<int32_t> max_len = std::nullopt) {
  auto xs = order_maws(mx, ctx, 0);
  auto ys = order_maws(my, ctx, ctx.offset_y);
  detail::filter_by_length(xs, max_len);
  detail::filter_by_length(ys, max_len);

  LwResult res;
  size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    switch (tuple_compare(xs[i], ys[j], ctx)) {
      case Cmp::less:
        res.lw += detail::weight(xs[i]);
        ++res.sym_diff_count;
        ++res.union_count;
        ++i;
        break;
      case Cmp::greater:
        res.lw += detail::weight(ys[j]);
        ++res.sym_diff_count;
        ++res.union_count;
        ++j;
        break;
      case Cmp::equal:
        ++res.union_count;
        ++i;
        ++j;
        break;
    }
  }
  for (; i < xs.size(); ++i) {
    res.lw += detail::weight(xs[i]);
    ++res.sym_diff_count;
    ++res.union_count;
  }
  for (; j < ys.size(); ++j) {
    res.lw += detail::weight(ys[j]);
    ++res.sym_diff_count;
    ++res.union_count;
  }
  return res;
}

/// Union of the two MAW sets over the pair context, each common word
/// emitted once, in lexicographic order. The result references w.
inline MawSet merge_union(const MawSet& mx, const MawSet& my,
                          const PairContext& ctx) {
  auto xs = order_maws(mx, ctx, 0);
  auto ys = order_maws(my, ctx, ctx.offset_y);
  std::vector<MawTuple> tuples;
  tuples.reserve(xs.size() + ys.size());
  auto push = [&](const OrderedEntry& e) {
    tuples.push_back({e.letter, e.pos, e.pos + e.len - 2});
  };
  size_t i = 0, j = 0;
  while (i < xs.size() && j < ys.size()) {
    switch (tuple_compare(xs[i], ys[j], ctx)) {
      case Cmp::less:
        push(xs[i++]);
        break;
      case Cmp::greater:
        push(ys[j++]);
        break;
      case Cmp::equal:
        push(xs[i++]);
        ++j;
        break;
    }
  }
  for (; i < xs.size(); ++i) push(xs[i]);
  for (; j < ys.size(); ++j) push(ys[j]);
  return MawSet{ctx.w, mx.alphabet, std::move(tuples), std::nullopt};
}

/// LW distance between two linear sequences.
inline LwResult lw_distance(std::span<const int32_t> x,
                            std::span<const int32_t> y,
                            const Alphabet& alphabet,
                            std::optional<int32_t> max_len = std::nullopt) {
  if (x.empty() || y.empty()) throw std::invalid_argument("empty sequence");
  const MawSet mx = compute_maws({x.begin(), x.end()}, alphabet);
  const MawSet my = compute_maws({y.begin(), y.end()}, alphabet);
  const PairContext ctx = build_pair_context(mx, my);
  return lw_merge(mx, my, ctx, max_len);
}

/// LW distance between two circular sequences (sets of the doubled words
/// restricted to the period, merged over xx · sentinel · yy).
inline LwResult lw_distance_circular(std::span<const int32_t> x,
                                     std::span<const int32_t> y,
                                     const Alphabet& alphabet) {
  if (x.empty() || y.empty()) throw std::invalid_argument("empty sequence");
  const MawSet mx = circular_maws(x, alphabet);
  const MawSet my = circular_maws(y, alphabet);
  const PairContext ctx = build_pair_context(mx, my);
  return lw_merge(mx, my, ctx, std::nullopt);
}

}  // namespace maw
