#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mawdist/alphabet.hpp"
#include "mawdist/tree.hpp"

namespace maw {

/// Dataset simulation parameters: taxa count, root sequence length,
/// per-site substitution probability per branch, and deletion/insertion
/// rates relative to the substitution rate.
struct SimParams {
  int32_t taxa;
  int32_t root_length;
  double sub_rate;
  double del_rate;
  double ins_rate;
  uint64_t seed;
};

struct SimResult {
  std::vector<Sequence> sequences;
  Tree tree;
};

inline std::string rotate(std::string_view s, size_t i) {
  i %= s.size();
  return std::string(s.substr(i)) + std::string(s.substr(0, i));
}

namespace detail {

inline std::string mutate(const std::string& parent, double sub, double del,
                          double ins, std::mt19937_64& rng) {
  static constexpr char bases[] = "ACGT";
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> base4(0, 3);
  std::uniform_int_distribution<int> base3(0, 2);
  std::string out;
  out.reserve(parent.size() + 8);
  for (char c : parent) {
    const double u_del = unit(rng);
    const double u_sub = unit(rng);
    const double u_ins = unit(rng);
    if (u_del >= sub * del) {
      if (u_sub < sub) {
        int r = base3(rng);
        const char* p = std::char_traits<char>::find(bases, 4, c);
        int ci = p ? static_cast<int>(p - bases) : 0;
        c = bases[(ci + 1 + r) % 4];
      }
      out += c;
    }
    if (u_ins < sub * ins) out += bases[base4(rng)];
  }
  if (out.empty()) out += bases[base4(rng)];  // never drop to length 0
  return out;
}

}  // namespace detail

/// Simulate a dataset: a random binary tree over the taxa built by
/// coalescent-style joins, a uniform random DNA root of the requested
/// length, and per-branch evolution with the given rates. Deterministic in
/// the seed.
inline SimResult simulate_dataset(const SimParams& p) {
  if (p.taxa < 3) throw std::invalid_argument("need at least 3 taxa");
  if (p.root_length < 1) throw std::invalid_argument("root length >= 1");
  for (double r : {p.sub_rate, p.del_rate, p.ins_rate})
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("rate outside [0,1]");

  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> blen(0.5, 1.5);

  SimResult res;
  struct Join {
    int32_t node;
    int32_t left = -1, right = -1;  // -1: leaf
  };
  std::vector<Join> joins;
  std::vector<int32_t> lineages;  // indices into joins
  for (int32_t i = 0; i < p.taxa; ++i) {
    const int32_t v = res.tree.add_node("t" + std::to_string(i + 1));
    joins.push_back({v});
    lineages.push_back(static_cast<int32_t>(joins.size()) - 1);
  }
  while (lineages.size() > 2) {
    std::uniform_int_distribution<size_t> pick(0, lineages.size() - 1);
    size_t a = pick(rng);
    std::uniform_int_distribution<size_t> pick2(0, lineages.size() - 2);
    size_t b = pick2(rng);
    if (b >= a) ++b;
    if (a > b) std::swap(a, b);
    const int32_t u = res.tree.add_node();
    res.tree.add_edge(u, joins[lineages[a]].node, blen(rng));
    res.tree.add_edge(u, joins[lineages[b]].node, blen(rng));
    joins.push_back({u, lineages[a], lineages[b]});
    lineages.erase(lineages.begin() + b);
    lineages.erase(lineages.begin() + a);
    lineages.push_back(static_cast<int32_t>(joins.size()) - 1);
  }
  // connect the last two lineages directly
  res.tree.add_edge(joins[lineages[0]].node, joins[lineages[1]].node,
                    blen(rng));

  // root sequence, evolved down both halves of the final edge
  static constexpr char bases[] = "ACGT";
  std::uniform_int_distribution<int> base4(0, 3);
  std::string root;
  root.reserve(p.root_length);
  for (int32_t i = 0; i < p.root_length; ++i) root += bases[base4(rng)];

  std::vector<std::string> leaf_seq(p.taxa);
  auto evolve = [&](auto&& self, int32_t join_idx,
                    const std::string& parent) -> void {
    const std::string own =
        detail::mutate(parent, p.sub_rate, p.del_rate, p.ins_rate, rng);
    const Join& j = joins[join_idx];
    if (j.left < 0) {
      leaf_seq[j.node] = own;  // leaves are tree nodes 0..taxa-1
      return;
    }
    self(self, j.left, own);
    self(self, j.right, own);
  };
  evolve(evolve, lineages[0], root);
  evolve(evolve, lineages[1], root);

  for (int32_t i = 0; i < p.taxa; ++i)
    res.sequences.push_back({"t" + std::to_string(i + 1), leaf_seq[i]});
  return res;
}

/// Replace each sequence by a uniformly random rotation of itself.
inline std::vector<Sequence> rotate_randomly(std::vector<Sequence> seqs,
                                             uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (auto& s : seqs) {
    if (s.symbols.empty()) throw std::invalid_argument("empty sequence");
    std::uniform_int_distribution<size_t> pick(0, s.symbols.size() - 1);
    s.symbols = rotate(s.symbols, pick(rng));
  }
  return seqs;
}

/// One tab-separated experiment report line:
/// seed, taxa, root length, rates, mode, rf, accuracy.
inline std::string experiment_report_line(const SimParams& p,
                                          std::string_view mode, int32_t rf,
                                          double accuracy) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%llu\t%d\t%d\t%g\t%g\t%g\t%.*s\t%d\t%.6f",
                static_cast<unsigned long long>(p.seed), p.taxa,
                p.root_length, p.sub_rate, p.del_rate, p.ins_rate,
                static_cast<int>(mode.size()), mode.data(), rf, accuracy);
  return buf;
}

}  // namespace maw
