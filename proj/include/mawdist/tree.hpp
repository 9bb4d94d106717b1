#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maw {

/// Unrooted tree as an adjacency structure. Leaves are the degree-1 nodes
/// and must carry names; internal nodes may be anonymous.
struct Tree {
  struct Node {
    std::string name;
    std::vector<std::pair<int32_t, double>> nbr;
  };
  std::vector<Node> nodes;

  int32_t add_node(std::string name = {}) {
    nodes.push_back({std::move(name), {}});
    return static_cast<int32_t>(nodes.size()) - 1;
  }
  void add_edge(int32_t a, int32_t b, double len) {
    nodes[a].nbr.emplace_back(b, len);
    nodes[b].nbr.emplace_back(a, len);
  }
  bool is_leaf(int32_t v) const { return nodes[v].nbr.size() == 1; }

  std::vector<std::string> leaf_names() const {
    std::vector<std::string> out;
    for (size_t v = 0; v < nodes.size(); ++v)
      if (nodes.size() == 1 || nodes[v].nbr.size() == 1) {
        if (nodes[v].name.empty())
          throw std::invalid_argument("unnamed leaf");
        out.push_back(nodes[v].name);
      }
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Newick serialization rooted at an internal node (or the given node),
/// branch lengths with six decimals.
inline std::string to_newick(const Tree& t, int32_t root = -1) {
  if (t.nodes.empty()) throw std::invalid_argument("empty tree");
  if (root < 0) {
    root = 0;
    for (size_t v = 0; v < t.nodes.size(); ++v)
      if (t.nodes[v].nbr.size() > 1) {
        root = static_cast<int32_t>(v);
        break;
      }
  }
  std::string out;
  auto fmt_len = [](double len) {
    char buf[32];
    std::snprintf(buf, sizeof buf, ":%.6f", len);
    return std::string(buf);
  };
  auto rec = [&](auto&& self, int32_t v, int32_t parent) -> void {
    const auto& node = t.nodes[v];
    bool leaf = true;
    for (const auto& [u, len] : node.nbr)
      if (u != parent) leaf = false;
    if (leaf) {
      out += node.name;
      return;
    }
    out += '(';
    bool first = true;
    for (const auto& [u, len] : node.nbr) {
      if (u == parent) continue;
      if (!first) out += ',';
      first = false;
      self(self, u, v);
      out += fmt_len(len);
    }
    out += ')';
    out += node.name;
  };
  rec(rec, root, -1);
  out += ';';
  return out;
}

/// Recursive-descent Newick parser; accepts rooted and unrooted trees,
/// optional branch lengths and internal labels.
inline Tree parse_newick(std::string_view text) {
  Tree t;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
            text[pos] == '\r'))
      ++pos;
  };
  auto parse_label = [&] {
    skip_ws();
    std::string label;
    while (pos < text.size() && text[pos] != ',' && text[pos] != ')' &&
           text[pos] != ':' && text[pos] != ';' && text[pos] != '(' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      label += text[pos++];
    return label;
  };
  auto parse_length = [&]() -> double {
    skip_ws();
    if (pos >= text.size() || text[pos] != ':') return 0.0;
    ++pos;
    size_t used = 0;
    double v = std::stod(std::string(text.substr(pos)), &used);
    pos += used;
    return v;
  };
  auto rec = [&](auto&& self) -> int32_t {
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      int32_t v = t.add_node();
      while (true) {
        int32_t child = self(self);
        double len = parse_length();
        t.add_edge(v, child, len);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw std::invalid_argument("unbalanced newick parentheses");
      ++pos;
      t.nodes[v].name = parse_label();
      return v;
    }
    std::string label = parse_label();
    if (label.empty()) throw std::invalid_argument("missing newick label");
    return t.add_node(std::move(label));
  };
  int32_t root = rec(rec);
  parse_length();
  skip_ws();
  if (pos < text.size() && text[pos] == ';') ++pos;
  skip_ws();
  if (pos != text.size())
    throw std::invalid_argument("trailing newick content");
  (void)root;
  return t;
}

namespace detail {

// Non-trivial bipartitions as canonical leaf bitsets (complemented so the
// first taxon's bit is never set).
inline std::set<std::vector<uint64_t>> splits(
    const Tree& t, const std::map<std::string, int32_t>& taxon) {
  const size_t k = taxon.size();
  const size_t words = (k + 63) / 64;
  std::set<std::vector<uint64_t>> out;
  std::vector<std::vector<uint64_t>> below(t.nodes.size(),
                                           std::vector<uint64_t>(words, 0));
  // iterative post-order from node 0
  std::vector<std::pair<int32_t, int32_t>> stack{{0, -1}};
  std::vector<std::pair<int32_t, int32_t>> order;
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    order.emplace_back(v, parent);
    for (const auto& [u, len] : t.nodes[v].nbr)
      if (u != parent) stack.emplace_back(u, v);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [v, parent] = *it;
    if (t.is_leaf(v)) {
      const int32_t idx = taxon.at(t.nodes[v].name);
      below[v][idx / 64] |= uint64_t{1} << (idx % 64);
    }
    if (parent >= 0)
      for (size_t w = 0; w < words; ++w) below[parent][w] |= below[v][w];
  }
  for (auto& [v, parent] : order) {
    if (parent < 0) continue;
    size_t cnt = 0;
    for (uint64_t w : below[v]) cnt += std::popcount(w);
    if (cnt < 2 || cnt > k - 2) continue;
    std::vector<uint64_t> s = below[v];
    if (s[0] & 1) {
      for (size_t w = 0; w < words; ++w) s[w] = ~s[w];
      if (k % 64) s[words - 1] &= (uint64_t{1} << (k % 64)) - 1;
    }
    out.insert(std::move(s));
  }
  return out;
}

}  // namespace detail

/// Robinson-Foulds distance: bipartitions present in exactly one tree.
inline int32_t rf_distance(const Tree& t1, const Tree& t2) {
  auto l1 = t1.leaf_names(), l2 = t2.leaf_names();
  if (l1 != l2) throw std::invalid_argument("leaf sets differ");
  std::map<std::string, int32_t> taxon;
  for (size_t i = 0; i < l1.size(); ++i)
    taxon[l1[i]] = static_cast<int32_t>(i);
  auto s1 = detail::splits(t1, taxon);
  auto s2 = detail::splits(t2, taxon);
  int32_t rf = 0;
  for (const auto& s : s1)
    if (!s2.count(s)) ++rf;
  for (const auto& s : s2)
    if (!s1.count(s)) ++rf;
  return rf;
}

/// 1 - rf / (2(k-3)) for binary trees on k > 3 leaves.
inline double rf_accuracy(const Tree& inferred, const Tree& truth) {
  const auto k = static_cast<int32_t>(truth.leaf_names().size());
  if (k <= 3)
    throw std::invalid_argument("accuracy undefined without internal edges");
  return 1.0 - static_cast<double>(rf_distance(inferred, truth)) /
                   (2.0 * (k - 3));
}

/// Path-length matrix between leaves, in sorted leaf-name order.
inline std::vector<std::vector<double>> leaf_distances(
    const Tree& t, std::vector<std::string>& names_out) {
  names_out = t.leaf_names();
  std::map<std::string, int32_t> idx;
  for (size_t i = 0; i < names_out.size(); ++i)
    idx[names_out[i]] = static_cast<int32_t>(i);
  const size_t k = names_out.size();
  std::vector<std::vector<double>> d(k, std::vector<double>(k, 0.0));
  for (size_t v = 0; v < t.nodes.size(); ++v) {
    if (!t.is_leaf(static_cast<int32_t>(v))) continue;
    // DFS with accumulated distance
    std::vector<std::pair<int32_t, int32_t>> stack{{(int32_t)v, -1}};
    std::vector<double> acc(t.nodes.size(), 0.0);
    while (!stack.empty()) {
      auto [u, parent] = stack.back();
      stack.pop_back();
      if (u != (int32_t)v && t.is_leaf(u))
        d[idx.at(t.nodes[v].name)][idx.at(t.nodes[u].name)] = acc[u];
      for (const auto& [w, len] : t.nodes[u].nbr)
        if (w != parent) {
          acc[w] = acc[u] + len;
          stack.emplace_back(w, u);
        }
    }
  }
  return d;
}

}  // namespace maw
