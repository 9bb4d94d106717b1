#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mawdist/phylip.hpp"
#include "mawdist/tree.hpp"

namespace maw {

/// Canonical neighbor joining. Joins the pair minimizing the Q criterion,
/// ties broken by the smallest (i, j) in current order; negative branch
/// lengths are clamped to zero in the output (topology unaffected).
inline Tree neighbor_joining(const DistanceMatrix& m) {
  const auto k = static_cast<int32_t>(m.size());
  if (k < 3) throw std::invalid_argument("neighbor joining needs >= 3 taxa");

  Tree t;
  std::vector<int32_t> act;          // tree node per active row
  std::vector<std::vector<double>> d(k, std::vector<double>(k));
  for (int32_t i = 0; i < k; ++i) {
    act.push_back(t.add_node(m.ids[i]));
    for (int32_t j = 0; j < k; ++j) d[i][j] = m.at(i, j);
  }

  auto clamp = [](double v) { return v < 0.0 ? 0.0 : v; };

  while (act.size() > 3) {
    const auto r = static_cast<int32_t>(act.size());
    std::vector<double> rowsum(r, 0.0);
    for (int32_t i = 0; i < r; ++i)
      for (int32_t j = 0; j < r; ++j) rowsum[i] += d[i][j];

    double best_q = std::numeric_limits<double>::infinity();
    int32_t bi = -1, bj = -1;
    for (int32_t i = 0; i < r; ++i)
      for (int32_t j = i + 1; j < r; ++j) {
        const double q = (r - 2) * d[i][j] - rowsum[i] - rowsum[j];
        if (q < best_q) {
          best_q = q;
          bi = i;
          bj = j;
        }
      }

    const double li =
        0.5 * d[bi][bj] + (rowsum[bi] - rowsum[bj]) / (2.0 * (r - 2));
    const double lj = d[bi][bj] - li;
    const int32_t u = t.add_node();
    t.add_edge(u, act[bi], clamp(li));
    t.add_edge(u, act[bj], clamp(lj));

    std::vector<double> nd;
    nd.reserve(r - 1);
    for (int32_t x = 0; x < r; ++x)
      if (x != bi && x != bj)
        nd.push_back(0.5 * (d[bi][x] + d[bj][x] - d[bi][bj]));

    // drop rows/cols bi < bj, append the new node
    for (auto& row : d) {
      row.erase(row.begin() + bj);
      row.erase(row.begin() + bi);
    }
    d.erase(d.begin() + bj);
    d.erase(d.begin() + bi);
    act.erase(act.begin() + bj);
    act.erase(act.begin() + bi);
    for (size_t x = 0; x < d.size(); ++x) {
      d[x].push_back(nd[x]);
    }
    nd.push_back(0.0);
    d.push_back(std::move(nd));
    act.push_back(u);
  }

  // connect the last three through one center node
  const double la = 0.5 * (d[0][1] + d[0][2] - d[1][2]);
  const double lb = 0.5 * (d[0][1] + d[1][2] - d[0][2]);
  const double lc = 0.5 * (d[0][2] + d[1][2] - d[0][1]);
  const int32_t c = t.add_node();
  t.add_edge(c, act[0], clamp(la));
  t.add_edge(c, act[1], clamp(lb));
  t.add_edge(c, act[2], clamp(lc));
  return t;
}

}  // namespace maw
