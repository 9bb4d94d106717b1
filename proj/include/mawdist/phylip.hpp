#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace maw {

/// Symmetric distance matrix with taxon names. values is row-major k x k.
struct DistanceMatrix {
  std::vector<std::string> ids;
  std::vector<double> values;

  size_t size() const { return ids.size(); }
  double& at(size_t i, size_t j) { return values[i * size() + j]; }
  double at(size_t i, size_t j) const { return values[i * size() + j]; }
};

/// Strict square PHYLIP: taxon count line, then one line per taxon with the
/// name padded or truncated to exactly 10 characters and each value printed
/// as " %.6f". Byte-deterministic.
inline void write_phylip(const DistanceMatrix& m, std::ostream& os) {
  const size_t k = m.size();
  os << k << '\n';
  for (size_t i = 0; i < k; ++i) {
    if (m.ids[i].empty()) throw std::invalid_argument("empty taxon name");
    std::string name = m.ids[i].substr(0, 10);
    name.resize(10, ' ');
    os << name;
    char buf[32];
    for (size_t j = 0; j < k; ++j) {
      std::snprintf(buf, sizeof buf, " %.6f", m.at(i, j));
      os << buf;
    }
    os << '\n';
  }
}

/// Whitespace-tolerant PHYLIP reader (names must be single tokens).
inline DistanceMatrix parse_phylip(std::istream& in) {
  size_t k = 0;
  if (!(in >> k) || k == 0)
    throw std::invalid_argument("bad PHYLIP taxon count");
  DistanceMatrix m;
  m.ids.resize(k);
  m.values.assign(k * k, 0.0);
  for (size_t i = 0; i < k; ++i) {
    if (!(in >> m.ids[i]))
      throw std::invalid_argument("truncated PHYLIP matrix");
    for (size_t j = 0; j < k; ++j)
      if (!(in >> m.at(i, j)))
        throw std::invalid_argument("truncated PHYLIP matrix");
  }
  return m;
}

}  // namespace maw
