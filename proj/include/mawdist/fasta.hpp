#pragma once

#include <cctype>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mawdist/alphabet.hpp"

namespace maw {

/// MultiFASTA parser. The id is the first whitespace-delimited header
/// token; sequence lines are concatenated with ASCII letters uppercased.
inline std::vector<Sequence> parse_fasta(std::istream& in) {
  std::vector<Sequence> out;
  std::set<std::string> seen;
  std::string line;
  bool have_record = false;
  auto close_record = [&] {
    if (have_record && out.back().symbols.empty())
      throw std::invalid_argument("empty sequence: " + out.back().id);
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') {
      close_record();
      std::istringstream header(line.substr(1));
      std::string id;
      header >> id;
      if (id.empty()) throw std::invalid_argument("missing sequence id");
      if (!seen.insert(id).second)
        throw std::invalid_argument("duplicate sequence id: " + id);
      out.push_back({id, {}});
      have_record = true;
    } else {
      if (!have_record)
        throw std::invalid_argument("sequence data before first header");
      for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        out.back().symbols +=
            static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
    }
  }
  close_record();
  return out;
}

inline void write_fasta(const std::vector<Sequence>& seqs, std::ostream& os,
                        size_t width = 70) {
  for (const auto& s : seqs) {
    os << '>' << s.id << '\n';
    for (size_t i = 0; i < s.symbols.size(); i += width)
      os << s.symbols.substr(i, width) << '\n';
  }
}

}  // namespace maw
