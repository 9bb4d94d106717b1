#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maw {

/// A named input sequence: raw symbols, not yet encoded.
struct Sequence {
  std::string id;
  std::string symbols;
};

/// Ordered set of raw symbols with a rank map. Codes are 0..size()-1 in
/// symbol order. At most 64 symbols (letter sets are tracked as 64-bit
/// masks during MAW computation).
class Alphabet {
 public:
  explicit Alphabet(std::string_view letters) {
    letters_.assign(letters.begin(), letters.end());
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()),
                   letters_.end());
    if (letters_.empty()) throw std::invalid_argument("empty alphabet");
    if (letters_.size() > 64)
      throw std::invalid_argument("alphabet larger than 64 symbols");
    rank_.fill(-1);
    for (size_t i = 0; i < letters_.size(); ++i)
      rank_[static_cast<unsigned char>(letters_[i])] = static_cast<int16_t>(i);
  }

  static Alphabet dna() { return Alphabet("ACGT"); }

  static Alphabet from_sequences(const std::vector<Sequence>& seqs) {
    std::string all;
    for (const auto& s : seqs) all += s.symbols;
    if (all.empty()) throw std::invalid_argument("no symbols in dataset");
    return Alphabet(all);
  }

  int32_t size() const { return static_cast<int32_t>(letters_.size()); }

  int32_t code(char c) const { return rank_[static_cast<unsigned char>(c)]; }

  char letter(int32_t code) const {
    if (code < 0 || code >= size()) throw std::out_of_range("letter code");
    return letters_[code];
  }

  const std::string& letters() const { return letters_; }

  bool operator==(const Alphabet& other) const {
    return letters_ == other.letters_;
  }

 private:
  std::string letters_;
  std::array<int16_t, 256> rank_;
};

/// Encode raw symbols as alphabet codes. A symbol outside the alphabet is
/// an error unless lenient is set, in which case it is stripped and
/// counted.
inline std::vector<int32_t> encode(std::string_view symbols,
                                   const Alphabet& alphabet,
                                   bool lenient = false,
                                   size_t* stripped = nullptr) {
  std::vector<int32_t> codes;
  codes.reserve(symbols.size());
  size_t bad = 0;
  for (char c : symbols) {
    int32_t r = alphabet.code(c);
    if (r < 0) {
      if (!lenient)
        throw std::invalid_argument(std::string("symbol '") + c +
                                    "' outside alphabet");
      ++bad;
      continue;
    }
    codes.push_back(r);
  }
  if (stripped) *stripped = bad;
  return codes;
}

}  // namespace maw
