#pragma once

// Reference enumerations for minimal absent words, exponential in the input
// length. Deliberately independent of the suffix-array implementation; used
// as oracles by the test suites.

#include <set>
#include <string>
#include <string_view>

namespace maw::brute {

inline std::set<std::string> factors(std::string_view text) {
  std::set<std::string> out;
  for (size_t i = 0; i < text.size(); ++i)
    for (size_t len = 1; len + i <= text.size(); ++len)
      out.emplace(text.substr(i, len));
  return out;
}

inline bool occurs(std::string_view text, std::string_view word) {
  return word.empty() || text.find(word) != std::string_view::npos;
}

/// Minimal absent words of a linear text: all a·u·b absent from the text
/// whose proper factors a·u and u·b occur.
inline std::set<std::string> maws(std::string_view text,
                                  std::string_view letters) {
  std::set<std::string> out;
  std::set<std::string> us = factors(text);
  us.emplace();  // empty middle part
  for (const auto& u : us)
    for (char a : letters)
      for (char b : letters) {
        std::string w = a + u + b;
        if (!occurs(text, w) && occurs(text, a + u) && occurs(text, u + b))
          out.insert(std::move(w));
      }
  return out;
}

/// Membership in the factor set of the infinite repetition of x: w is a
/// factor of x repeated ceil(|w|/|x|)+1 times.
inline bool repetition_factor(std::string_view x, std::string_view w) {
  if (w.empty()) return true;
  const size_t reps = (w.size() + x.size() - 1) / x.size() + 1;
  std::string power;
  power.reserve(reps * x.size());
  for (size_t r = 0; r < reps; ++r) power += x;
  return power.find(w) != std::string::npos;
}

/// Minimal absent words of the circular word x~, defined through the
/// factors of the infinite repetition of x.
inline std::set<std::string> circular_maws(std::string_view x,
                                           std::string_view letters) {
  std::set<std::string> out;
  const std::string xx = std::string(x) + std::string(x);
  std::set<std::string> us;
  us.emplace();
  for (const auto& f : factors(xx))
    if (f.size() + 1 < x.size() + 1) us.insert(f);  // |u| <= |x|-1
  for (const auto& u : us)
    for (char a : letters)
      for (char b : letters) {
        std::string w = a + u + b;
        if (!repetition_factor(x, w) && repetition_factor(x, a + u) &&
            repetition_factor(x, u + b))
          out.insert(std::move(w));
      }
  return out;
}

/// Minimal absent words of the finite factorial set F = factors of xx with
/// length at most |x| (the bounded circular definition).
inline std::set<std::string> bounded_circular_maws(std::string_view x,
                                                   std::string_view letters) {
  const std::string xx = std::string(x) + std::string(x);
  auto in_f = [&](std::string_view w) {
    return w.empty() ||
           (w.size() <= x.size() && xx.find(w) != std::string::npos);
  };
  std::set<std::string> out;
  std::set<std::string> us;
  us.emplace();
  for (const auto& f : factors(xx))
    if (f.size() + 1 <= x.size()) us.insert(f);
  for (const auto& u : us)
    for (char a : letters)
      for (char b : letters) {
        std::string w = a + u + b;
        if (!in_f(w) && in_f(a + u) && in_f(u + b)) out.insert(std::move(w));
      }
  return out;
}

}  // namespace maw::brute
