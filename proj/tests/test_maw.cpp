#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "mawdist/brute_force.hpp"
#include "mawdist/maw.hpp"
#include "test_util.hpp"

using namespace maw;
using testutil::codes_of;

namespace {

std::set<std::string> decoded_set(const MawSet& s) {
  auto words = s.decoded_words();
  return {words.begin(), words.end()};
}

std::set<std::string> maws_of(const std::string& text,
                              const std::string& letters) {
  Alphabet a(letters);
  return decoded_set(compute_maws(codes_of(text, a), a));
}

bool antifactorial(const std::set<std::string>& words) {
  for (const auto& w : words)
    for (const auto& v : words)
      if (w != v && v.find(w) != std::string::npos) return false;
  return true;
}

}  // namespace

TEST_CASE("worked example abaab") {
  CHECK(maws_of("abaab", "ab") ==
        std::set<std::string>{"aaa", "aaba", "bab", "bb"});
}

TEST_CASE("unary text has the single MAW of length n+1") {
  CHECK(maws_of("aaaa", "a") == std::set<std::string>{"aaaaa"});
}

TEST_CASE("two letter example") {
  CHECK(maws_of("ab", "ab") == std::set<std::string>{"aa", "ba", "bb"});
}

TEST_CASE("aab example") {
  CHECK(maws_of("aab", "ab") == std::set<std::string>{"ba", "bb", "aaa"});
}

TEST_CASE("errors") {
  Alphabet a("ab");
  CHECK_THROWS_WITH(compute_maws({}, a), "empty text");
  CHECK_THROWS(compute_maws({0, 7}, a));  // code outside alphabet
}

TEST_CASE("decode follows the tuple definition") {
  Alphabet a("ab");
  MawSet set = compute_maws(codes_of("abaab", a), a);
  // decoding is letter + reference[i..j]; check via a hand-built tuple
  MawTuple t{1, 1, 1};  // b + "b"
  CHECK(set.decode(t) == "bb");
  MawTuple t2{0, 0, 0};
  CHECK(set.decode(t2) == "aa");  // a + reference[0] = 'a'
}

TEST_CASE("tuples decode in lexicographic order") {
  Alphabet a("ab");
  for (const auto& text : testutil::all_strings("ab", 9)) {
    if (text.empty()) continue;
    MawSet set = compute_maws(codes_of(text, a), a);
    auto words = set.decoded_words();
    for (size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] < words[i]);
  }
}

TEST_CASE("oracle equivalence, exhaustive binary") {
  for (int32_t n = 1; n <= 12; ++n)
    for (const auto& text : testutil::all_strings("ab", n))
      CHECK(maws_of(text, "ab") == brute::maws(text, "ab"));
}

TEST_CASE("oracle equivalence, random larger alphabets") {
  std::mt19937_64 rng(424242);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::string letters = (iter % 2) ? "abc" : "abcd";
    std::uniform_int_distribution<int32_t> len(1, 40);
    const auto text = testutil::random_string(letters, len(rng), rng);
    CHECK(maws_of(text, letters) == brute::maws(text, letters));
  }
}

TEST_CASE("cardinality and length bounds") {
  std::mt19937_64 rng(99);
  const std::string alphabets[] = {"a", "ab", "abc", "abcd"};
  for (int iter = 0; iter < 400; ++iter) {
    const auto& letters = alphabets[iter % 4];
    std::uniform_int_distribution<int32_t> len(1, 60);
    const auto n = len(rng);
    const auto text = testutil::random_string(letters, n, rng);
    Alphabet a(letters);
    MawSet set = compute_maws(codes_of(text, a), a);
    CHECK((int64_t)set.tuples.size() <= (int64_t)a.size() * n);
    const bool unary =
        text.find_first_not_of(text[0]) == std::string::npos;
    bool has_maximal = false;
    for (const auto& t : set.tuples) {
      const auto len_w = set.word_length(t);
      CHECK(len_w >= 2);
      CHECK(len_w <= n + 1);
      if (len_w == n + 1) has_maximal = true;
    }
    CHECK(has_maximal == unary);
    CHECK(antifactorial(decoded_set(set)));
  }
}
