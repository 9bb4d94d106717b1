#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "mawdist/suffix_structures.hpp"
#include "test_util.hpp"

using namespace maw;
using testutil::codes_of;

namespace {

SuffixStructures build_from(const std::string& s, const Alphabet& a) {
  return SuffixStructures(codes_of(s, a));
}

void check_invariants(const std::string& s, const SuffixStructures& st) {
  const auto n = (int32_t)s.size();
  std::vector<bool> seen(n, false);
  for (int32_t r = 0; r < n; ++r) {
    REQUIRE(st.sa()[r] >= 0);
    REQUIRE(st.sa()[r] < n);
    REQUIRE(!seen[st.sa()[r]]);
    seen[st.sa()[r]] = true;
    CHECK(st.isa()[st.sa()[r]] == r);
  }
  const auto want_sa = testutil::naive_sa(s);
  CHECK(st.sa() == want_sa);
  CHECK(st.lcp() == testutil::naive_lcp(s, want_sa));
}

}  // namespace

TEST_CASE("banana suffix array") {
  Alphabet a("abn");
  auto st = build_from("banana", a);
  CHECK(st.sa() == std::vector<int32_t>{5, 3, 1, 0, 4, 2});
}

TEST_CASE("single character") {
  Alphabet a("a");
  auto st = build_from("a", a);
  CHECK(st.sa() == std::vector<int32_t>{0});
  CHECK(st.isa() == std::vector<int32_t>{0});
  CHECK(st.lcp() == std::vector<int32_t>{0});
}

TEST_CASE("unary text") {
  Alphabet a("a");
  auto st = build_from("aaaa", a);
  CHECK(st.sa() == std::vector<int32_t>{3, 2, 1, 0});
  CHECK(st.lcp() == std::vector<int32_t>{0, 1, 2, 3});
}

TEST_CASE("empty text rejected") {
  CHECK_THROWS_WITH(SuffixStructures(std::vector<int32_t>{}), "empty text");
}

TEST_CASE("lce worked examples") {
  Alphabet ab("ab");
  auto st = build_from("abaab", ab);
  CHECK(st.lce(0, 3) == 2);
  CHECK(st.lce(3, 0) == 2);
  CHECK(st.lce(2, 2) == 3);  // suffix vs itself: n - p

  Alphabet a("a");
  auto st2 = build_from("aaaa", a);
  CHECK(st2.lce(0, 2) == 2);

  CHECK_THROWS(st.lce(-1, 0));
  CHECK_THROWS(st.lce(0, 5));
}

TEST_CASE("random texts match naive oracle") {
  std::mt19937_64 rng(20260825);
  const std::string alphabets[] = {"a", "ab", "abc", "abcd"};
  for (int iter = 0; iter < 300; ++iter) {
    const auto& letters = alphabets[iter % 4];
    std::uniform_int_distribution<int32_t> len(1, 200);
    const auto s = testutil::random_string(letters, len(rng), rng);
    Alphabet a(letters);
    auto st = build_from(s, a);
    check_invariants(s, st);
  }
}

TEST_CASE("lce matches character scan") {
  std::mt19937_64 rng(7);
  SUBCASE("exhaustive short binary") {
    for (int32_t n = 1; n <= 10; ++n)
      for (const auto& s : testutil::all_strings("ab", n)) {
        Alphabet a("ab");
        auto st = build_from(s, a);
        for (int32_t p = 0; p < n; ++p)
          for (int32_t q = 0; q < n; ++q)
            CHECK(st.lce(p, q) == (p == q ? n - p
                                          : testutil::naive_lce(s, p, q)));
      }
  }
  SUBCASE("sampled larger texts") {
    for (int iter = 0; iter < 30; ++iter) {
      const auto s = testutil::random_string("ab", 64, rng);
      Alphabet a("ab");
      auto st = build_from(s, a);
      for (int32_t p = 0; p < 64; ++p)
        for (int32_t q = p + 1; q < 64; ++q)
          CHECK(st.lce(p, q) == testutil::naive_lce(s, p, q));
    }
  }
}
