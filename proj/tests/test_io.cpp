#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "mawdist/fasta.hpp"
#include "mawdist/phylip.hpp"
#include "test_util.hpp"

using namespace maw;

TEST_CASE("fasta basic parse") {
  std::istringstream in(">s1\nAC\nGT\n>s2\nTTAA\n");
  auto seqs = parse_fasta(in);
  REQUIRE(seqs.size() == 2);
  CHECK(seqs[0].id == "s1");
  CHECK(seqs[0].symbols == "ACGT");
  CHECK(seqs[1].id == "s2");
  CHECK(seqs[1].symbols == "TTAA");
}

TEST_CASE("fasta header tokenization and uppercasing") {
  std::istringstream in(">s1 desc here\nacgt\n");
  auto seqs = parse_fasta(in);
  REQUIRE(seqs.size() == 1);
  CHECK(seqs[0].id == "s1");
  CHECK(seqs[0].symbols == "ACGT");
}

TEST_CASE("fasta errors") {
  std::istringstream dup(">a\nAC\n>a\nGG\n");
  CHECK_THROWS_WITH(parse_fasta(dup), "duplicate sequence id: a");
  std::istringstream empty_seq(">a\n>b\nAC\n");
  CHECK_THROWS(parse_fasta(empty_seq));
  std::istringstream headerless("ACGT\n");
  CHECK_THROWS(parse_fasta(headerless));
}

TEST_CASE("fasta round trip through the canonical serializer") {
  std::mt19937_64 rng(123);
  std::vector<Sequence> seqs;
  for (int i = 0; i < 5; ++i)
    seqs.push_back({"seq" + std::to_string(i),
                    testutil::random_string("ACGT", 150 + i, rng)});
  std::ostringstream out;
  write_fasta(seqs, out);
  std::istringstream in(out.str());
  auto back = parse_fasta(in);
  REQUIRE(back.size() == seqs.size());
  for (size_t i = 0; i < seqs.size(); ++i) {
    CHECK(back[i].id == seqs[i].id);
    CHECK(back[i].symbols == seqs[i].symbols);
  }
}

TEST_CASE("lenient encode strips and counts") {
  Alphabet a = Alphabet::dna();
  CHECK_THROWS(encode("ACGTN", a));
  size_t stripped = 0;
  auto codes = encode("ACGTN", a, true, &stripped);
  CHECK(codes.size() == 4);
  CHECK(stripped == 1);
}

TEST_CASE("phylip exact bytes") {
  DistanceMatrix m;
  m.ids = {"s1", "s2"};
  m.values = {0.0, 0.5, 0.5, 0.0};
  std::ostringstream os;
  write_phylip(m, os);
  CHECK(os.str() ==
        "2\n"
        "s1         0.000000 0.500000\n"
        "s2         0.500000 0.000000\n");
}

TEST_CASE("phylip single taxon and rounding") {
  DistanceMatrix m;
  m.ids = {"taxon"};
  m.values = {13.0 / 18.0};  // formatting check: 0.722222...
  std::ostringstream os;
  write_phylip(m, os);
  CHECK(os.str() == "1\ntaxon      0.722222\n");
}

TEST_CASE("phylip name padding and truncation") {
  DistanceMatrix m;
  m.ids = {"averylongtaxonname"};
  m.values = {0.0};
  std::ostringstream os;
  write_phylip(m, os);
  CHECK(os.str() == "1\naverylongt 0.000000\n");

  DistanceMatrix bad;
  bad.ids = {""};
  bad.values = {0.0};
  std::ostringstream os2;
  CHECK_THROWS_WITH(write_phylip(bad, os2), "empty taxon name");
}

TEST_CASE("phylip output is byte-stable") {
  std::mt19937_64 rng(5);
  DistanceMatrix m;
  const size_t k = 7;
  std::uniform_real_distribution<double> val(0.0, 2.0);
  m.values.assign(k * k, 0.0);
  for (size_t i = 0; i < k; ++i) m.ids.push_back("t" + std::to_string(i));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) m.at(i, j) = m.at(j, i) = val(rng);
  std::ostringstream a, b;
  write_phylip(m, a);
  write_phylip(m, b);
  CHECK(a.str() == b.str());

  std::istringstream in(a.str());
  auto back = parse_phylip(in);
  REQUIRE(back.size() == k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      CHECK(back.at(i, j) == doctest::Approx(m.at(i, j)).epsilon(1e-6));
}
