#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>

#include "mawdist/matrix.hpp"
#include "mawdist/simulate.hpp"
#include "test_util.hpp"

using namespace maw;

TEST_CASE("worked two-sequence matrices") {
  std::vector<Sequence> seqs{{"x", "AC"}, {"y", "CA"}};
  Alphabet dna = Alphabet::dna();

  auto lin = pairwise_matrix(seqs, dna, {});
  REQUIRE(lin.size() == 2);
  CHECK(lin.at(0, 0) == 0.0);
  CHECK(lin.at(1, 1) == 0.0);
  CHECK(lin.at(0, 1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(lin.at(1, 0) == lin.at(0, 1));

  MatrixOptions circ;
  circ.mode = CompareMode::circular;
  auto c = pairwise_matrix(seqs, dna, circ);
  CHECK(c.at(0, 1) == 0.0);  // CA is a rotation of AC
}

TEST_CASE("identical sequences give a zero matrix") {
  std::vector<Sequence> seqs{{"a", "ACGTAC"}, {"b", "ACGTAC"}, {"c", "ACGTAC"}};
  auto m = pairwise_matrix(seqs, Alphabet::dna(), {});
  for (double v : m.values) CHECK(v == 0.0);
}

TEST_CASE("input validation") {
  std::vector<Sequence> one{{"a", "ACGT"}};
  CHECK_THROWS(pairwise_matrix(one, Alphabet::dna(), {}));
  std::vector<Sequence> bad{{"a", "ACGT"}, {"b", "ACNT"}};
  CHECK_THROWS(pairwise_matrix(bad, Alphabet::dna(), {}));
  MatrixOptions lenient;
  lenient.lenient = true;
  auto m = pairwise_matrix(bad, Alphabet::dna(), lenient);
  CHECK(m.size() == 2);
}

TEST_CASE("matrix is bitwise identical across worker counts") {
  auto data = simulate_dataset({10, 400, 0.2, 0.06, 0.04, 21});
  Alphabet dna = Alphabet::dna();
  for (auto mode : {CompareMode::linear, CompareMode::circular}) {
    MatrixOptions base;
    base.mode = mode;
    base.workers = 1;
    auto ref = pairwise_matrix(data.sequences, dna, base);
    for (int32_t w : {2, 4, 8}) {
      MatrixOptions opt = base;
      opt.workers = w;
      auto m = pairwise_matrix(data.sequences, dna, opt);
      CHECK(m.ids == ref.ids);
      REQUIRE(m.values.size() == ref.values.size());
      for (size_t i = 0; i < m.values.size(); ++i)
        CHECK(m.values[i] == ref.values[i]);
    }
  }
}

TEST_CASE("progress callback counts every pair once") {
  auto data = simulate_dataset({7, 120, 0.1, 0.06, 0.04, 8});
  std::atomic<size_t> calls{0};
  size_t total_seen = 0;
  MatrixOptions opt;
  opt.workers = 4;
  opt.progress = [&](size_t done, size_t total) {
    calls.fetch_add(1);
    total_seen = total;
    CHECK(done <= total);
  };
  pairwise_matrix(data.sequences, Alphabet::dna(), opt);
  CHECK(calls.load() == 7 * 6 / 2);
  CHECK(total_seen == 7 * 6 / 2);
}

TEST_CASE("max_len cap carries through the matrix") {
  auto data = simulate_dataset({5, 200, 0.25, 0.06, 0.04, 13});
  Alphabet dna = Alphabet::dna();
  MatrixOptions capped;
  capped.max_len = 4;
  auto mc = pairwise_matrix(data.sequences, dna, capped);
  auto mf = pairwise_matrix(data.sequences, dna, {});
  bool any_lower = false;
  for (size_t i = 0; i < mc.values.size(); ++i) {
    CHECK(mc.values[i] <= mf.values[i] + 1e-15);
    if (mc.values[i] < mf.values[i]) any_lower = true;
  }
  CHECK(any_lower);
}
