#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "invseq/errors.hpp"
#include "invseq/oracle.hpp"
#include "support/independent.hpp"

using namespace invseq;
using namespace invseq::oracle;

namespace {

std::size_t sum_cells(const CellCounts& cells) {
  std::size_t total = 0;
  for (const auto& [key, count] : cells) total += count;
  return total;
}

}  // namespace

TEST_CASE("small classes by hand") {
  // n = 3, P = {010}: six inversion sequences minus 010 itself.
  const auto all = enumerate_inv_seqs(3, PatternSet::parse("010"));
  CHECK(all.size() == 5);
  CHECK(std::find(all.begin(), all.end(), Sequence{0, 1, 0}) == all.end());
  CHECK(count_inv_seqs(1, PatternSet::parse("000")) == 1);
  CHECK(count_inv_seqs(0, PatternSet::parse("010")) == 1);
  CHECK(count_inv_seqs(4, PatternSet::parse("010,001")) == 4);
}

TEST_CASE("published single-pattern terms for 010") {
  const std::vector<std::uint64_t> expected = {1, 2, 5, 15, 53, 215, 979, 4922};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    CHECK(count_inv_seqs(n, PatternSet::parse("010")) == expected[n - 1]);
  }
}

TEST_CASE("pruned enumeration equals filtering every inversion sequence") {
  for (const char* set : {"010", "000,010", "010,120", "010,210", "010,201", "010,110", "021",
                          "0101"}) {
    const auto patterns = PatternSet::parse(set);
    for (std::size_t n = 0; n <= 6; ++n) {
      std::vector<Sequence> filtered;
      testing::for_each_inversion_sequence(n, [&](const Sequence& s) {
        if (avoids_all(s, patterns)) filtered.push_back(s);
      });
      INFO("set ", set, " n ", n);
      REQUIRE(enumerate_inv_seqs(n, patterns) == filtered);
    }
  }
}

TEST_CASE("enumeration is deterministic and yields valid avoiders") {
  const auto patterns = PatternSet::parse("010,110");
  const auto first = enumerate_inv_seqs(7, patterns);
  CHECK(first == enumerate_inv_seqs(7, patterns));
  CHECK(std::is_sorted(first.begin(), first.end()));
  for (const auto& s : first) {
    REQUIRE(is_inversion_sequence(s));
    REQUIRE(avoids_all(s, patterns));
  }
}

TEST_CASE("refined counts partition the total") {
  for (const char* set : {"010", "010,210", "010,110"}) {
    const auto refined = count_refined(7, PatternSet::parse(set));
    CHECK(refined.total == count_inv_seqs(7, PatternSet::parse(set)));
    CHECK(sum_cells(refined.by_max_and_distinct) == refined.total);
    CHECK(sum_cells(refined.by_max_and_forb) == refined.total);
    std::size_t by_max = 0;
    for (const auto& [m, count] : refined.by_max()) by_max += count;
    CHECK(by_max == refined.total);
    for (const auto& [key, count] : refined.by_max_and_distinct) {
      CHECK(key.second >= 1);
      CHECK(key.second <= key.first + 1);
    }
  }
}

TEST_CASE("guards and invalid input") {
  CHECK_THROWS_AS(count_inv_seqs(13, PatternSet::parse("010")), ResourceLimitError);
  CHECK_THROWS_AS(count_inv_seqs(3, PatternSet{}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_words_A(11, 3), ResourceLimitError);
  CHECK_THROWS_AS(enumerate_words_E(4, 9), ResourceLimitError);

  OracleLimits tight;
  tight.max_length = 4;
  CHECK_THROWS_AS(count_inv_seqs(5, PatternSet::parse("010"), tight), ResourceLimitError);
  CHECK(count_inv_seqs(4, PatternSet::parse("010"), tight) == 15);

  ::setenv("INVSEQ_ORACLE_MAX_N", "5", 1);
  CHECK(OracleLimits::from_environment().max_length == 5);
  ::unsetenv("INVSEQ_ORACLE_MAX_N");
  CHECK(OracleLimits::from_environment().max_length == OracleLimits{}.max_length);
}

TEST_CASE("word families match their definitions") {
  const auto p010 = PatternSet::parse("010");
  const auto p010_000 = PatternSet::parse("000,010");
  const auto p010_120 = PatternSet::parse("010,120");
  const auto p010_110 = PatternSet::parse("010,110");
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t k = 0; k <= 4; ++k) {
      std::vector<Sequence> a, c, e, f;
      std::vector<ForbWord> j;
      testing::for_each_word(n, k, [&](const Sequence& w) {
        const bool full = testing::distinct_letters(w) == k;
        const bool starts_max = !w.empty() && w.front() + 1 == k;
        if (full && starts_max && avoids_all(w, p010)) a.push_back(w);
        if (full && starts_max && avoids_all(w, p010_000)) c.push_back(w);
        if (avoids_all(w, p010_120)) {
          e.push_back(w);
          if (full) f.push_back(w);
        }
        if (avoids_all(w, p010_110)) j.push_back({w, forb_direct(w, p010_110)});
      });
      INFO("n ", n, " k ", k);
      REQUIRE(enumerate_words_A(n, k) == a);
      REQUIRE(enumerate_words_C(n, k) == c);
      REQUIRE(enumerate_words_E(n, k) == e);
      REQUIRE(enumerate_words_F(n, k) == f);
      const auto got_j = enumerate_words_J(n, k);
      REQUIRE(got_j.size() == j.size());
      for (std::size_t x = 0; x < j.size(); ++x) {
        REQUIRE(got_j[x].word == j[x].word);
        REQUIRE(got_j[x].forb == j[x].forb);
      }
    }
  }
}

TEST_CASE("family H splits by the last letter") {
  const auto p010 = PatternSet::parse("010");
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t k = 0; k <= 4; ++k) {
      std::size_t expected = 0;
      testing::for_each_word(n, k + 1, [&](const Sequence& w) {
        Sequence finite;
        for (Value v : w) {
          if (v != k) finite.push_back(v);
        }
        const bool monotone = std::is_sorted(finite.begin(), finite.end());
        const bool top = k == 0 ? finite.empty() : (!finite.empty() && finite.back() + 1 == k);
        if (monotone && top && avoids_all(w, p010)) ++expected;
      });
      const auto words = enumerate_words_H(n, k);
      INFO("n ", n, " k ", k);
      REQUIRE(words.size() == expected);
      for (const auto& tagged : words) {
        REQUIRE(tagged.ends_with_infinity == (!tagged.word.empty() && tagged.word.back() == k));
      }
    }
  }
}
