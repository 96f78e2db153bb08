#include <doctest.h>

#include <random>

#include "invseq/errors.hpp"
#include "invseq/oracle.hpp"
#include "invseq/sequence.hpp"
#include "support/independent.hpp"

using namespace invseq;

namespace {

Pattern pat(const char* digits) { return Pattern::parse(digits); }

}  // namespace

TEST_CASE("is_inversion_sequence") {
  CHECK(is_inversion_sequence(Sequence{0, 0, 2}));
  CHECK_FALSE(is_inversion_sequence(Sequence{1, 0, 0}));
  CHECK(is_inversion_sequence(Sequence{}));
  CHECK_FALSE(is_inversion_sequence(Sequence{0, 2}));
}

TEST_CASE("contains_pattern") {
  CHECK(contains_pattern(Sequence{4, 3, 2, 5, 4}, pat("021")));
  CHECK_FALSE(contains_pattern(Sequence{0, 0, 2, 3, 2, 0, 1, 5}, pat("101")));
  CHECK_FALSE(contains_pattern(Sequence{}, pat("010")));
  CHECK(contains_pattern(Sequence{0, 1, 0}, pat("010")));
  CHECK(contains_pattern(Sequence{3, 1, 2}, pat("201")));
  CHECK_FALSE(contains_pattern(Sequence{3, 1, 2}, pat("210")));
  CHECK(contains_pattern(Sequence{7}, pat("0")));
}

TEST_CASE("contains_pattern_ending_at_last") {
  CHECK(contains_pattern_ending_at_last(Sequence{0, 1, 0}, pat("010")));
  CHECK_FALSE(contains_pattern_ending_at_last(Sequence{0, 1, 0, 2}, pat("010")));
  CHECK_FALSE(contains_pattern_ending_at_last(Sequence{}, pat("0")));
}

TEST_CASE("avoids_all") {
  const auto pair = PatternSet::parse("010,000");
  CHECK(avoids_all(Sequence{0, 0, 1}, pair));
  CHECK_FALSE(avoids_all(Sequence{0, 0, 0}, pair));
  CHECK_FALSE(avoids_all(Sequence{0, 1, 0}, PatternSet::parse("010")));
}

TEST_CASE("forb_direct") {
  CHECK(forb_direct(Sequence{0, 1}, PatternSet::parse("010,210")) == 2);
  CHECK(forb_direct(Sequence{}, PatternSet::parse("010")) == 0);
  CHECK(forb_direct(Sequence{0}, PatternSet::parse("010,110")) == 1);
  // Sequences that already contain a pattern: every value counts, no throw.
  CHECK(forb_direct(Sequence{0, 1, 0}, PatternSet::parse("010")) == 2);
}

TEST_CASE("forb_210") {
  const auto pair = PatternSet::parse("010,210");
  CHECK(forb_210(Sequence{0, 1}) == 2);
  for (std::size_t len = 1; len <= 6; ++len) {
    CHECK(forb_210(Sequence(len, 0)) == 1);
  }
  // q = 2 (3 lies to its left), r = |{2,3}| = 2; forb_direct agrees.
  CHECK(forb_direct(Sequence{0, 1, 3, 2}, pair) == 4);
  CHECK(forb_210(Sequence{0, 1, 3, 2}) == 4);
}

TEST_CASE("forb_110") {
  CHECK(forb_110(Sequence{0}) == 1);
  CHECK(forb_110(Sequence{0, 0}) == 1);
  CHECK(forb_110(Sequence{0, 1, 2}) == 3);
  CHECK(forb_110(Sequence{0, 1, 1, 2}) == 3);  // q = 1, r = 2
}

TEST_CASE("sequence_stats") {
  CHECK(sequence_stats(Sequence{0, 1, 1}) == SequenceStats{1, 2});
  CHECK(sequence_stats(Sequence{}) == SequenceStats{std::nullopt, 0});
  CHECK(sequence_stats(Sequence{0, 2, 0, 3}) == SequenceStats{3, 3});
}

TEST_CASE("pattern parsing and normalization") {
  CHECK(Pattern::parse("120").to_string() == "120");
  CHECK_THROWS_AS(Pattern::parse(""), ParseError);
  CHECK_THROWS_AS(Pattern::parse("02"), ParseError);
  CHECK_THROWS_AS(Pattern::parse("1a"), ParseError);
  CHECK_THROWS_AS(Pattern(std::vector<Value>{}), std::invalid_argument);
  CHECK_THROWS_AS(Pattern(std::vector<Value>{1, 1}), std::invalid_argument);

  const auto set = PatternSet::parse("210,010,010");
  CHECK(set.size() == 2);
  CHECK(set.to_string() == "010,210");
  CHECK(set == PatternSet::parse("010,210"));
  CHECK_THROWS_AS(PatternSet::parse("010,"), ParseError);
}

TEST_CASE("forb_210 and forb_110 agree with forb_direct on every avoider up to length 8") {
  const auto p210 = PatternSet::parse("010,210");
  const auto p110 = PatternSet::parse("010,110");
  for (std::size_t n = 1; n <= 8; ++n) {
    oracle::for_each_inv_seq(n, p210, [&](std::span<const Value> s) {
      REQUIRE(forb_210(s) == forb_direct(s, p210));
    });
    oracle::for_each_inv_seq(n, p110, [&](std::span<const Value> s) {
      REQUIRE(forb_110(s) == forb_direct(s, p110));
    });
  }
}

TEST_CASE("containment properties on random sequences") {
  std::mt19937 rng(20240611);
  const std::vector<Pattern> patterns = {pat("010"), pat("021"), pat("102"), pat("000"),
                                         pat("0101"), pat("1203")};
  for (int trial = 0; trial < 3000; ++trial) {
    const Sequence s = testing::random_sequence(rng, 9, 4);
    const Pattern& p = patterns[trial % patterns.size()];
    const bool contained = contains_pattern(s, p);

    if (s.size() < p.size()) {
      REQUIRE_FALSE(contained);
    }
    if (p == pat("010")) {
      REQUIRE(contained == testing::has_equal_pair_with_larger_between(s));
    }
    // Inserting a value anywhere keeps an occurrence.
    if (contained) {
      Sequence longer = s;
      const auto where = rng() % (s.size() + 1);
      longer.insert(longer.begin() + static_cast<long>(where), static_cast<Value>(rng() % 6));
      REQUIRE(contains_pattern(longer, p));
    }
    // Prefix decomposition used by the oracle's pruning.
    if (!s.empty()) {
      const std::span<const Value> prefix(s.data(), s.size() - 1);
      REQUIRE(contained ==
              (contains_pattern(prefix, p) || contains_pattern_ending_at_last(s, p)));
    }
  }
}
