#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "invseq/errors.hpp"
#include "invseq/oracle.hpp"
#include "invseq/refdata.hpp"

using namespace invseq;

TEST_CASE("row inventory") {
  const auto& rows = reference_rows();
  REQUIRE(rows.size() == 23);
  std::map<std::string, std::size_t> by_source;
  for (const auto& row : rows) {
    ++by_source[row.source];
    CHECK(row.terms.size() >= 7);
    CHECK(row.terms.front() == 1);
  }
  CHECK(by_source["single-pattern"] == 11);
  CHECK(by_source["pair-with-010"] == 11);
  CHECK(by_source["extended-010"] == 1);
}

TEST_CASE("rows sharing an OEIS id share their terms") {
  std::map<std::string, const ReferenceRow*> seen;
  for (const auto& row : reference_rows()) {
    if (row.oeis_id.empty()) continue;
    const auto [it, fresh] = seen.emplace(row.oeis_id, &row);
    if (fresh) continue;
    const auto& other = it->second->terms;
    const std::size_t common = std::min(other.size(), row.terms.size());
    for (std::size_t t = 0; t < common; ++t) {
      INFO(row.oeis_id, " term ", t + 1);
      REQUIRE(other[t] == row.terms[t]);
    }
  }
}

TEST_CASE("first seven terms of every set agree with enumeration") {
  for (const auto& row : reference_rows()) {
    for (const auto& set : row.pattern_sets) {
      for (std::size_t n = 1; n <= 7; ++n) {
        INFO("set ", set.to_string(), " n ", n);
        REQUIRE(BigCount(static_cast<unsigned long>(oracle::count_inv_seqs(n, set))) ==
                row.terms[n - 1]);
      }
    }
  }
}

TEST_CASE("find_reference prefers the longest row") {
  const auto* row = find_reference(PatternSet::parse("010"));
  REQUIRE(row != nullptr);
  CHECK(row->terms.size() == 14);
  CHECK(find_reference(PatternSet::parse("101")) == find_reference(PatternSet::parse("110")));
  CHECK(find_reference(PatternSet::parse("102,201")) == nullptr);
}

TEST_CASE("check") {
  const auto& terms = find_reference(PatternSet::parse("010,110"))->terms;
  std::vector<BigCount> computed(terms.begin(), terms.end());
  CHECK(check(PatternSet::parse("010,110"), computed).full_match());

  computed[6] += 1;
  const auto report = check(PatternSet::parse("010,110"), computed);
  CHECK_FALSE(report.full_match());
  CHECK(report.first_mismatch == 7);
  CHECK(report.compared == 7);
  CHECK(report.term_matches[5]);
  CHECK_FALSE(report.term_matches[6]);

  // Extra computed terms beyond the row are ignored.
  computed.assign(terms.begin(), terms.end());
  computed.push_back(1);
  CHECK(check(PatternSet::parse("010,110"), computed).compared == 7);

  CHECK_THROWS_AS(check(PatternSet::parse("102,201"), computed), NoReferenceDataError);
}

TEST_CASE("text format round trip") {
  const auto text = format_reference_file(reference_rows());
  CHECK(parse_reference_file(text) == reference_rows());
  CHECK(text.find("110|101:1,2,6,23,105,549,3207  # single-pattern A113227\n") != text.npos);
  CHECK(text.find("010,102:1,2,5,15,51,186,707  # pair-with-010\n") != text.npos);

  const auto parsed = parse_reference_file("# header\n\n 010 : 1, 2 ,5\n");
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].terms.size() == 3);
  CHECK(parsed[0].source.empty());

  CHECK_THROWS_AS(parse_reference_file("010 1,2\n"), ParseError);
  CHECK_THROWS_AS(parse_reference_file("010:1,x\n"), ParseError);
  CHECK_THROWS_AS(parse_reference_file("0a0:1\n"), ParseError);
}

TEST_CASE("shipped data file matches the embedded rows") {
  std::ifstream in(INVSEQ_DATA_DIR "/reference_counts.txt");
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(parse_reference_file(buffer.str()) == reference_rows());
}

TEST_CASE("checksum is frozen") {
  CHECK(reference_checksum() == 4851840334400247802ULL);
}
