#include <doctest.h>

#include <sstream>

#include "cli/commands.hpp"
#include "cli/emission.hpp"
#include "invseq/errors.hpp"
#include "invseq/recurrences.hpp"

using namespace invseq;
using namespace invseq::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count prints the series") {
  const auto r = invoke({"count", "--patterns", "010", "--n", "7", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "n,value,method\n1,1,recurrence\n2,2,recurrence\n3,5,recurrence\n4,15,recurrence\n"
        "5,53,recurrence\n6,215,recurrence\n7,979,recurrence\n");

  const auto oracle = invoke({"count", "--patterns", "010,102", "--n", "7", "--format", "csv"});
  CHECK(oracle.code == kExitOk);
  CHECK(oracle.out.find("7,707,oracle\n") != std::string::npos);

  const auto forced =
      invoke({"count", "--patterns", "010", "--n", "6", "--method", "oracle", "--format", "csv"});
  CHECK(forced.out.find("6,215,oracle\n") != std::string::npos);

  const auto tagged = invoke({"count", "--patterns", "010,120", "--n", "3", "--oeis"});
  CHECK(tagged.err == "oeis: A279559\n");
}

TEST_CASE("n = 0 prints nothing") {
  for (const char* format : {"human", "csv", "jsonl"}) {
    const auto r = invoke({"count", "--patterns", "010", "--n", "0", "--format", format});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
  }
}

TEST_CASE("exit codes") {
  CHECK(invoke({"count", "--patterns", "0a0", "--n", "3"}).code == kExitUsage);
  CHECK(invoke({"count", "--patterns", "010"}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);

  const auto unsolved =
      invoke({"count", "--patterns", "010,102", "--n", "3", "--method", "recurrence"});
  CHECK(unsolved.code == kExitUsage);
  CHECK(unsolved.err.rfind("error: no-recurrence: ", 0) == 0);

  const auto big = invoke({"count", "--patterns", "021", "--n", "13"});
  CHECK(big.code == kExitResource);
  CHECK(big.err.rfind("error: resource-limit: ", 0) == 0);

  CHECK(invoke({"verify", "--patterns", "021", "--n", "4"}).code == kExitUsage);
  CHECK(invoke({"verify", "--patterns", "010", "--n", "13"}).code == kExitResource);
}

TEST_CASE("verify succeeds on every solved set") {
  for (const char* set : {"010", "000,010", "010,120", "010,210", "010,201", "010,110"}) {
    const auto r = invoke({"verify", "--patterns", set, "--n", "7"});
    INFO(set, "\n", r.out);
    CHECK(r.code == kExitOk);
  }
}

TEST_CASE("verify reports a perturbed table") {
  CountTable table = table_l(6);
  table.cell(6, 3, 2) += 1;
  std::ostringstream out;
  const bool ok = verify_against_table(PatternSet::parse("010,110"), Family::l, table, 6,
                                       oracle::OracleLimits{}, out);
  CHECK_FALSE(ok);
  CHECK(out.str().find("mismatch") != std::string::npos);
}

TEST_CASE("refcheck passes on embedded rows and fails on perturbed ones") {
  std::ostringstream out;
  CHECK(run_refcheck(reference_rows(), oracle::OracleLimits{}, out));

  std::vector<ReferenceRow> rows = {*find_reference(PatternSet::parse("010,102"))};
  rows[0].terms[6] = 708;
  std::ostringstream bad;
  CHECK_FALSE(run_refcheck(rows, oracle::OracleLimits{}, bad));

  rows = {*find_reference(PatternSet::parse("010"))};
  rows[0].terms[13] += 1;
  std::ostringstream bad_long;
  CHECK_FALSE(run_refcheck(rows, oracle::OracleLimits{}, bad_long));
}

TEST_CASE("table output") {
  const auto b = invoke({"table", "--family", "b", "--n", "3", "--format", "csv"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.rfind("n,m,d,value\n", 0) == 0);
  CHECK(b.out.find("3,1,2,2\n") != std::string::npos);

  const auto a = invoke({"table", "--family", "a", "--n", "3", "--k", "2", "--format", "csv"});
  CHECK(a.out.find("3,2,3\n") != std::string::npos);

  CHECK(invoke({"table", "--family", "z", "--n", "3"}).code == kExitUsage);
}

TEST_CASE("csv and jsonl round trip") {
  for (const char* family : {"b", "i", "jk", "f"}) {
    for (Format format : {Format::csv, Format::jsonl}) {
      const std::string name = format == Format::csv ? "csv" : "jsonl";
      const auto r = invoke({"table", "--family", family, "--n", "6", "--format", name});
      REQUIRE(r.code == kExitOk);
      const Emission parsed = parse_emission(r.out, format);
      std::ostringstream again;
      write_emission(again, parsed, format);
      CHECK(again.str() == r.out);
    }
  }
}

TEST_CASE("emission formats") {
  const Emission e{{"n", "value"}, {{"1", "12345678901234567890123"}, {"10", "2"}}};
  std::ostringstream csv, jsonl, human;
  write_emission(csv, e, Format::csv);
  write_emission(jsonl, e, Format::jsonl);
  write_emission(human, e, Format::human);
  CHECK(csv.str() == "n,value\n1,12345678901234567890123\n10,2\n");
  CHECK(jsonl.str() ==
        "{\"n\":1,\"value\":\"12345678901234567890123\"}\n{\"n\":10,\"value\":\"2\"}\n");
  CHECK(parse_emission(jsonl.str(), Format::jsonl) == e);
  CHECK(human.str().find("12345678901234567890123") != std::string::npos);

  CHECK_THROWS_AS(parse_emission("x", Format::human), ParseError);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
}

TEST_CASE("bench") {
  const auto r = invoke({"bench", "--n", "20"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("cells=") != std::string::npos);
  const auto total = series(Family::b, 20).back();
  CHECK(r.out.find("total_at_n_max=" + to_decimal(total) + "\n") != std::string::npos);

  const auto modular = invoke({"bench", "--n", "20", "--mod", "1000"});
  CHECK(modular.out.find("total_at_n_max=" + to_decimal(total % 1000) + "\n") !=
        std::string::npos);
  CHECK(invoke({"bench", "--n", "5", "--mod", "1"}).code == kExitUsage);
}
