#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/emission.hpp"
#include "invseq/errors.hpp"
#include "invseq/recurrences.hpp"

namespace invseq::cli {

namespace {

constexpr std::size_t kOracleRefcheckTerms = 7;

using CellMap = std::map<std::pair<std::size_t, std::size_t>, BigCount>;

// Nonzero cells of layer n, keyed (m, x). Rank-2 tables use x = 0.
CellMap table_cells(const CountTable& table, std::size_t n) {
  CellMap cells;
  for (std::size_t m = 0; m < table.row_count(n); ++m) {
    for (std::size_t x = 0; x < table.row_width(n, m); ++x) {
      if (sgn(table(n, m, x)) != 0) {
        cells[{m, x}] = table(n, m, x);
      }
    }
  }
  return cells;
}

CellMap oracle_cells(const oracle::RefinedCounts& counts, Family family) {
  CellMap cells;
  switch (family) {
    case Family::b:
    case Family::d:
      for (const auto& [key, count] : counts.by_max_and_distinct) {
        cells[key] = static_cast<unsigned long>(count);
      }
      break;
    case Family::g:
      for (const auto& [m, count] : counts.by_max()) {
        cells[{m, 0}] = static_cast<unsigned long>(count);
      }
      break;
    default:
      for (const auto& [key, count] : counts.by_max_and_forb) {
        cells[key] = static_cast<unsigned long>(count);
      }
      break;
  }
  return cells;
}

std::string join_terms(std::span<const BigCount> terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += (i > 0 ? "," : "") + to_decimal(terms[i]);
  }
  return out;
}

std::vector<BigCount> oracle_series(const PatternSet& patterns, std::size_t n_max,
                                    const oracle::OracleLimits& limits) {
  std::vector<BigCount> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    out.emplace_back(static_cast<unsigned long>(oracle::count_inv_seqs(n, patterns, limits)));
  }
  return out;
}

Family require_solved(const PatternSet& patterns) {
  if (auto family = solved_family(patterns)) {
    return *family;
  }
  throw NoRecurrenceError("no recurrence implemented for " + patterns.to_string() +
                          "; only the oracle applies (--method oracle)");
}

// Every cell of the requested table inside the given bounds, support zeros included.
Emission table_emission(const std::string& family, std::size_t n_max, std::size_t k_max) {
  Emission emission;
  auto push = [&](std::vector<std::size_t> indices, const BigCount& value) {
    std::vector<std::string> row;
    for (std::size_t index : indices) {
      row.push_back(std::to_string(index));
    }
    row.push_back(to_decimal(value));
    emission.rows.push_back(std::move(row));
  };
  auto sequence_table = [&](const CountTable& table, std::vector<std::string> columns) {
    emission.columns = std::move(columns);
    for (std::size_t n = 1; n <= n_max; ++n) {
      for (std::size_t m = 0; m < table.row_count(n); ++m) {
        if (table.rank() == 2) {
          push({n, m}, table(n, m));
          continue;
        }
        for (std::size_t x = 0; x < table.row_width(n, m); ++x) {
          push({n, m, x}, table(n, m, x));
        }
      }
    }
  };
  auto word_table = [&](const CountTable& table, std::size_t first) {
    emission.columns = {"n", "k", "value"};
    for (std::size_t n = first; n <= n_max; ++n) {
      for (std::size_t k = first; k <= k_max; ++k) {
        push({n, k}, table(n, k));
      }
    }
  };

  const ExactArithmetic exact;
  if (family == "b") {
    sequence_table(table_b(n_max), {"n", "m", "d", "value"});
  } else if (family == "d") {
    sequence_table(table_d(n_max), {"n", "m", "d", "value"});
  } else if (family == "g") {
    sequence_table(table_g(n_max), {"n", "m", "value"});
  } else if (family == "i") {
    sequence_table(table_i(n_max), {"n", "m", "f", "value"});
  } else if (family == "l") {
    sequence_table(table_l(n_max), {"n", "m", "f", "value"});
  } else if (family == "h") {
    word_table(table_h(n_max, k_max).total, 0);
  } else if (family == "jk") {
    const JKTables jk = table_jk(n_max, k_max);
    emission.columns = {"n", "k", "f", "value"};
    for (std::size_t n = 0; n <= n_max; ++n) {
      for (std::size_t k = 0; k <= k_max; ++k) {
        for (std::size_t f = 0; f <= k; ++f) {
          push({n, k, f}, jk.j(n, k, f));
        }
      }
    }
  } else if (family == "a") {
    word_table(build_table_a(n_max, k_max, exact), 1);
  } else if (family == "c") {
    word_table(build_table_c(n_max, k_max, exact), 0);
  } else if (family == "e") {
    word_table(build_table_e(n_max, k_max, exact), 0);
  } else if (family == "f") {
    word_table(build_table_f(n_max, k_max, exact), 0);
  }
  return emission;
}

struct CountOptions {
  std::string patterns;
  std::size_t n = 0;
  std::string method = "auto";
  std::string format = "human";
  bool oeis = false;
};

int cmd_count(const CountOptions& options, std::ostream& out, std::ostream& err) {
  const PatternSet patterns = PatternSet::parse(options.patterns);
  const Format format = parse_format(options.format);
  const auto family = solved_family(patterns);

  std::string method = options.method;
  if (method == "auto") {
    method = family ? "recurrence" : "oracle";
  }
  std::vector<BigCount> terms;
  if (method == "recurrence") {
    terms = series(require_solved(patterns), options.n);
  } else {
    terms = oracle_series(patterns, options.n, oracle::OracleLimits::from_environment());
  }

  if (options.oeis) {
    const ReferenceRow* row = find_reference(patterns);
    err << "oeis: " << (row && !row->oeis_id.empty() ? row->oeis_id : "none") << '\n';
  }
  Emission emission{{"n", "value", "method"}, {}};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    emission.rows.push_back({std::to_string(i + 1), to_decimal(terms[i]), method});
  }
  write_emission(out, emission, format);
  return kExitOk;
}

int cmd_verify(const std::string& pattern_text, std::size_t n_max, std::ostream& out) {
  const PatternSet patterns = PatternSet::parse(pattern_text);
  const Family family = require_solved(patterns);
  const auto limits = oracle::OracleLimits::from_environment();
  if (n_max > limits.max_length) {
    throw ResourceLimitError("verify length " + std::to_string(n_max) + " exceeds oracle guard " +
                             std::to_string(limits.max_length));
  }
  const CountTable table = build_sequence_table(family, n_max);
  return verify_against_table(patterns, family, table, n_max, limits, out) ? kExitOk
                                                                            : kExitMismatch;
}

int cmd_table(const std::string& family, std::size_t n_max, std::optional<std::size_t> k_max,
              const std::string& format_name, std::ostream& out) {
  const Format format = parse_format(format_name);
  write_emission(out, table_emission(family, n_max, k_max.value_or(n_max)), format);
  return kExitOk;
}

int cmd_bench(std::size_t n_max, std::optional<std::uint64_t> modulus, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::size_t cells = 0;
  std::string last_total;
  if (modulus) {
    const ModularArithmetic arith(*modulus);
    const auto table = build_table_b(n_max, arith);
    cells = table.cell_count();
    last_total = std::to_string(layer_total(table, n_max, arith));
  } else {
    const auto table = table_b(n_max);
    cells = table.cell_count();
    last_total = to_decimal(layer_total(table, n_max));
  }
  const std::chrono::duration<double> elapsed = Clock::now() - start;

  out << "family=b\n";
  out << "n_max=" << n_max << '\n';
  out << "mode=" << (modulus ? "mod " + std::to_string(*modulus) : std::string("exact")) << '\n';
  out << "cells=" << cells << '\n';
  out << "wall_seconds=" << std::fixed << std::setprecision(3) << elapsed.count() << '\n';
  out << "total_at_n_max=" << last_total << '\n';
  out << "stretch_goal=n_max 140 within 60 s (informational)\n";
  return kExitOk;
}

}  // namespace

bool verify_against_table(const PatternSet& patterns, Family family, const CountTable& table,
                          std::size_t n_max, const oracle::OracleLimits& limits,
                          std::ostream& out) {
  bool all_match = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto counts = oracle::count_refined(n, patterns, limits);
    const CellMap expected = oracle_cells(counts, family);
    const CellMap actual = table_cells(table, n);
    const BigCount total = layer_total(table, n);

    std::size_t mismatched = 0;
    for (const auto& [key, value] : expected) {
      const auto it = actual.find(key);
      mismatched += (it == actual.end() || it->second != value) ? 1 : 0;
    }
    for (const auto& [key, value] : actual) {
      mismatched += expected.contains(key) ? 0 : 1;
    }
    const bool totals_match = total == static_cast<unsigned long>(counts.total);
    const bool ok = totals_match && mismatched == 0;
    all_match = all_match && ok;
    out << "n=" << n << " oracle=" << counts.total << " recurrence=" << to_decimal(total)
        << " cells=" << expected.size() << " mismatched_cells=" << mismatched << ' '
        << (ok ? "match" : "MISMATCH") << '\n';
  }
  out << (all_match ? "all-match" : "mismatch") << '\n';
  return all_match;
}

bool run_refcheck(std::span<const ReferenceRow> rows, const oracle::OracleLimits& limits,
                  std::ostream& out) {
  bool all_pass = true;
  for (const ReferenceRow& row : rows) {
    bool row_pass = true;
    std::string detail;
    for (std::size_t s = 0; s < row.pattern_sets.size(); ++s) {
      const PatternSet& patterns = row.pattern_sets[s];
      const auto family = solved_family(patterns);
      const bool use_recurrence = s == 0 && family.has_value();
      const std::size_t terms =
          use_recurrence ? row.terms.size() : std::min(row.terms.size(), kOracleRefcheckTerms);
      const std::vector<BigCount> computed =
          use_recurrence ? series(*family, terms) : oracle_series(patterns, terms, limits);
      const bool pass =
          std::equal(computed.begin(), computed.end(), row.terms.begin(), row.terms.begin() + terms);
      row_pass = row_pass && pass;
      detail += ' ' + patterns.to_string() + ':' + (use_recurrence ? "recurrence" : "oracle") +
                '/' + std::to_string(terms);
      if (!pass) {
        detail += " got=" + join_terms(computed);
      }
    }
    all_pass = all_pass && row_pass;
    out << (row_pass ? "pass " : "FAIL ") << row.source << ' '
        << (row.oeis_id.empty() ? "-" : row.oeis_id) << detail << '\n';
  }
  out << (all_pass ? "refcheck: all rows pass" : "refcheck: FAILED") << '\n';
  return all_pass;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate pattern-avoiding inversion sequences"};
  app.name("invseq");
  app.require_subcommand(1);

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Print #I_n(P) for n = 1..N");
  count_cmd->add_option("--patterns", count.patterns, "Comma-separated patterns, e.g. 010,120")
      ->required();
  count_cmd->add_option("--n", count.n, "Largest length")->required();
  count_cmd->add_option("--method", count.method)
      ->check(CLI::IsMember({"auto", "oracle", "recurrence"}));
  count_cmd->add_option("--format", count.format)->check(CLI::IsMember({"human", "csv", "jsonl"}));
  count_cmd->add_flag("--oeis", count.oeis, "Also print the OEIS id (to stderr)");

  std::string verify_patterns;
  std::size_t verify_n = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Compare recurrence and oracle, cell by cell");
  verify_cmd->add_option("--patterns", verify_patterns)->required();
  verify_cmd->add_option("--n", verify_n)->required();

  std::string table_family;
  std::size_t table_n = 0;
  std::optional<std::size_t> table_k;
  std::string table_format = "human";
  auto* table_cmd = app.add_subcommand("table", "Dump a refined count table");
  table_cmd->add_option("--family", table_family)
      ->required()
      ->check(CLI::IsMember({"b", "d", "g", "i", "l", "h", "jk", "a", "c", "e", "f"}));
  table_cmd->add_option("--n", table_n)->required();
  table_cmd->add_option("--k", table_k, "Alphabet bound for word families (default: n)");
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"human", "csv", "jsonl"}));

  auto* refcheck_cmd = app.add_subcommand("refcheck", "Check every embedded reference row");
  auto* refdata_cmd = app.add_subcommand("refdata", "Print the reference data file");

  std::size_t bench_n = 50;
  std::optional<std::uint64_t> bench_mod;
  auto* bench_cmd = app.add_subcommand("bench", "Time construction of the 010 table");
  bench_cmd->add_option("--n", bench_n);
  bench_cmd->add_option("--mod", bench_mod, "Evaluate modulo this number instead of exactly");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "error: usage: " << message << '\n';
    return kExitUsage;
  }

  try {
    if (count_cmd->parsed()) {
      return cmd_count(count, out, err);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_patterns, verify_n, out);
    }
    if (table_cmd->parsed()) {
      return cmd_table(table_family, table_n, table_k, table_format, out);
    }
    if (refcheck_cmd->parsed()) {
      return run_refcheck(reference_rows(), oracle::OracleLimits::from_environment(), out)
                 ? kExitOk
                 : kExitMismatch;
    }
    if (refdata_cmd->parsed()) {
      out << format_reference_file(reference_rows());
      return kExitOk;
    }
    if (bench_cmd->parsed()) {
      return cmd_bench(bench_n, bench_mod, out);
    }
  } catch (const ResourceLimitError& e) {
    err << "error: resource-limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const NoRecurrenceError& e) {
    err << "error: no-recurrence: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace invseq::cli
