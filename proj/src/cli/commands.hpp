#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

#include "invseq/count_table.hpp"
#include "invseq/oracle.hpp"
#include "invseq/refdata.hpp"
#include "invseq/sequence.hpp"

namespace invseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

/// Runs one command line (without the program name). Errors are reported on
/// `err` as a single line "error: <kind>: <message>".
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Compares oracle totals and refined cells with `table` for n = 1..n_max and
/// writes one line per n. `family` selects the refinement: (m, d) for b and
/// d, m for g, (m, forb) for i and l. Returns true iff everything matches.
bool verify_against_table(const PatternSet& patterns, Family family, const CountTable& table,
                          std::size_t n_max, const oracle::OracleLimits& limits,
                          std::ostream& out);

/// Checks every row: the recurrence over all terms when the row's pattern set
/// is solved, the oracle (at most 7 terms) otherwise, and the oracle for
/// every Wilf-equivalent alternative set. Returns true iff all rows pass.
bool run_refcheck(std::span<const ReferenceRow> rows, const oracle::OracleLimits& limits,
                  std::ostream& out);

}  // namespace invseq::cli
