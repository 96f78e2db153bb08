#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invseq/bigcount.hpp"
#include "invseq/sequence.hpp"

namespace invseq {

/// Published counts #I_n(P) for n = 1..terms.size().
struct ReferenceRow {
  // The first entry is the row's own pattern set; any further entries are
  // Wilf-equivalent sets sharing the row (e.g. 101 and 110).
  std::vector<PatternSet> pattern_sets;
  std::vector<BigCount> terms;
  std::string source;
  std::string oeis_id;  // inert metadata; empty when none is assigned

  const PatternSet& pattern_set() const { return pattern_sets.front(); }
  bool covers(const PatternSet& patterns) const;

  bool operator==(const ReferenceRow&) const = default;
};

/// All embedded rows: 11 single-pattern rows, 11 rows for 010 paired with
/// another length-3 pattern, and the extended 14-term row for 010.
const std::vector<ReferenceRow>& reference_rows();

/// The longest row covering `patterns`, or nullptr.
const ReferenceRow* find_reference(const PatternSet& patterns);

struct CheckReport {
  std::vector<bool> term_matches;           // one per compared term
  std::optional<std::size_t> first_mismatch;  // 1-based n
  std::size_t compared = 0;

  bool full_match() const { return !first_mismatch.has_value(); }
};

/// Compares computed[0..] (n = 1, 2, ...) against the reference row for
/// `patterns`, over the terms both sides have. Throws NoReferenceDataError
/// when no row covers the set.
CheckReport check(const PatternSet& patterns, std::span<const BigCount> computed);

/// Text form, one row per line:
///   <set>[|<set>...]:<term>,<term>,...  # <source> <oeis id>
/// where <set> is a comma-separated list of patterns. Lines starting with
/// '#' and blank lines are ignored by the parser.
std::string format_reference_file(std::span<const ReferenceRow> rows);

/// Throws ParseError on malformed input.
std::vector<ReferenceRow> parse_reference_file(std::string_view text);

/// FNV-1a over format_reference_file(reference_rows()).
std::uint64_t reference_checksum();

}  // namespace invseq
