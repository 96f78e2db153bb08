#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invseq {

using Value = std::uint32_t;

// Inversion sequences, words and raw candidate subsequences all share this
// representation. Values are 0-based.
using Sequence = std::vector<Value>;

/// A classical pattern in normalized form: its set of values is exactly
/// {0, 1, ..., r} for some r.
class Pattern {
 public:
  /// Throws std::invalid_argument when `values` is empty or not normalized.
  explicit Pattern(std::vector<Value> values);

  /// Parses a digit string such as "010" or "120". Throws ParseError.
  static Pattern parse(std::string_view digits);

  std::span<const Value> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::string to_string() const;

  auto operator<=>(const Pattern&) const = default;
  bool operator==(const Pattern&) const = default;

 private:
  std::vector<Value> values_;
};

/// Sorted, duplicate-free set of patterns.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Pattern> patterns);
  explicit PatternSet(std::vector<Pattern> patterns);

  /// Parses comma-separated digit strings, e.g. "210,010". Throws ParseError.
  static PatternSet parse(std::string_view text);

  const std::vector<Pattern>& patterns() const noexcept { return patterns_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  bool empty() const noexcept { return patterns_.empty(); }
  std::string to_string() const;

  auto begin() const noexcept { return patterns_.begin(); }
  auto end() const noexcept { return patterns_.end(); }

  bool operator==(const PatternSet&) const = default;

 private:
  std::vector<Pattern> patterns_;
};

bool is_inversion_sequence(std::span<const Value> s) noexcept;

/// True iff some (not necessarily contiguous) subsequence of `s` is
/// order-isomorphic to `p`.
bool contains_pattern(std::span<const Value> s, const Pattern& p);

/// True iff `s` has an occurrence of `p` whose last entry is the last entry
/// of `s`. For a sequence whose proper prefix avoids `p` this is equivalent
/// to contains_pattern.
bool contains_pattern_ending_at_last(std::span<const Value> s, const Pattern& p);

bool avoids_all(std::span<const Value> s, const PatternSet& patterns);

/// Number of values v in {0, ..., max(s)} such that s . (max(s)+1) . v
/// contains some pattern of `patterns`. Returns 0 for the empty sequence.
/// When `s` itself contains a pattern every value qualifies.
std::size_t forb_direct(std::span<const Value> s, const PatternSet& patterns);

/// forb for {010,210}-avoiding sequences: q + r, where q is the largest value
/// with a larger value somewhere to its left (0 if none) and r counts the
/// distinct values >= q.
std::size_t forb_210(std::span<const Value> s);

/// forb for {010,110}-avoiding sequences: q + r, where q is the largest value
/// occurring at least twice (0 if none) and r counts the distinct values >= q.
std::size_t forb_110(std::span<const Value> s);

struct SequenceStats {
  std::optional<Value> max;
  std::size_t distinct = 0;

  bool operator==(const SequenceStats&) const = default;
};

SequenceStats sequence_stats(std::span<const Value> s);

std::string to_string(std::span<const Value> s);

}  // namespace invseq
