#pragma once

// Exhaustive enumerators used as ground truth for every counting formula.
//
// All enumerators walk candidates depth-first in lexicographic order and
// discard a prefix as soon as it contains a forbidden pattern (containment is
// monotone under extension, so nothing is lost). Side constraints of the word
// families (letters used, first letter, monotone subword) are checked
// directly on the candidates. Nothing here shares code with recurrences.hpp.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "invseq/sequence.hpp"

namespace invseq::oracle {

struct OracleLimits {
  std::size_t max_length = 12;       // inversion sequences
  std::size_t max_word_length = 10;  // word families
  std::size_t max_alphabet = 8;

  /// Defaults, with max_length overridden by INVSEQ_ORACLE_MAX_N when set.
  static OracleLimits from_environment();
};

using SequenceVisitor = std::function<void(std::span<const Value>)>;

/// Visits the members of I_n(P) in lexicographic order.
/// Throws ResourceLimitError when n exceeds the guard, std::invalid_argument
/// when P is empty.
void for_each_inv_seq(std::size_t n, const PatternSet& patterns, const SequenceVisitor& visit,
                      const OracleLimits& limits = {});

std::vector<Sequence> enumerate_inv_seqs(std::size_t n, const PatternSet& patterns,
                                         const OracleLimits& limits = {});

std::uint64_t count_inv_seqs(std::size_t n, const PatternSet& patterns,
                             const OracleLimits& limits = {});

using CellKey = std::pair<std::size_t, std::size_t>;
using CellCounts = std::map<CellKey, std::uint64_t>;

struct RefinedCounts {
  std::uint64_t total = 0;
  CellCounts by_max_and_distinct;  // (m, d)
  CellCounts by_max_and_forb;      // (m, f), f = forb_direct(s, P)

  std::map<std::size_t, std::uint64_t> by_max() const;
};

RefinedCounts count_refined(std::size_t n, const PatternSet& patterns,
                            const OracleLimits& limits = {});

// Word families. Letters are 0-based: the alphabet {1..k} is stored as
// {0..k-1}, so "first letter is k" becomes "first letter is k-1".

/// 010-avoiding words of length n over k letters using every letter, whose
/// first letter is the largest.
std::vector<Sequence> enumerate_words_A(std::size_t n, std::size_t k,
                                        const OracleLimits& limits = {});

/// As family A, additionally avoiding 000.
std::vector<Sequence> enumerate_words_C(std::size_t n, std::size_t k,
                                        const OracleLimits& limits = {});

/// {010,120}-avoiding words of length n over k letters.
std::vector<Sequence> enumerate_words_E(std::size_t n, std::size_t k,
                                        const OracleLimits& limits = {});

/// Members of family E that use all k letters.
std::vector<Sequence> enumerate_words_F(std::size_t n, std::size_t k,
                                        const OracleLimits& limits = {});

struct TaggedWord {
  Sequence word;
  bool ends_with_infinity = false;
};

/// 010-avoiding words over {0..k-1} plus an infinity letter (stored as k)
/// whose finite letters form a nondecreasing subword with maximum exactly
/// k-1 (no finite letters when k = 0).
std::vector<TaggedWord> enumerate_words_H(std::size_t n, std::size_t k,
                                          const OracleLimits& limits = {});

struct ForbWord {
  Sequence word;
  std::size_t forb = 0;
};

/// {010,110}-avoiding words of length n over {0..k-1}, each with its
/// forb_direct value.
std::vector<ForbWord> enumerate_words_J(std::size_t n, std::size_t k,
                                        const OracleLimits& limits = {});

}  // namespace invseq::oracle
