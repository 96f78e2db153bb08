#include "invseq/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "invseq/errors.hpp"

namespace invseq::oracle {

namespace {

const PatternSet& pattern_010() {
  static const PatternSet set{Pattern::parse("010")};
  return set;
}

const PatternSet& pattern_010_000() {
  static const PatternSet set = PatternSet::parse("010,000");
  return set;
}

const PatternSet& pattern_010_120() {
  static const PatternSet set = PatternSet::parse("010,120");
  return set;
}

const PatternSet& pattern_010_110() {
  static const PatternSet set = PatternSet::parse("010,110");
  return set;
}

bool last_completes_pattern(std::span<const Value> s, const PatternSet& patterns) {
  return std::any_of(patterns.begin(), patterns.end(), [&](const Pattern& p) {
    return contains_pattern_ending_at_last(s, p);
  });
}

void check_inv_seq_guard(std::size_t n, const PatternSet& patterns, const OracleLimits& limits) {
  if (patterns.empty()) {
    throw std::invalid_argument("pattern set must be nonempty");
  }
  if (n > limits.max_length) {
    throw ResourceLimitError("oracle length " + std::to_string(n) + " exceeds guard " +
                             std::to_string(limits.max_length));
  }
}

void check_word_guard(std::size_t n, std::size_t k, std::size_t max_alphabet,
                      const OracleLimits& limits) {
  if (n > limits.max_word_length || k > max_alphabet) {
    throw ResourceLimitError("word enumeration (n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ") exceeds guard (n<=" +
                             std::to_string(limits.max_word_length) +
                             ", k<=" + std::to_string(max_alphabet) + ")");
  }
}

// Depth-first search over words of length n on letters {0..alphabet-1}.
// `admit` may reject a prefix (and its whole subtree) based on its last letter.
template <class Admit, class Visit>
void search_words(std::size_t n, Value alphabet, const PatternSet& patterns, Admit&& admit,
                  Visit&& visit) {
  Sequence word;
  word.reserve(n);
  auto recurse = [&](auto&& self) -> void {
    if (word.size() == n) {
      visit(std::span<const Value>(word));
      return;
    }
    for (Value letter = 0; letter < alphabet; ++letter) {
      word.push_back(letter);
      if (admit(std::span<const Value>(word)) && !last_completes_pattern(word, patterns)) {
        self(self);
      }
      word.pop_back();
    }
  };
  recurse(recurse);
}

bool uses_all_letters(std::span<const Value> word, std::size_t k) {
  return std::set<Value>(word.begin(), word.end()).size() == k;
}

std::vector<Sequence> first_is_max_family(std::size_t n, std::size_t k, const PatternSet& patterns,
                                          const OracleLimits& limits) {
  check_word_guard(n, k, limits.max_word_length, limits);
  std::vector<Sequence> out;
  if (k == 0 || k > n) {
    return out;
  }
  const auto top = static_cast<Value>(k - 1);
  search_words(
      n, static_cast<Value>(k), patterns,
      [&](std::span<const Value> w) { return w.size() > 1 || w.front() == top; },
      [&](std::span<const Value> w) {
        if (uses_all_letters(w, k)) {
          out.emplace_back(w.begin(), w.end());
        }
      });
  return out;
}

}  // namespace

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  if (const char* raw = std::getenv("INVSEQ_ORACLE_MAX_N")) {
    const std::string_view text(raw);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size()) {
      limits.max_length = value;
    }
  }
  return limits;
}

std::map<std::size_t, std::uint64_t> RefinedCounts::by_max() const {
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& [key, count] : by_max_and_distinct) {
    out[key.first] += count;
  }
  return out;
}

void for_each_inv_seq(std::size_t n, const PatternSet& patterns, const SequenceVisitor& visit,
                      const OracleLimits& limits) {
  check_inv_seq_guard(n, patterns, limits);
  Sequence s;
  s.reserve(n);
  auto recurse = [&](auto&& self) -> void {
    if (s.size() == n) {
      visit(s);
      return;
    }
    const auto bound = static_cast<Value>(s.size());
    for (Value v = 0; v <= bound; ++v) {
      s.push_back(v);
      if (!last_completes_pattern(s, patterns)) {
        self(self);
      }
      s.pop_back();
    }
  };
  recurse(recurse);
}

std::vector<Sequence> enumerate_inv_seqs(std::size_t n, const PatternSet& patterns,
                                         const OracleLimits& limits) {
  std::vector<Sequence> out;
  for_each_inv_seq(
      n, patterns, [&](std::span<const Value> s) { out.emplace_back(s.begin(), s.end()); },
      limits);
  return out;
}

std::uint64_t count_inv_seqs(std::size_t n, const PatternSet& patterns,
                             const OracleLimits& limits) {
  std::uint64_t count = 0;
  for_each_inv_seq(n, patterns, [&](std::span<const Value>) { ++count; }, limits);
  return count;
}

RefinedCounts count_refined(std::size_t n, const PatternSet& patterns,
                            const OracleLimits& limits) {
  RefinedCounts counts;
  for_each_inv_seq(
      n, patterns,
      [&](std::span<const Value> s) {
        ++counts.total;
        const SequenceStats stats = sequence_stats(s);
        if (!stats.max) {
          return;
        }
        const std::size_t m = *stats.max;
        ++counts.by_max_and_distinct[{m, stats.distinct}];
        ++counts.by_max_and_forb[{m, forb_direct(s, patterns)}];
      },
      limits);
  return counts;
}

std::vector<Sequence> enumerate_words_A(std::size_t n, std::size_t k,
                                        const OracleLimits& limits) {
  return first_is_max_family(n, k, pattern_010(), limits);
}

std::vector<Sequence> enumerate_words_C(std::size_t n, std::size_t k,
                                        const OracleLimits& limits) {
  return first_is_max_family(n, k, pattern_010_000(), limits);
}

std::vector<Sequence> enumerate_words_E(std::size_t n, std::size_t k,
                                        const OracleLimits& limits) {
  check_word_guard(n, k, limits.max_alphabet, limits);
  std::vector<Sequence> out;
  search_words(
      n, static_cast<Value>(k), pattern_010_120(), [](std::span<const Value>) { return true; },
      [&](std::span<const Value> w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

std::vector<Sequence> enumerate_words_F(std::size_t n, std::size_t k,
                                        const OracleLimits& limits) {
  std::vector<Sequence> out = enumerate_words_E(n, k, limits);
  std::erase_if(out, [&](const Sequence& w) { return !uses_all_letters(w, k); });
  return out;
}

std::vector<TaggedWord> enumerate_words_H(std::size_t n, std::size_t k,
                                          const OracleLimits& limits) {
  check_word_guard(n, k, limits.max_alphabet, limits);
  const auto infinity = static_cast<Value>(k);
  std::vector<TaggedWord> out;
  // The finite subword must stay nondecreasing: compare the new finite
  // letter against the previous finite letter.
  auto admit = [&](std::span<const Value> w) {
    const Value last = w.back();
    if (last == infinity) {
      return true;
    }
    for (std::size_t i = w.size() - 1; i-- > 0;) {
      if (w[i] != infinity) {
        return w[i] <= last;
      }
    }
    return true;
  };
  search_words(n, infinity + 1, pattern_010(), admit, [&](std::span<const Value> w) {
    Value finite_max = 0;
    bool has_finite = false;
    for (Value letter : w) {
      if (letter != infinity) {
        has_finite = true;
        finite_max = std::max(finite_max, letter);
      }
    }
    const bool ok = k == 0 ? !has_finite : has_finite && finite_max == infinity - 1;
    if (ok) {
      out.push_back({Sequence(w.begin(), w.end()), !w.empty() && w.back() == infinity});
    }
  });
  return out;
}

std::vector<ForbWord> enumerate_words_J(std::size_t n, std::size_t k,
                                        const OracleLimits& limits) {
  check_word_guard(n, k, limits.max_alphabet, limits);
  std::vector<ForbWord> out;
  search_words(
      n, static_cast<Value>(k), pattern_010_110(), [](std::span<const Value>) { return true; },
      [&](std::span<const Value> w) {
        out.push_back({Sequence(w.begin(), w.end()), forb_direct(w, pattern_010_110())});
      });
  return out;
}

}  // namespace invseq::oracle
