#include "invseq/sequence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "invseq/errors.hpp"

namespace invseq {

namespace {

int compare(Value a, Value b) noexcept { return (a > b) - (a < b); }

struct Anchor {
  Value text_value;
  Value pattern_value;
};

// Backtracking matcher. `picked` holds the text positions already matched to
// pattern[0 .. picked.size()). When an anchor is present every chosen entry
// must also compare to the anchor the way the pattern entry compares to the
// anchor's pattern value.
bool extend_occurrence(std::span<const Value> text, std::span<const Value> pattern,
                       std::vector<std::size_t>& picked, std::size_t from,
                       const std::optional<Anchor>& anchor) {
  const std::size_t depth = picked.size();
  if (depth == pattern.size()) {
    return true;
  }
  const std::size_t remaining = pattern.size() - depth;
  for (std::size_t i = from; i + remaining <= text.size(); ++i) {
    if (anchor && compare(text[i], anchor->text_value) !=
                      compare(pattern[depth], anchor->pattern_value)) {
      continue;
    }
    bool consistent = true;
    for (std::size_t a = 0; a < depth && consistent; ++a) {
      consistent = compare(text[picked[a]], text[i]) == compare(pattern[a], pattern[depth]);
    }
    if (!consistent) {
      continue;
    }
    picked.push_back(i);
    if (extend_occurrence(text, pattern, picked, i + 1, anchor)) {
      return true;
    }
    picked.pop_back();
  }
  return false;
}

std::size_t distinct_at_least(std::span<const Value> s, Value threshold) {
  std::set<Value> seen;
  for (Value v : s) {
    if (v >= threshold) {
      seen.insert(v);
    }
  }
  return seen.size();
}

}  // namespace

Pattern::Pattern(std::vector<Value> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("pattern must be nonempty");
  }
  std::vector<Value> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) {
      throw std::invalid_argument("pattern " + invseq::to_string(values_) +
                                  " is not normalized (values must be exactly 0..r)");
    }
  }
}

Pattern Pattern::parse(std::string_view digits) {
  if (digits.empty()) {
    throw ParseError("empty pattern");
  }
  std::vector<Value> values;
  values.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ParseError("pattern '" + std::string(digits) + "' contains a non-digit");
    }
    values.push_back(static_cast<Value>(c - '0'));
  }
  try {
    return Pattern(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string Pattern::to_string() const {
  std::string out;
  for (Value v : values_) {
    if (v < 10) {
      out.push_back(static_cast<char>('0' + v));
    } else {
      // Only reachable for library-built patterns; keep it unambiguous.
      out += "(" + std::to_string(v) + ")";
    }
  }
  return out;
}

PatternSet::PatternSet(std::initializer_list<Pattern> patterns)
    : PatternSet(std::vector<Pattern>(patterns)) {}

PatternSet::PatternSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<Pattern> patterns;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token =
        text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    patterns.push_back(Pattern::parse(token));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return PatternSet(std::move(patterns));
}

std::string PatternSet::to_string() const {
  std::string out;
  for (const Pattern& p : patterns_) {
    if (!out.empty()) {
      out.push_back(',');
    }
    out += p.to_string();
  }
  return out;
}

bool is_inversion_sequence(std::span<const Value> s) noexcept {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > i) {
      return false;
    }
  }
  return true;
}

bool contains_pattern(std::span<const Value> s, const Pattern& p) {
  if (p.size() > s.size()) {
    return false;
  }
  std::vector<std::size_t> picked;
  picked.reserve(p.size());
  return extend_occurrence(s, p.values(), picked, 0, std::nullopt);
}

bool contains_pattern_ending_at_last(std::span<const Value> s, const Pattern& p) {
  if (s.empty() || p.size() > s.size()) {
    return false;
  }
  if (p.size() == 1) {
    return true;
  }
  const auto pattern = p.values();
  std::vector<std::size_t> picked;
  picked.reserve(p.size());
  return extend_occurrence(s.first(s.size() - 1), pattern.first(pattern.size() - 1), picked, 0,
                           Anchor{s.back(), pattern.back()});
}

bool avoids_all(std::span<const Value> s, const PatternSet& patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Pattern& p) { return contains_pattern(s, p); });
}

std::size_t forb_direct(std::span<const Value> s, const PatternSet& patterns) {
  if (s.empty()) {
    return 0;
  }
  const Value max = *std::max_element(s.begin(), s.end());
  if (!avoids_all(s, patterns)) {
    return static_cast<std::size_t>(max) + 1;
  }
  auto ends_in_pattern = [&](std::span<const Value> t) {
    return std::any_of(patterns.begin(), patterns.end(), [&](const Pattern& p) {
      return contains_pattern_ending_at_last(t, p);
    });
  };

  Sequence extended(s.begin(), s.end());
  extended.push_back(max + 1);
  const bool witness_completes = ends_in_pattern(extended);
  extended.push_back(0);
  std::size_t count = 0;
  for (Value v = 0; v <= max; ++v) {
    extended.back() = v;
    if (witness_completes || ends_in_pattern(extended)) {
      ++count;
    }
  }
  return count;
}

std::size_t forb_210(std::span<const Value> s) {
  if (s.empty()) {
    return 0;
  }
  Value q = 0;
  Value running_max = s.front();
  for (Value v : s.subspan(1)) {
    if (running_max > v) {
      q = std::max(q, v);
    }
    running_max = std::max(running_max, v);
  }
  return q + distinct_at_least(s, q);
}

std::size_t forb_110(std::span<const Value> s) {
  if (s.empty()) {
    return 0;
  }
  std::set<Value> seen;
  Value q = 0;
  for (Value v : s) {
    if (!seen.insert(v).second) {
      q = std::max(q, v);
    }
  }
  return q + distinct_at_least(s, q);
}

SequenceStats sequence_stats(std::span<const Value> s) {
  SequenceStats stats;
  if (!s.empty()) {
    stats.max = *std::max_element(s.begin(), s.end());
  }
  stats.distinct = std::set<Value>(s.begin(), s.end()).size();
  return stats;
}

std::string to_string(std::span<const Value> s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) {
      out.push_back(',');
    }
    out += std::to_string(s[i]);
  }
  out.push_back(')');
  return out;
}

}  // namespace invseq
