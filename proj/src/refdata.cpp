#include "invseq/refdata.hpp"

#include <algorithm>
#include <sstream>

#include "invseq/errors.hpp"

namespace invseq {

namespace {

struct RawRow {
  std::vector<const char*> pattern_sets;
  std::vector<const char*> terms;
  const char* source;
  const char* oeis_id;
};

const std::vector<RawRow>& raw_rows() {
  static const std::vector<RawRow> rows = {
      // Single patterns of length 3.
      {{"000"}, {"1", "2", "5", "16", "61", "272", "1385"}, "single-pattern", "A000111"},
      {{"001"}, {"1", "2", "4", "8", "16", "32", "64"}, "single-pattern", "A000079"},
      {{"011"}, {"1", "2", "5", "15", "52", "203", "877"}, "single-pattern", "A000110"},
      {{"012"}, {"1", "2", "5", "13", "34", "89", "233"}, "single-pattern", "A001519"},
      {{"021"}, {"1", "2", "6", "22", "90", "394", "1806"}, "single-pattern", "A006318"},
      {{"110", "101"}, {"1", "2", "6", "23", "105", "549", "3207"}, "single-pattern", "A113227"},
      {{"102"}, {"1", "2", "6", "22", "89", "381", "1694"}, "single-pattern", "A200753"},
      {{"120"}, {"1", "2", "6", "23", "103", "515", "2803"}, "single-pattern", "A263778"},
      {{"210", "201"}, {"1", "2", "6", "24", "118", "674", "4306"}, "single-pattern", "A263777"},
      {{"100"}, {"1", "2", "6", "23", "106", "565", "3399"}, "single-pattern", "A263780"},
      {{"010"}, {"1", "2", "5", "15", "53", "215", "979"}, "single-pattern", "A263779"},
      // 010 together with one other pattern of length 3.
      {{"010,001"}, {"1", "2", "3", "4", "5", "6", "7"}, "pair-with-010", "A000027"},
      {{"010,011"}, {"1", "2", "4", "9", "23", "66", "210"}, "pair-with-010", "A026898"},
      {{"010,012"}, {"1", "2", "4", "8", "16", "32", "64"}, "pair-with-010", "A000079"},
      {{"010,021"}, {"1", "2", "5", "14", "42", "132", "429"}, "pair-with-010", "A000108"},
      {{"010,100"}, {"1", "2", "5", "15", "52", "203", "877"}, "pair-with-010", "A000110"},
      {{"010,101"}, {"1", "2", "5", "15", "52", "203", "877"}, "pair-with-010", "A000110"},
      {{"010,000"}, {"1", "2", "4", "10", "29", "95", "345"}, "pair-with-010", "A279552"},
      {{"010,120"}, {"1", "2", "5", "15", "52", "201", "845"}, "pair-with-010", "A279559"},
      {{"010,210", "010,201"}, {"1", "2", "5", "15", "53", "214", "958"}, "pair-with-010",
       "A360052"},
      {{"010,110"}, {"1", "2", "5", "15", "52", "201", "847"}, "pair-with-010", "A359191"},
      {{"010,102"}, {"1", "2", "5", "15", "51", "186", "707"}, "pair-with-010", ""},
      // 010, first 14 terms.
      {{"010"},
       {"1", "2", "5", "15", "53", "215", "979", "4922", "26992", "159958", "1016784", "6890723",
        "49534501", "376081602"},
       "extended-010",
       "A263779"},
  };
  return rows;
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(separator, start);
    parts.push_back(text.substr(start, at == text.npos ? text.npos : at - start));
    if (at == text.npos) {
      return parts;
    }
    start = at + 1;
  }
}

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == text.npos) {
    return {};
  }
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

}  // namespace

bool ReferenceRow::covers(const PatternSet& patterns) const {
  return std::find(pattern_sets.begin(), pattern_sets.end(), patterns) != pattern_sets.end();
}

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = [] {
    std::vector<ReferenceRow> out;
    for (const RawRow& raw : raw_rows()) {
      ReferenceRow row;
      for (const char* set : raw.pattern_sets) {
        row.pattern_sets.push_back(PatternSet::parse(set));
      }
      for (const char* term : raw.terms) {
        row.terms.push_back(parse_decimal(term));
      }
      row.source = raw.source;
      row.oeis_id = raw.oeis_id;
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

const ReferenceRow* find_reference(const PatternSet& patterns) {
  const ReferenceRow* best = nullptr;
  for (const ReferenceRow& row : reference_rows()) {
    if (row.covers(patterns) && (best == nullptr || row.terms.size() > best->terms.size())) {
      best = &row;
    }
  }
  return best;
}

CheckReport check(const PatternSet& patterns, std::span<const BigCount> computed) {
  const ReferenceRow* row = find_reference(patterns);
  if (row == nullptr) {
    throw NoReferenceDataError("no reference data for pattern set " + patterns.to_string());
  }
  CheckReport report;
  report.compared = std::min(computed.size(), row->terms.size());
  for (std::size_t i = 0; i < report.compared; ++i) {
    const bool match = computed[i] == row->terms[i];
    report.term_matches.push_back(match);
    if (!match && !report.first_mismatch) {
      report.first_mismatch = i + 1;
    }
  }
  return report;
}

std::string format_reference_file(std::span<const ReferenceRow> rows) {
  std::ostringstream out;
  for (const ReferenceRow& row : rows) {
    for (std::size_t s = 0; s < row.pattern_sets.size(); ++s) {
      out << (s > 0 ? "|" : "") << row.pattern_sets[s].to_string();
    }
    out << ':';
    for (std::size_t t = 0; t < row.terms.size(); ++t) {
      out << (t > 0 ? "," : "") << to_decimal(row.terms[t]);
    }
    out << "  # " << row.source;
    if (!row.oeis_id.empty()) {
      out << ' ' << row.oeis_id;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<ReferenceRow> parse_reference_file(std::string_view text) {
  std::vector<ReferenceRow> rows;
  std::size_t line_number = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_number;
    line = trim(line);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto fail = [&](const std::string& why) {
      throw ParseError("reference data line " + std::to_string(line_number) + ": " + why);
    };
    ReferenceRow row;
    const std::size_t hash = line.find('#');
    if (hash != line.npos) {
      std::istringstream meta{std::string(line.substr(hash + 1))};
      meta >> row.source >> row.oeis_id;
      line = trim(line.substr(0, hash));
    }
    const std::size_t colon = line.find(':');
    if (colon == line.npos) {
      fail("missing ':'");
    }
    try {
      for (std::string_view set : split(trim(line.substr(0, colon)), '|')) {
        row.pattern_sets.push_back(PatternSet::parse(trim(set)));
      }
      for (std::string_view term : split(trim(line.substr(colon + 1)), ',')) {
        row.terms.push_back(parse_decimal(trim(term)));
      }
    } catch (const ParseError& e) {
      fail(e.what());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::uint64_t reference_checksum() {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_reference_file(reference_rows())) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace invseq
