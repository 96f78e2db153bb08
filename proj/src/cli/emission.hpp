#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace invseq::cli {

enum class Format { human, csv, jsonl };

/// Accepts "human", "csv" or "jsonl". Throws ParseError.
Format parse_format(std::string_view name);

/// A block of output records: named columns, every cell already rendered as
/// text. Counts are exact decimal strings.
struct Emission {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const Emission&) const = default;
};

/// Writes nothing when there are no rows.
///   human: right-aligned columns under a header line
///   csv:   header line, then comma-separated rows
///   jsonl: one object per row; "value" and non-numeric cells are JSON
///          strings, everything else is a JSON number
void write_emission(std::ostream& out, const Emission& emission, Format format);

/// Inverse of write_emission for the csv and jsonl formats.
/// Throws ParseError on malformed input or for Format::human.
Emission parse_emission(std::string_view text, Format format);

}  // namespace invseq::cli
