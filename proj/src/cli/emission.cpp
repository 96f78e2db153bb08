#include "cli/emission.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "invseq/errors.hpp"

namespace invseq::cli {

namespace {

bool is_numeral(std::string_view text) {
  return !text.empty() && text.size() < 19 &&
         std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == line.npos ? line.npos : comma - start));
    if (comma == line.npos) {
      return out;
    }
    start = comma + 1;
  }
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == text.npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (!line.empty()) {
      lines.push_back(line);
    }
    start = end + 1;
  }
  return lines;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "human") return Format::human;
  if (name == "csv") return Format::csv;
  if (name == "jsonl") return Format::jsonl;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

void write_emission(std::ostream& out, const Emission& emission, Format format) {
  if (emission.rows.empty()) {
    return;
  }
  const auto& columns = emission.columns;
  switch (format) {
    case Format::human: {
      std::vector<std::size_t> widths(columns.size());
      for (std::size_t c = 0; c < columns.size(); ++c) {
        widths[c] = columns[c].size();
        for (const auto& row : emission.rows) {
          widths[c] = std::max(widths[c], row[c].size());
        }
      }
      auto emit_line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c > 0) {
            out << "  ";
          }
          out << std::string(widths[c] - cells[c].size(), ' ') << cells[c];
        }
        out << '\n';
      };
      emit_line(columns);
      for (const auto& row : emission.rows) {
        emit_line(row);
      }
      break;
    }
    case Format::csv: {
      auto emit_line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          out << (c > 0 ? "," : "") << cells[c];
        }
        out << '\n';
      };
      emit_line(columns);
      for (const auto& row : emission.rows) {
        emit_line(row);
      }
      break;
    }
    case Format::jsonl: {
      for (const auto& row : emission.rows) {
        nlohmann::ordered_json object = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < columns.size(); ++c) {
          if (columns[c] != "value" && is_numeral(row[c])) {
            object[columns[c]] = std::stoull(row[c]);
          } else {
            object[columns[c]] = row[c];
          }
        }
        out << object.dump() << '\n';
      }
      break;
    }
  }
}

Emission parse_emission(std::string_view text, Format format) {
  Emission emission;
  const auto lines = lines_of(text);
  switch (format) {
    case Format::human:
      throw ParseError("the human format is not machine-readable");
    case Format::csv:
      if (lines.empty()) {
        return emission;
      }
      emission.columns = split_csv(lines.front());
      for (std::size_t i = 1; i < lines.size(); ++i) {
        auto row = split_csv(lines[i]);
        if (row.size() != emission.columns.size()) {
          throw ParseError("csv row " + std::to_string(i) + " has the wrong number of fields");
        }
        emission.rows.push_back(std::move(row));
      }
      return emission;
    case Format::jsonl:
      for (std::string_view line : lines) {
        nlohmann::ordered_json object;
        try {
          object = nlohmann::ordered_json::parse(line);
        } catch (const nlohmann::json::exception& e) {
          throw ParseError(std::string("jsonl: ") + e.what());
        }
        std::vector<std::string> columns;
        std::vector<std::string> row;
        for (const auto& [key, value] : object.items()) {
          columns.push_back(key);
          row.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
        if (emission.columns.empty()) {
          emission.columns = std::move(columns);
        } else if (columns != emission.columns) {
          throw ParseError("jsonl records have inconsistent keys");
        }
        emission.rows.push_back(std::move(row));
      }
      return emission;
  }
  return emission;
}

}  // namespace invseq::cli
