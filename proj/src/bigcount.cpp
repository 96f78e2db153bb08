#include "invseq/bigcount.hpp"

#include <algorithm>

#include "invseq/errors.hpp"

namespace invseq {

std::string to_decimal(const BigCount& value) { return value.get_str(10); }

BigCount parse_decimal(std::string_view text) {
  const bool digits_only =
      !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!digits_only) {
    throw ParseError("not a decimal count: '" + std::string(text) + "'");
  }
  return BigCount(std::string(text), 10);
}

}  // namespace invseq
