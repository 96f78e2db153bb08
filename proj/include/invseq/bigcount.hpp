#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace invseq {

__extension__ using UInt128 = unsigned __int128;

/// Exact nonnegative counts of unbounded magnitude.
using BigCount = mpz_class;

std::string to_decimal(const BigCount& value);

/// Parses a canonical decimal string (digits only). Throws ParseError.
BigCount parse_decimal(std::string_view text);

// Arithmetic policies for the table builders. Builders only add and multiply,
// so the same code evaluates exactly or modulo a user-supplied modulus.

struct ExactArithmetic {
  using value_type = BigCount;

  value_type from_uint(std::uint64_t v) const { return BigCount(static_cast<unsigned long>(v)); }
  value_type reduce(const BigCount& v) const { return v; }
  void add(value_type& acc, const value_type& x) const { acc += x; }
  void sub(value_type& acc, const value_type& x) const { acc -= x; }
  void add_product(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  bool is_zero(const value_type& v) const { return sgn(v) == 0; }
  std::string to_string(const value_type& v) const { return to_decimal(v); }
};

struct ModularArithmetic {
  using value_type = std::uint64_t;

  explicit ModularArithmetic(std::uint64_t modulus) : modulus(modulus) {
    if (modulus < 2) {
      throw std::invalid_argument("modulus must be at least 2");
    }
  }

  value_type from_uint(std::uint64_t v) const { return v % modulus; }
  value_type reduce(const BigCount& v) const {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(modulus));
  }
  void add(value_type& acc, const value_type& x) const {
    acc += x;
    if (acc >= modulus || acc < x) {
      acc -= modulus;
    }
  }
  void sub(value_type& acc, const value_type& x) const {
    acc = acc >= x ? acc - x : acc + (modulus - x);
  }
  void add_product(value_type& acc, const value_type& a, const value_type& b) const {
    const auto product = static_cast<UInt128>(a) * b;
    add(acc, static_cast<value_type>(product % modulus));
  }
  bool is_zero(const value_type& v) const { return v == 0; }
  std::string to_string(const value_type& v) const { return std::to_string(v); }

  std::uint64_t modulus;
};

}  // namespace invseq
