#include "invseq/recurrences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "invseq/errors.hpp"

namespace invseq {

namespace {

void check_bound(std::size_t value, const RecurrenceLimits& limits, const char* what) {
  if (value > limits.max_length) {
    throw ResourceLimitError(std::string("table ") + what + " bound " + std::to_string(value) +
                             " exceeds ceiling " + std::to_string(limits.max_length));
  }
}

std::vector<std::size_t> uniform_widths(std::size_t rows, std::size_t width) {
  return std::vector<std::size_t>(rows, width);
}

// Rows m = 0..n-1 with x = 0..m+1: the support of every (n, m, x)-refined
// inversion-sequence table.
std::vector<std::size_t> triangular_widths(std::size_t n) {
  std::vector<std::size_t> widths(n);
  for (std::size_t m = 0; m < n; ++m) {
    widths[m] = m + 2;
  }
  return widths;
}

template <class A>
TableOf<A> rectangular_word_table(Family family, std::size_t n_max, std::size_t k_max) {
  TableOf<A> table(family, 2);
  const auto widths = uniform_widths(k_max + 1, 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    table.add_layer(widths);
  }
  return table;
}

BigCount closed_form_f(std::size_t n, std::size_t k) {
  if (k == 0) {
    return n == 0 ? BigCount(1) : BigCount(0);
  }
  if (k > n) {
    return 0;
  }
  BigCount left;
  BigCount right;
  mpz_bin_uiui(left.get_mpz_t(), n - 1, k - 1);
  mpz_bin_uiui(right.get_mpz_t(), n + k, k - 1);
  BigCount product = left * right;
  mpz_divexact_ui(product.get_mpz_t(), product.get_mpz_t(), k);
  return product;
}

// Shared shape of the (m, d)-refined tables for {010} and {010,000}.
// `word_count(L, r)` counts the right part beta: words of length L on r
// letters, all used, starting with their maximum. The all-zero sequence is
// the only member with maximum 0, and it survives up to length
// `zero_run_limit`.
template <class A, class WordCount>
TableOf<A> build_distinct_refined(Family family, std::size_t n_max, const A& arith,
                                  const RecurrenceLimits& limits, WordCount&& word_count,
                                  std::size_t zero_run_limit) {
  check_bound(n_max, limits, to_string(family).c_str());
  const auto binom = build_table_binomial(n_max, arith, limits);
  const auto one = arith.from_uint(1);

  TableOf<A> table(family, 3, PrefixAxis::row);
  table.add_layer({});
  for (std::size_t n = 1; n <= n_max; ++n) {
    table.add_layer(triangular_widths(n));
    if (n <= zero_run_limit) {
      table.cell(n, 0, 1) = one;
    }
    for (std::size_t m = 1; m < n; ++m) {
      for (std::size_t d = 1; d <= m + 1; ++d) {
        typename A::value_type value{};
        // i = 0 contributes nothing: alpha is nonempty because p >= m+1 >= 2.
        for (std::size_t i = 1; i < d; ++i) {
          const auto& choose = binom(m - i, d - i - 1);
          if (arith.is_zero(choose)) {
            continue;
          }
          typename A::value_type inner{};
          for (std::size_t p = m + 1; p <= n; ++p) {
            const auto& left = table.prefix(p - 1, m - 1, i);
            if (arith.is_zero(left)) {
              continue;
            }
            const auto& right = word_count(n - p + 1, d - i);
            if (!arith.is_zero(right)) {
              arith.add_product(inner, right, left);
            }
          }
          arith.add_product(value, choose, inner);
        }
        table.cell(n, m, d) = std::move(value);
      }
    }
    table.seal_layer(n, arith);
  }
  return table;
}

// Shared shape of the (m, f)-refined tables for {010,210} and {010,110}.
// `gamma_count(L, m, i, f)` counts the part to the right of the left-most
// maximum, given that alpha forbids i values.
template <class A, class GammaCount>
TableOf<A> build_forb_refined(Family family, std::size_t n_max, const A& arith,
                              GammaCount&& gamma_count) {
  const auto one = arith.from_uint(1);
  TableOf<A> table(family, 3, PrefixAxis::row);
  table.add_layer({});
  for (std::size_t n = 1; n <= n_max; ++n) {
    table.add_layer(triangular_widths(n));
    table.cell(n, 0, 1) = one;
    for (std::size_t m = 1; m < n; ++m) {
      for (std::size_t f = 1; f <= m + 1; ++f) {
        typename A::value_type value{};
        for (std::size_t p = m + 1; p <= n; ++p) {
          // Nonempty alpha forbids at least one value, so i starts at 1.
          for (std::size_t i = 1; i < f; ++i) {
            const auto& left = table.prefix(p - 1, m - 1, i);
            if (arith.is_zero(left)) {
              continue;
            }
            const auto right = gamma_count(n - p, m, i, f);
            if (!arith.is_zero(right)) {
              arith.add_product(value, left, right);
            }
          }
        }
        table.cell(n, m, f) = std::move(value);
      }
    }
    table.seal_layer(n, arith);
  }
  return table;
}

// Right factor shared by the {010,110} word and sequence recurrences:
//   j(L, m-i, f-i-1) + [f == m+1] * sum_{l=0}^{L-1} k(l, m-i)
template <class T, class A>
T gamma_110(const JKTablesT<T>& jk, std::size_t length, std::size_t m, std::size_t i,
            std::size_t f, const A& arith) {
  T value = jk.j(length, m - i, f - i - 1);
  if (f == m + 1 && length > 0) {
    arith.add(value, jk.k.prefix(length - 1, m - i));
  }
  return value;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::b: return "b";
    case Family::d: return "d";
    case Family::g: return "g";
    case Family::i: return "i";
    case Family::l: return "l";
    case Family::h: return "h";
    case Family::h1: return "h1";
    case Family::h2: return "h2";
    case Family::j: return "j";
    case Family::k: return "k";
    case Family::a: return "a";
    case Family::c: return "c";
    case Family::e: return "e";
    case Family::f: return "f";
    case Family::stirling: return "stirling";
    case Family::binomial: return "binomial";
  }
  return "?";
}

template <class A>
TableOf<A> build_table_binomial(std::size_t n_max, const A& arith, const RecurrenceLimits& limits) {
  check_bound(n_max, limits, "binomial");
  TableOf<A> table(Family::binomial, 2);
  for (std::size_t n = 0; n <= n_max; ++n) {
    table.add_layer(uniform_widths(n + 1, 1));
    table.cell(n, 0) = arith.from_uint(1);
    for (std::size_t k = 1; k <= n; ++k) {
      auto value = table(n - 1, k - 1);
      arith.add(value, table(n - 1, k));
      table.cell(n, k) = std::move(value);
    }
  }
  return table;
}

template <class A>
TableOf<A> build_table_stirling(std::size_t n_max, const A& arith, const RecurrenceLimits& limits) {
  check_bound(n_max, limits, "stirling");
  TableOf<A> table(Family::stirling, 2);
  table.add_layer(uniform_widths(1, 1));
  table.cell(0, 0) = arith.from_uint(1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    table.add_layer(uniform_widths(n + 1, 1));
    const auto factor = arith.from_uint(n - 1);
    for (std::size_t k = 1; k <= n; ++k) {
      auto value = table(n - 1, k - 1);
      arith.add_product(value, factor, table(n - 1, k));
      table.cell(n, k) = std::move(value);
    }
  }
  return table;
}

template <class A>
TableOf<A> build_table_a(std::size_t n_max, std::size_t k_max, const A& arith,
                         const RecurrenceLimits& limits) {
  check_bound(k_max, limits, "a");
  const auto stirling = build_table_stirling(n_max, arith, limits);
  auto table = rectangular_word_table<A>(Family::a, n_max, k_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 1; k <= std::min(n, k_max); ++k) {
      table.cell(n, k) = stirling(n, n + 1 - k);
    }
  }
  return table;
}

template <class A>
TableOf<A> build_table_c(std::size_t n_max, std::size_t k_max, const A& arith,
                         const RecurrenceLimits& limits) {
  check_bound(n_max, limits, "c");
  check_bound(k_max, limits, "c");
  auto table = rectangular_word_table<A>(Family::c, n_max, k_max);
  const auto one = arith.from_uint(1);
  table.cell(0, 0) = one;
  for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 2); ++n) {
    if (k_max >= 1) {
      table.cell(n, 1) = one;
    }
  }
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto single = arith.from_uint(n - 1);
    const auto pair = arith.from_uint(n - 2);
    for (std::size_t k = 2; k <= k_max; ++k) {
      typename A::value_type value{};
      arith.add_product(value, single, table(n - 1, k - 1));
      arith.add_product(value, pair, table(n - 2, k - 1));
      table.cell(n, k) = std::move(value);
    }
  }
  return table;
}

template <class A>
TableOf<A> build_table_f(std::size_t n_max, std::size_t k_max, const A& arith,
                         const RecurrenceLimits& limits) {
  check_bound(n_max, limits, "f");
  check_bound(k_max, limits, "f");
  auto table = rectangular_word_table<A>(Family::f, n_max, k_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t k = 0; k <= k_max; ++k) {
      table.cell(n, k) = arith.reduce(closed_form_f(n, k));
    }
  }
  return table;
}

template <class A>
TableOf<A> build_table_e(std::size_t n_max, std::size_t k_max, const A& arith,
                         const RecurrenceLimits& limits) {
  const auto f = build_table_f(n_max, k_max, arith, limits);
  const auto binom = build_table_binomial(k_max, arith, limits);
  auto table = rectangular_word_table<A>(Family::e, n_max, k_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t k = 0; k <= k_max; ++k) {
      typename A::value_type value{};
      for (std::size_t d = 0; d <= k; ++d) {
        arith.add_product(value, binom(k, d), f(n, d));
      }
      table.cell(n, k) = std::move(value);
    }
  }
  return table;
}

template <class A>
HTablesT<typename A::value_type> build_table_h(std::size_t n_max, std::size_t k_max,
                                               const A& arith, const RecurrenceLimits& limits) {
  check_bound(n_max, limits, "h");
  check_bound(k_max, limits, "h");
  HTablesT<typename A::value_type> out{TableOf<A>(Family::h, 2, PrefixAxis::row),
                                       TableOf<A>(Family::h1, 2),
                                       TableOf<A>(Family::h2, 2)};
  const auto widths = uniform_widths(k_max + 1, 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.total.add_layer(widths);
    out.ending_infinity.add_layer(widths);
    out.ending_finite.add_layer(widths);
    if (n == 0) {
      out.total.cell(0, 0) = arith.from_uint(1);
      out.total.seal_layer(0, arith);
      continue;
    }
    for (std::size_t k = 0; k <= k_max; ++k) {
      // Last letter infinity: drop it.
      auto ending_infinity = out.total(n - 1, k);
      // Last letter k: the previous letter is k, infinity, or some i < k.
      auto ending_finite = out.ending_finite(n - 1, k);
      if (k > 0) {
        arith.add(ending_finite, out.total.prefix(n - 1, k - 1));
      }
      auto total = ending_infinity;
      arith.add(total, ending_finite);
      out.ending_infinity.cell(n, k) = std::move(ending_infinity);
      out.ending_finite.cell(n, k) = std::move(ending_finite);
      out.total.cell(n, k) = std::move(total);
    }
    out.total.seal_layer(n, arith);
  }
  return out;
}

template <class A>
JKTablesT<typename A::value_type> build_table_jk(std::size_t n_max, std::size_t k_max,
                                                 const A& arith, const RecurrenceLimits& limits) {
  check_bound(n_max, limits, "jk");
  check_bound(k_max, limits, "jk");
  JKTablesT<typename A::value_type> out{TableOf<A>(Family::j, 3),
                                        TableOf<A>(Family::k, 2, PrefixAxis::length)};
  auto& j = out.j;
  auto& k = out.k;

  std::vector<std::size_t> j_widths(k_max + 1);
  for (std::size_t alphabet = 0; alphabet <= k_max; ++alphabet) {
    j_widths[alphabet] = alphabet + 1;  // forb <= alphabet size
  }
  const auto k_widths = uniform_widths(k_max + 1, 1);
  const auto one = arith.from_uint(1);

  for (std::size_t n = 0; n <= n_max; ++n) {
    j.add_layer(j_widths);
    k.add_layer(k_widths);
    if (n == 0) {
      for (std::size_t alphabet = 0; alphabet <= k_max; ++alphabet) {
        j.cell(0, alphabet, 0) = one;
        k.cell(0, alphabet) = one;
      }
      k.seal_layer(0, arith);
      continue;
    }
    // The summand for maximum m does not depend on the alphabet size, so
    // j(n, alphabet, f) = j(n, alphabet-1, f) + [words with maximum alphabet-1].
    for (std::size_t alphabet = 1; alphabet <= k_max; ++alphabet) {
      const std::size_t m = alphabet - 1;
      typename A::value_type words{};
      for (std::size_t f = 0; f <= alphabet; ++f) {
        auto value = j(n, m, f);
        for (std::size_t p = 1; p <= n; ++p) {
          for (std::size_t i = 0; i < f; ++i) {
            const auto& left = j(p - 1, m, i);
            if (arith.is_zero(left)) {
              continue;
            }
            const auto right = gamma_110(out, n - p, m, i, f, arith);
            if (!arith.is_zero(right)) {
              arith.add_product(value, left, right);
            }
          }
        }
        arith.add(words, value);
        j.cell(n, alphabet, f) = std::move(value);
      }
      k.cell(n, alphabet) = std::move(words);
    }
    k.seal_layer(n, arith);
  }
  return out;
}

template <class A>
TableOf<A> build_table_b(std::size_t n_max, const A& arith, const RecurrenceLimits& limits) {
  const auto stirling = build_table_stirling(n_max, arith, limits);
  const typename A::value_type zero{};
  // 010-avoiding words of length L on r letters starting with the maximum:
  // Stirling(L, L+1-r).
  auto word_count = [&](std::size_t length, std::size_t letters) -> const typename A::value_type& {
    if (letters == 0 || letters > length) {
      return zero;
    }
    return stirling(length, length + 1 - letters);
  };
  return build_distinct_refined(Family::b, n_max, arith, limits, word_count,
                                static_cast<std::size_t>(-1));
}

template <class A>
TableOf<A> build_table_d(std::size_t n_max, const A& arith, const RecurrenceLimits& limits) {
  const auto c = build_table_c(n_max, n_max, arith, limits);
  auto word_count = [&](std::size_t length, std::size_t letters) -> const typename A::value_type& {
    return c(length, letters);
  };
  return build_distinct_refined(Family::d, n_max, arith, limits, word_count, 2);
}

template <class A>
TableOf<A> build_table_g(std::size_t n_max, const A& arith, const RecurrenceLimits& limits) {
  check_bound(n_max, limits, "g");
  const std::size_t word_bound = n_max > 0 ? n_max - 1 : 0;
  const auto e = build_table_e(word_bound, word_bound, arith, limits);
  const auto one = arith.from_uint(1);

  TableOf<A> table(Family::g, 2);
  table.add_layer({});
  for (std::size_t n = 1; n <= n_max; ++n) {
    table.add_layer(uniform_widths(n, 1));
    table.cell(n, 0) = one;
    for (std::size_t m = 1; m < n; ++m) {
      typename A::value_type value{};
      for (std::size_t p = m + 1; p <= n; ++p) {
        for (std::size_t j = 0; j < m; ++j) {
          const auto& left = table(p - 1, j);
          if (!arith.is_zero(left)) {
            arith.add_product(value, left, e(n - p, m - j));
          }
        }
      }
      table.cell(n, m) = std::move(value);
    }
  }
  return table;
}

template <class A>
TableOf<A> build_table_i(std::size_t n_max, const A& arith, const RecurrenceLimits& limits) {
  check_bound(n_max, limits, "i");
  const std::size_t word_bound = n_max > 0 ? n_max - 1 : 0;
  const auto h = build_table_h(word_bound, word_bound, arith, limits);
  auto gamma = [&](std::size_t length, std::size_t, std::size_t i, std::size_t f) {
    return h.total(length, f - i - 1);
  };
  return build_forb_refined(Family::i, n_max, arith, gamma);
}

template <class A>
TableOf<A> build_table_l(std::size_t n_max, const A& arith, const RecurrenceLimits& limits) {
  check_bound(n_max, limits, "l");
  const std::size_t word_bound = n_max > 0 ? n_max - 1 : 0;
  const auto jk = build_table_jk(word_bound, word_bound, arith, limits);
  auto gamma = [&](std::size_t length, std::size_t m, std::size_t i, std::size_t f) {
    return gamma_110(jk, length, m, i, f, arith);
  };
  return build_forb_refined(Family::l, n_max, arith, gamma);
}

#define INVSEQ_INSTANTIATE_BUILDERS(ARITH)                                                       \
  template TableOf<ARITH> build_table_binomial(std::size_t, const ARITH&,                       \
                                               const RecurrenceLimits&);                         \
  template TableOf<ARITH> build_table_stirling(std::size_t, const ARITH&,                       \
                                               const RecurrenceLimits&);                         \
  template TableOf<ARITH> build_table_a(std::size_t, std::size_t, const ARITH&,                 \
                                        const RecurrenceLimits&);                                \
  template TableOf<ARITH> build_table_c(std::size_t, std::size_t, const ARITH&,                 \
                                        const RecurrenceLimits&);                                \
  template TableOf<ARITH> build_table_f(std::size_t, std::size_t, const ARITH&,                 \
                                        const RecurrenceLimits&);                                \
  template TableOf<ARITH> build_table_e(std::size_t, std::size_t, const ARITH&,                 \
                                        const RecurrenceLimits&);                                \
  template HTablesT<ARITH::value_type> build_table_h(std::size_t, std::size_t, const ARITH&,    \
                                                     const RecurrenceLimits&);                   \
  template JKTablesT<ARITH::value_type> build_table_jk(std::size_t, std::size_t, const ARITH&,  \
                                                       const RecurrenceLimits&);                 \
  template TableOf<ARITH> build_table_b(std::size_t, const ARITH&, const RecurrenceLimits&);    \
  template TableOf<ARITH> build_table_d(std::size_t, const ARITH&, const RecurrenceLimits&);    \
  template TableOf<ARITH> build_table_g(std::size_t, const ARITH&, const RecurrenceLimits&);    \
  template TableOf<ARITH> build_table_i(std::size_t, const ARITH&, const RecurrenceLimits&);    \
  template TableOf<ARITH> build_table_l(std::size_t, const ARITH&, const RecurrenceLimits&);

INVSEQ_INSTANTIATE_BUILDERS(ExactArithmetic)
INVSEQ_INSTANTIATE_BUILDERS(ModularArithmetic)
#undef INVSEQ_INSTANTIATE_BUILDERS

BigCount binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigCount stirling1_unsigned(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  return build_table_stirling(n, ExactArithmetic{}, {n})(n, k);
}

BigCount count_a(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0 || k > n) {
    return 0;
  }
  return stirling1_unsigned(n, n + 1 - k);
}

BigCount count_c(std::size_t n, std::size_t k) {
  if (n > 2 * k) {
    return 0;
  }
  return build_table_c(n, k, ExactArithmetic{}, {std::max(n, k)})(n, k);
}

BigCount count_f(std::size_t n, std::size_t k) { return closed_form_f(n, k); }

BigCount count_e(std::size_t n, std::size_t k) {
  BigCount total = 0;
  for (std::size_t d = 0; d <= k; ++d) {
    total += binomial(k, d) * closed_form_f(n, d);
  }
  return total;
}

CountTable table_b(std::size_t n_max, const RecurrenceLimits& limits) {
  return build_table_b(n_max, ExactArithmetic{}, limits);
}
CountTable table_d(std::size_t n_max, const RecurrenceLimits& limits) {
  return build_table_d(n_max, ExactArithmetic{}, limits);
}
CountTable table_g(std::size_t n_max, const RecurrenceLimits& limits) {
  return build_table_g(n_max, ExactArithmetic{}, limits);
}
CountTable table_i(std::size_t n_max, const RecurrenceLimits& limits) {
  return build_table_i(n_max, ExactArithmetic{}, limits);
}
CountTable table_l(std::size_t n_max, const RecurrenceLimits& limits) {
  return build_table_l(n_max, ExactArithmetic{}, limits);
}
HTables table_h(std::size_t n_max, std::size_t k_max, const RecurrenceLimits& limits) {
  return build_table_h(n_max, k_max, ExactArithmetic{}, limits);
}
JKTables table_jk(std::size_t n_max, std::size_t k_max, const RecurrenceLimits& limits) {
  return build_table_jk(n_max, k_max, ExactArithmetic{}, limits);
}

BigCount layer_total(const CountTable& table, std::size_t n) {
  return layer_total(table, n, ExactArithmetic{});
}

CountTable build_sequence_table(Family family, std::size_t n_max, const RecurrenceLimits& limits) {
  switch (family) {
    case Family::b: return table_b(n_max, limits);
    case Family::d: return table_d(n_max, limits);
    case Family::g: return table_g(n_max, limits);
    case Family::i: return table_i(n_max, limits);
    case Family::l: return table_l(n_max, limits);
    default:
      throw std::invalid_argument("family " + to_string(family) +
                                  " is not an inversion-sequence table");
  }
}

std::vector<BigCount> series(Family family, std::size_t n_max, const RecurrenceLimits& limits) {
  const CountTable table = build_sequence_table(family, n_max, limits);
  std::vector<BigCount> out;
  out.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    out.push_back(layer_total(table, n));
  }
  return out;
}

std::optional<Family> solved_family(const PatternSet& patterns) {
  const std::string key = patterns.to_string();
  if (key == "010") return Family::b;
  if (key == "000,010") return Family::d;
  if (key == "010,120") return Family::g;
  if (key == "010,201" || key == "010,210") return Family::i;
  if (key == "010,110") return Family::l;
  return std::nullopt;
}

}  // namespace invseq
