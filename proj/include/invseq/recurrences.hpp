#pragma once

// Fast exact evaluation of the counting recurrences for pattern-avoiding
// inversion sequences and the word families their decompositions need.
//
// Every table is refined by the maximum m of a sequence and, where needed,
// by a second statistic (number of distinct values d, or the forbidden-value
// count f). Sequences are decomposed at the left-most occurrence of their
// maximum: sigma = alpha . m . gamma. The inner sum over the maximum j of
// alpha is served by a cumulative layer, see BasicCountTable.
//
// Builders are templated on an arithmetic policy (ExactArithmetic or
// ModularArithmetic) and explicitly instantiated for both.

#include <cstddef>
#include <optional>
#include <vector>

#include "invseq/bigcount.hpp"
#include "invseq/count_table.hpp"
#include "invseq/sequence.hpp"

namespace invseq {

struct RecurrenceLimits {
  std::size_t max_length = 200;
};

template <class Arithmetic>
using TableOf = BasicCountTable<typename Arithmetic::value_type>;

// Scalar word counts. Each call builds the triangle it needs.

BigCount binomial(std::size_t n, std::size_t k);

/// Permutations of n elements with k cycles.
BigCount stirling1_unsigned(std::size_t n, std::size_t k);

/// 010-avoiding words of length n using all of k letters, starting with the
/// largest one. Equals stirling1_unsigned(n, n+1-k); 0 when k > n.
BigCount count_a(std::size_t n, std::size_t k);

/// As count_a with 000 also avoided; 0 whenever n > 2k.
BigCount count_c(std::size_t n, std::size_t k);

/// {010,120}-avoiding words of length n using all of k letters:
/// binom(n-1,k-1) * binom(n+k,k-1) / k, with f(0,0) = 1 and f(n,0) = 0 for
/// n >= 1.
BigCount count_f(std::size_t n, std::size_t k);

/// {010,120}-avoiding words of length n over k letters:
/// sum_d binom(k,d) * count_f(n,d).
BigCount count_e(std::size_t n, std::size_t k);

// Word tables, rank 2, indexed (n, k) for 0 <= n <= n_max, 0 <= k <= k_max
// (stirling and binomial: 0 <= k <= n).

template <class Arithmetic>
TableOf<Arithmetic> build_table_binomial(std::size_t n_max, const Arithmetic& arith,
                                         const RecurrenceLimits& limits = {});
template <class Arithmetic>
TableOf<Arithmetic> build_table_stirling(std::size_t n_max, const Arithmetic& arith,
                                         const RecurrenceLimits& limits = {});
template <class Arithmetic>
TableOf<Arithmetic> build_table_a(std::size_t n_max, std::size_t k_max, const Arithmetic& arith,
                                  const RecurrenceLimits& limits = {});
template <class Arithmetic>
TableOf<Arithmetic> build_table_c(std::size_t n_max, std::size_t k_max, const Arithmetic& arith,
                                  const RecurrenceLimits& limits = {});
template <class Arithmetic>
TableOf<Arithmetic> build_table_f(std::size_t n_max, std::size_t k_max, const Arithmetic& arith,
                                  const RecurrenceLimits& limits = {});
template <class Arithmetic>
TableOf<Arithmetic> build_table_e(std::size_t n_max, std::size_t k_max, const Arithmetic& arith,
                                  const RecurrenceLimits& limits = {});

/// Words over {1..k} plus an infinity letter, 010-avoiding, whose finite
/// letters are nondecreasing with maximum k. Split by whether the last
/// letter is infinity. Base: h(0,0) = 1 is the empty word and belongs to
/// neither part.
template <class T>
struct HTablesT {
  BasicCountTable<T> total;            // prefix over k
  BasicCountTable<T> ending_infinity;  // h1
  BasicCountTable<T> ending_finite;    // h2
};

template <class Arithmetic>
HTablesT<typename Arithmetic::value_type> build_table_h(std::size_t n_max, std::size_t k_max,
                                                        const Arithmetic& arith,
                                                        const RecurrenceLimits& limits = {});

/// {010,110}-avoiding words over {0..k-1}: j(n,k,f) refined by forb, and the
/// unrefined k(n,k) = sum_f j(n,k,f) with a cumulative layer over length.
template <class T>
struct JKTablesT {
  BasicCountTable<T> j;
  BasicCountTable<T> k;
};

template <class Arithmetic>
JKTablesT<typename Arithmetic::value_type> build_table_jk(std::size_t n_max, std::size_t k_max,
                                                          const Arithmetic& arith,
                                                          const RecurrenceLimits& limits = {});

// Inversion-sequence tables, indexed (n, m, x) for 1 <= n <= n_max,
// 0 <= m < n, 0 <= x <= m+1. Layer 0 is empty.

/// 010-avoiding, refined by maximum m and number of distinct values d.
template <class Arithmetic>
TableOf<Arithmetic> build_table_b(std::size_t n_max, const Arithmetic& arith,
                                  const RecurrenceLimits& limits = {});

/// {010,000}-avoiding, refined by (m, d).
template <class Arithmetic>
TableOf<Arithmetic> build_table_d(std::size_t n_max, const Arithmetic& arith,
                                  const RecurrenceLimits& limits = {});

/// {010,120}-avoiding, refined by m only (rank 2).
template <class Arithmetic>
TableOf<Arithmetic> build_table_g(std::size_t n_max, const Arithmetic& arith,
                                  const RecurrenceLimits& limits = {});

/// {010,210}-avoiding, refined by (m, forb).
template <class Arithmetic>
TableOf<Arithmetic> build_table_i(std::size_t n_max, const Arithmetic& arith,
                                  const RecurrenceLimits& limits = {});

/// {010,110}-avoiding, refined by (m, forb).
template <class Arithmetic>
TableOf<Arithmetic> build_table_l(std::size_t n_max, const Arithmetic& arith,
                                  const RecurrenceLimits& limits = {});

#define INVSEQ_DECLARE_BUILDERS(ARITH)                                                          \
  extern template TableOf<ARITH> build_table_binomial(std::size_t, const ARITH&,               \
                                                      const RecurrenceLimits&);                 \
  extern template TableOf<ARITH> build_table_stirling(std::size_t, const ARITH&,               \
                                                      const RecurrenceLimits&);                 \
  extern template TableOf<ARITH> build_table_a(std::size_t, std::size_t, const ARITH&,         \
                                               const RecurrenceLimits&);                        \
  extern template TableOf<ARITH> build_table_c(std::size_t, std::size_t, const ARITH&,         \
                                               const RecurrenceLimits&);                        \
  extern template TableOf<ARITH> build_table_f(std::size_t, std::size_t, const ARITH&,         \
                                               const RecurrenceLimits&);                        \
  extern template TableOf<ARITH> build_table_e(std::size_t, std::size_t, const ARITH&,         \
                                               const RecurrenceLimits&);                        \
  extern template HTablesT<ARITH::value_type> build_table_h(std::size_t, std::size_t,          \
                                                            const ARITH&,                       \
                                                            const RecurrenceLimits&);           \
  extern template JKTablesT<ARITH::value_type> build_table_jk(std::size_t, std::size_t,        \
                                                              const ARITH&,                     \
                                                              const RecurrenceLimits&);         \
  extern template TableOf<ARITH> build_table_b(std::size_t, const ARITH&,                      \
                                               const RecurrenceLimits&);                        \
  extern template TableOf<ARITH> build_table_d(std::size_t, const ARITH&,                      \
                                               const RecurrenceLimits&);                        \
  extern template TableOf<ARITH> build_table_g(std::size_t, const ARITH&,                      \
                                               const RecurrenceLimits&);                        \
  extern template TableOf<ARITH> build_table_i(std::size_t, const ARITH&,                      \
                                               const RecurrenceLimits&);                        \
  extern template TableOf<ARITH> build_table_l(std::size_t, const ARITH&,                      \
                                               const RecurrenceLimits&);

INVSEQ_DECLARE_BUILDERS(ExactArithmetic)
INVSEQ_DECLARE_BUILDERS(ModularArithmetic)
#undef INVSEQ_DECLARE_BUILDERS

// Exact convenience wrappers.

using HTables = HTablesT<BigCount>;
using JKTables = JKTablesT<BigCount>;

CountTable table_b(std::size_t n_max, const RecurrenceLimits& limits = {});
CountTable table_d(std::size_t n_max, const RecurrenceLimits& limits = {});
CountTable table_g(std::size_t n_max, const RecurrenceLimits& limits = {});
CountTable table_i(std::size_t n_max, const RecurrenceLimits& limits = {});
CountTable table_l(std::size_t n_max, const RecurrenceLimits& limits = {});
HTables table_h(std::size_t n_max, std::size_t k_max, const RecurrenceLimits& limits = {});
JKTables table_jk(std::size_t n_max, std::size_t k_max, const RecurrenceLimits& limits = {});

/// Sum of every cell of layer n.
template <class T, class Arithmetic>
T layer_total(const BasicCountTable<T>& table, std::size_t n, const Arithmetic& arith) {
  T total{};
  for (std::size_t x = 0; x < table.row_count(n); ++x) {
    for (std::size_t y = 0; y < table.row_width(n, x); ++y) {
      arith.add(total, table(n, x, y));
    }
  }
  return total;
}

BigCount layer_total(const CountTable& table, std::size_t n);

/// The inversion-sequence table for `family` (one of b, d, g, i, l).
/// Throws std::invalid_argument for any other family.
CountTable build_sequence_table(Family family, std::size_t n_max,
                                const RecurrenceLimits& limits = {});

/// Counting sequence #I_n(P) for n = 1..n_max from the table of `family`.
std::vector<BigCount> series(Family family, std::size_t n_max,
                             const RecurrenceLimits& limits = {});

/// The table family whose recurrence counts I_n(P), if any. {010,201} maps
/// to the {010,210} table (the two classes are Wilf-equivalent).
std::optional<Family> solved_family(const PatternSet& patterns);

}  // namespace invseq
