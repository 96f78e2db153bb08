#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "invseq/bigcount.hpp"

namespace invseq {

enum class Family { b, d, g, i, l, h, h1, h2, j, k, a, c, e, f, stirling, binomial };

std::string to_string(Family family);

enum class PrefixAxis {
  none,
  length,  // cumulative over the first index
  row,     // cumulative over the second index
};

/// Memoized counts indexed by (length, x, y), stored jagged over the support
/// region: layer n has rows x in [0, row_count(n)) and row x has
/// row_width(n, x) cells. Rank-2 families use y = 0 only.
///
/// Reads outside the stored region return zero, so summation bounds can be
/// copied verbatim from the formulas.
///
/// The optional prefix layer has the same shape as the cells:
///   PrefixAxis::row:    prefix(n, x, y) = sum_{u <= x} cell(n, u, y)
///   PrefixAxis::length: prefix(n, x, y) = sum_{u <= n} cell(u, x, y)
/// For the row axis this relies on row widths being nondecreasing in x
/// (every builder here has that shape).
template <class T>
class BasicCountTable {
 public:
  BasicCountTable(Family family, std::size_t rank, PrefixAxis axis = PrefixAxis::none)
      : family_(family), rank_(rank), axis_(axis) {}

  Family family() const noexcept { return family_; }
  std::size_t rank() const noexcept { return rank_; }
  PrefixAxis prefix_axis() const noexcept { return axis_; }

  std::size_t layer_count() const noexcept { return cells_.size(); }
  std::size_t row_count(std::size_t n) const noexcept {
    return n < cells_.size() ? cells_[n].size() : 0;
  }
  std::size_t row_width(std::size_t n, std::size_t x) const noexcept {
    return x < row_count(n) ? cells_[n][x].size() : 0;
  }
  std::size_t cell_count() const noexcept {
    std::size_t total = 0;
    for (const auto& layer : cells_) {
      for (const auto& row : layer) {
        total += row.size();
      }
    }
    return total;
  }

  const T& operator()(std::size_t n, std::size_t x, std::size_t y = 0) const noexcept {
    return lookup(cells_, n, x, y);
  }

  const T& prefix(std::size_t n, std::size_t x, std::size_t y = 0) const {
    if (axis_ == PrefixAxis::none) {
      throw std::logic_error("table " + to_string(family_) + " has no prefix layer");
    }
    return lookup(prefix_, n, x, y);
  }

  // Builder interface. Layers are appended in order of n and sealed once all
  // of their cells are final; sealing fills the prefix layer.

  void add_layer(std::span<const std::size_t> widths) {
    std::vector<std::vector<T>> layer;
    layer.reserve(widths.size());
    for (std::size_t w : widths) {
      layer.emplace_back(w, zero_);
    }
    if (axis_ != PrefixAxis::none) {
      prefix_.push_back(layer);
    }
    cells_.push_back(std::move(layer));
  }

  T& cell(std::size_t n, std::size_t x, std::size_t y = 0) { return cells_.at(n).at(x).at(y); }

  template <class Arithmetic>
  void seal_layer(std::size_t n, const Arithmetic& arith) {
    if (axis_ == PrefixAxis::none) {
      return;
    }
    auto& layer = prefix_.at(n);
    for (std::size_t x = 0; x < layer.size(); ++x) {
      for (std::size_t y = 0; y < layer[x].size(); ++y) {
        T value = cells_[n][x][y];
        if (axis_ == PrefixAxis::row && x > 0) {
          arith.add(value, lookup(prefix_, n, x - 1, y));
        } else if (axis_ == PrefixAxis::length && n > 0) {
          arith.add(value, lookup(prefix_, n - 1, x, y));
        }
        layer[x][y] = std::move(value);
      }
    }
  }

 private:
  using Storage = std::vector<std::vector<std::vector<T>>>;

  const T& lookup(const Storage& storage, std::size_t n, std::size_t x, std::size_t y) const noexcept {
    if (n < storage.size() && x < storage[n].size() && y < storage[n][x].size()) {
      return storage[n][x][y];
    }
    return zero_;
  }

  Family family_;
  std::size_t rank_;
  PrefixAxis axis_;
  Storage cells_;
  Storage prefix_;
  T zero_{};
};

using CountTable = BasicCountTable<BigCount>;
using ModularCountTable = BasicCountTable<std::uint64_t>;

}  // namespace invseq
