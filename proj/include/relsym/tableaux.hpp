#pragma once

// Semistandard tableaux and Kostka numbers.
//
// Tableaux are grown one value at a time: all cells holding value v form a
// horizontal strip added to the shape built from values < v. Rows then
// weakly increase and columns strictly increase by construction.

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relsym/arith.hpp"
#include "relsym/partition.hpp"

namespace relsym {

class Tableau {
public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {}

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  /// Entry at row i, column j (0-based).
  int at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  /// Rows concatenated top to bottom.
  std::vector<int> row_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
  }

  bool is_semistandard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j > 0 && rows_[i][j - 1] > rows_[i][j]) return false;
        if (i > 0 && rows_[i - 1][j] >= rows_[i][j]) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

namespace detail {

/// Calls emit(next) for every shape `next` with cur ⊆ next ⊆ outer such that
/// next/cur is a horizontal strip of `cells` boxes.
template <typename Emit>
void horizontal_strips(const std::vector<int>& cur, const Partition& outer, int cells, Emit&& emit) {
  const std::size_t rows = static_cast<std::size_t>(outer.length());
  std::vector<int> next(cur);
  auto rec = [&](auto& self, std::size_t row, int left) -> void {
    if (left == 0) {
      emit(static_cast<const std::vector<int>&>(next));
      return;
    }
    if (row == rows) return;
    // a horizontal strip may not extend row `row` past the old end of the row above
    const int cap = std::min(outer[row], row == 0 ? outer[0] : cur[row - 1]);
    const int room = cap - cur[row];
    for (int add = std::min(room, left); add >= 0; --add) {
      next[row] = cur[row] + add;
      self(self, row + 1, left - add);
    }
    next[row] = cur[row];
  };
  rec(rec, 0, cells);
}

inline void check_content(const Partition& mu, std::span<const int> content) {
  long long total = 0;
  for (int c : content) {
    if (c < 0) throw InputError("tableau content must be non-negative");
    total += c;
  }
  if (total != mu.weight()) {
    throw InputError("tableau content sums to " + std::to_string(total) + " but shape " +
                     mu.to_string() + " has " + std::to_string(mu.weight()) + " cells");
  }
}

}  // namespace detail

/// All semistandard tableaux of shape mu in which value i+1 occurs content[i]
/// times, sorted by row word.
inline std::vector<Tableau> enumerate_ssyt(const Partition& mu, std::span<const int> content) {
  detail::check_content(mu, content);
  const std::size_t rows = static_cast<std::size_t>(mu.length());
  std::vector<Tableau> out;
  std::vector<std::vector<int>> fill(rows);
  for (std::size_t i = 0; i < rows; ++i) fill[i].assign(static_cast<std::size_t>(mu[i]), 0);

  auto rec = [&](auto& self, std::size_t value, const std::vector<int>& shape) -> void {
    if (value == content.size()) {
      if (shape == mu.parts() || (rows == 0)) out.emplace_back(mu, fill);
      return;
    }
    detail::horizontal_strips(shape, mu, content[value], [&](const std::vector<int>& next) {
      for (std::size_t r = 0; r < rows; ++r) {
        for (int c = shape[r]; c < next[r]; ++c) fill[r][static_cast<std::size_t>(c)] = static_cast<int>(value) + 1;
      }
      self(self, value + 1, next);
    });
  };
  rec(rec, 0, std::vector<int>(rows, 0));

  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.row_word() < b.row_word(); });
  return out;
}

inline std::vector<Tableau> enumerate_ssyt(const Partition& mu, std::initializer_list<int> content) {
  return enumerate_ssyt(mu, std::span<const int>(content.begin(), content.size()));
}

/// K_{mu,pi}: the number of semistandard tableaux of shape mu and content pi.
/// Counted through horizontal strips with memoization on the partial shape;
/// zero without search when mu does not dominate pi.
inline BigInt kostka(const Partition& mu, const Partition& pi) {
  if (mu.weight() != pi.weight()) {
    throw InputError("Kostka number needs equal weights, got " + mu.to_string() + " and " + pi.to_string());
  }
  if (!dominates(mu, pi)) return 0;
  const std::size_t rows = static_cast<std::size_t>(mu.length());
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;
  auto rec = [&](auto& self, std::size_t value, const std::vector<int>& shape) -> BigInt {
    if (value == static_cast<std::size_t>(pi.length())) return shape == mu.parts() ? 1 : 0;
    auto key = std::make_pair(value, shape);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    detail::horizontal_strips(shape, mu, pi[value],
                              [&](const std::vector<int>& next) { total += self(self, value + 1, next); });
    memo.emplace(std::move(key), total);
    return total;
  };
  return rec(rec, 0, std::vector<int>(rows, 0));
}

}  // namespace relsym
