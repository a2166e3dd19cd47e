#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "pcc/big_count.hpp"
#include "pcc/shrink.hpp"
#include "pcc/symbol_map.hpp"
#include "pcc/word.hpp"

namespace pcc {

struct WindowPair {
  std::size_t first;   // i
  std::size_t second;  // j > i
  bool operator==(const WindowPair&) const = default;
};

// Lexicographically smallest (i, j), i < j, j >= i + min_gap, with
// alpha(x[i, i+l)) == x[j, j+l). Windows are located through a
// content-sorted index, O(n log n * l).
std::optional<WindowPair> find_window_pair(const Word& x, const WindowMap& alpha,
                                           std::size_t min_gap = 1);

// Repeat-free (alpha = identity) or symbolwise repeat-free shrink: drops
// the window at j and appends i and j, each in ceil(log_q n) symbols.
// Requires l >= 2 ceil(log_q n) + 1 + slack and a symbolwise alpha.
ShrinkStep rf_shrink(Alphabet q, std::size_t n, std::size_t ell,
                     const std::optional<WindowMap>& alpha = std::nullopt,
                     std::size_t slack = 0);

// Relaxed secondary structure: no window pair with RC(x_i) = x_j, j >= i + l.
ShrinkStep rss_shrink(std::size_t n, std::size_t ell, std::size_t slack = 0,
                      const SymbolFunction& complement = SymbolFunction::dna_complement());

// Full secondary structure over q = 4: intersection of the relaxed
// constraint at l = 2L + 2 with the reverse-complement palindrome
// constraint at l = 2L + 4, L = ceil(log_4 n).
CodecSpec build_ss(std::size_t n);

// Sum_{w <= wmax} C(n, w).
BigCount count_weight_le(std::size_t n, std::size_t wmax);
// Rank of x among binary words of weight <= wmax (weight, then lexicographic).
BigCount rank_bounded(const Word& x, std::size_t wmax);
Word unrank_bounded(const BigCount& rank, std::size_t n, std::size_t wmax);

// Inclusive weight interval [ceil(n/2 - sqrt n), floor(n/2 + sqrt n)],
// computed with integer arithmetic only.
struct WeightBounds {
  std::size_t lo;
  std::size_t hi;
};
WeightBounds ab_weight_bounds(std::size_t n);

// (AB-H shrink, AB-L shrink), both with slack 1, for binary words of length n > 4.
std::pair<ShrinkStep, ShrinkStep> ab_shrink_pair(std::size_t n);
CodecSpec build_ab(std::size_t n);

}  // namespace pcc
