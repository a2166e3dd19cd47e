#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pcc/big_count.hpp"
#include "pcc/word.hpp"

namespace pcc {

// Exact binomial coefficients C(n, k) for 0 <= k <= n <= max_n.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t max_n);

  const BigCount& operator()(std::size_t n, std::size_t k) const;
  std::size_t max_n() const { return rows_.size() - 1; }

 private:
  std::vector<std::vector<BigCount>> rows_;
};

// Enumerative coder for binary words of a fixed length whose Hamming
// weight lies in a given set.
//
// Order: weight ascending, then lexicographic (0 < 1) within a weight class.
// rank/unrank are mutually inverse bijections onto [0, size()).
class WeightClassRanker {
 public:
  WeightClassRanker(std::size_t length, std::vector<std::size_t> weights);

  std::size_t length() const { return length_; }
  const BigCount& size() const { return total_; }
  bool contains(std::span<const Symbol> bits) const;

  BigCount rank(std::span<const Symbol> bits) const;
  Word unrank(const BigCount& rank) const;

 private:
  std::size_t length_;
  std::vector<std::size_t> weights_;
  std::vector<BigCount> offsets_;  // offsets_[i] = words of weight < weights_[i] in the set
  std::vector<bool> allowed_;
  BigCount total_;
  BinomialTable binom_;
};

}  // namespace pcc
