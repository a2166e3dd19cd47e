#include "pcc/enumerative.hpp"

#include <algorithm>
#include <string>

#include "pcc/errors.hpp"

namespace pcc {

BinomialTable::BinomialTable(std::size_t max_n) : rows_(max_n + 1) {
  for (std::size_t n = 0; n <= max_n; ++n) {
    rows_[n].assign(n + 1, BigCount(1));
    for (std::size_t k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

const BigCount& BinomialTable::operator()(std::size_t n, std::size_t k) const {
  static const BigCount kZero = 0;
  if (n >= rows_.size()) throw DimensionMismatch("binomial table too small");
  return k <= n ? rows_[n][k] : kZero;
}

WeightClassRanker::WeightClassRanker(std::size_t length, std::vector<std::size_t> weights)
    : length_(length), weights_(std::move(weights)), allowed_(length + 1, false), binom_(length) {
  std::sort(weights_.begin(), weights_.end());
  weights_.erase(std::unique(weights_.begin(), weights_.end()), weights_.end());
  for (std::size_t w : weights_) {
    if (w > length_) {
      throw DimensionMismatch("weight " + std::to_string(w) + " exceeds length " +
                              std::to_string(length_));
    }
    allowed_[w] = true;
    offsets_.push_back(total_);
    total_ += binom_(length_, w);
  }
}

bool WeightClassRanker::contains(std::span<const Symbol> bits) const {
  if (bits.size() != length_) return false;
  std::size_t w = 0;
  for (Symbol b : bits) {
    if (b > 1) return false;
    w += b;
  }
  return allowed_[w];
}

BigCount WeightClassRanker::rank(std::span<const Symbol> bits) const {
  if (!contains(bits)) throw DomainError("word is not a member of the ranked weight classes");
  const auto weight = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), Symbol{1}));
  const auto cls = std::lower_bound(weights_.begin(), weights_.end(), weight) - weights_.begin();

  BigCount r = offsets_[static_cast<std::size_t>(cls)];
  std::size_t ones_left = weight;
  for (std::size_t pos = 0; pos < length_ && ones_left > 0; ++pos) {
    if (bits[pos] == 1) {
      // Words sharing this prefix but with a 0 here come first.
      r += binom_(length_ - pos - 1, ones_left);
      --ones_left;
    }
  }
  return r;
}

Word WeightClassRanker::unrank(const BigCount& rank) const {
  if (rank < 0 || rank >= total_) {
    throw RankOutOfRange("rank " + rank.str() + " outside [0, " + total_.str() + ")");
  }
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), rank);
  const auto cls = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  std::size_t ones_left = weights_[cls];
  BigCount r = rank - offsets_[cls];

  std::vector<Symbol> bits(length_, 0);
  for (std::size_t pos = 0; pos < length_ && ones_left > 0; ++pos) {
    const BigCount& with_zero = binom_(length_ - pos - 1, ones_left);
    if (r >= with_zero) {
      bits[pos] = 1;
      r -= with_zero;
      --ones_left;
    }
  }
  return Word(std::move(bits), 2);
}

}  // namespace pcc
