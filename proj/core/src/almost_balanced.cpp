#include <memory>
#include <string>
#include <vector>

#include "pcc/enumerative.hpp"
#include "pcc/errors.hpp"
#include "pcc/global.hpp"
#include "pcc/index_coding.hpp"

namespace pcc {
namespace {

WeightClassRanker bounded_ranker(std::size_t n, std::size_t wmax) {
  std::vector<std::size_t> weights;
  for (std::size_t w = 0; w <= wmax && w <= n; ++w) weights.push_back(w);
  return WeightClassRanker(n, std::move(weights));
}

void require_binary(const Word& x) {
  if (x.alphabet() != 2) throw DimensionMismatch("weight ranking needs a binary word");
}

}  // namespace

BigCount count_weight_le(std::size_t n, std::size_t wmax) {
  BinomialTable binom(n);
  BigCount total = 0;
  for (std::size_t w = 0; w <= wmax && w <= n; ++w) total += binom(n, w);
  return total;
}

BigCount rank_bounded(const Word& x, std::size_t wmax) {
  require_binary(x);
  if (x.weight() > wmax) {
    throw RankOutOfRange("word weight " + std::to_string(x.weight()) + " exceeds " +
                         std::to_string(wmax));
  }
  return bounded_ranker(x.size(), wmax).rank(x.symbols());
}

Word unrank_bounded(const BigCount& rank, std::size_t n, std::size_t wmax) {
  return bounded_ranker(n, wmax).unrank(rank);
}

WeightBounds ab_weight_bounds(std::size_t n) {
  // smallest t with t >= n/2 - sqrt(n), i.e. 2t >= n or (n - 2t)^2 <= 4n
  std::size_t lo = 0;
  while (2 * lo < n && (n - 2 * lo) * (n - 2 * lo) > 4 * n) ++lo;
  return {lo, n - lo};
}

std::pair<ShrinkStep, ShrinkStep> ab_shrink_pair(std::size_t n) {
  if (n <= 4) throw ParameterViolation("ab: need n > 4, got n=" + std::to_string(n), 5);
  const auto [lo, hi] = ab_weight_bounds(n);
  const std::size_t wmax = lo - 1;  // AB-H violated iff weight <= wmax
  const std::size_t width = n - 2;
  auto ranker = std::make_shared<const WeightClassRanker>(bounded_ranker(n, wmax));
  const BigCount capacity = BigCount(1) << width;
  if (ranker->size() > capacity) {
    throw ParameterViolation("ab: count_weight_le(" + std::to_string(n) + ", " +
                             std::to_string(wmax) + ") = " + ranker->size().str() +
                             " exceeds 2^" + std::to_string(width));
  }

  auto check = [n](const Word& x) {
    if (x.size() != n || x.alphabet() != 2) {
      throw DimensionMismatch("ab: expected a binary word of length " + std::to_string(n));
    }
  };

  ShrinkStep high;
  high.q = 2;
  high.n = n;
  high.slack = 1;
  high.name = "ab-h(n=" + std::to_string(n) + ",w>=" + std::to_string(lo) + ")";
  high.in_c = [lo](const Word& x) { return x.weight() >= lo; };
  high.xi = [ranker, width, check](const Word& x) {
    check(x);
    if (!ranker->contains(x.symbols())) throw DomainError("ab-h: xi applied to a heavy word");
    return encode_big(ranker->rank(x.symbols()), width, 2);
  };
  high.xi_inv = [ranker, width](const Word& y) -> std::optional<Word> {
    if (y.size() != width || y.alphabet() != 2) return std::nullopt;
    const BigCount r = decode_big(y.symbols(), 2);
    if (r >= ranker->size()) return std::nullopt;
    return ranker->unrank(r);
  };

  ShrinkStep low;
  low.q = 2;
  low.n = n;
  low.slack = 1;
  low.name = "ab-l(n=" + std::to_string(n) + ",w<=" + std::to_string(hi) + ")";
  low.in_c = [hi](const Word& x) { return x.weight() <= hi; };
  low.xi = [xi = high.xi](const Word& x) { return xi(x.complemented()); };
  low.xi_inv = [xi_inv = high.xi_inv](const Word& y) -> std::optional<Word> {
    auto x = xi_inv(y);
    if (!x) return std::nullopt;
    return x->complemented();
  };

  return {std::move(high), std::move(low)};
}

CodecSpec build_ab(std::size_t n) {
  auto [high, low] = ab_shrink_pair(n);
  const auto bounds = ab_weight_bounds(n);
  CodecSpec spec = build_one_symbol(build_intersection({high, low}));
  spec.name = "ab(n=" + std::to_string(n) + ")";
  spec.description = "Hamming weight in [" + std::to_string(bounds.lo) + ", " +
                     std::to_string(bounds.hi) + "]";
  return spec;
}

}  // namespace pcc
