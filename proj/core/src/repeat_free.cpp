#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "pair_shrink.hpp"
#include "pcc/errors.hpp"
#include "pcc/index_coding.hpp"

namespace pcc {
namespace {

bool content_less(std::span<const Symbol> a, std::span<const Symbol> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::optional<WindowPair> find_window_pair(const Word& x, const WindowMap& alpha,
                                           std::size_t min_gap) {
  const std::size_t ell = alpha.length();
  if (ell == 0 || x.size() < ell) return std::nullopt;
  const std::size_t windows = x.size() - ell + 1;
  const auto s = x.symbols();
  auto window = [&](std::size_t i) { return s.subspan(i, ell); };

  // Window starts ordered by content; equal windows keep ascending position.
  std::vector<std::size_t> order(windows);
  for (std::size_t i = 0; i < windows; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return content_less(window(a), window(b)); });

  std::vector<Symbol> target(ell);
  const std::size_t gap = std::max<std::size_t>(min_gap, 1);
  for (std::size_t i = 0; i + gap < windows; ++i) {
    alpha.apply(window(i), target);
    const std::span<const Symbol> t(target);
    auto lo = std::lower_bound(order.begin(), order.end(), t, [&](std::size_t a, auto key) {
      return content_less(window(a), key);
    });
    auto hi = std::upper_bound(lo, order.end(), t, [&](auto key, std::size_t b) {
      return content_less(key, window(b));
    });
    auto j = std::lower_bound(lo, hi, i + gap);
    if (j != hi) return WindowPair{i, *j};
  }
  return std::nullopt;
}

namespace detail {

ShrinkStep make_pair_shrink(Alphabet q, std::size_t n, std::size_t ell, WindowMap alpha,
                            std::size_t min_gap, std::size_t slack, std::string name) {
  if (alpha.length() != ell || alpha.alphabet() != q) {
    throw DimensionMismatch(name + ": window map does not match (q, l)");
  }
  if (!alpha.is_symbolwise() && min_gap < ell) {
    throw DimensionMismatch(name + ": overlapping pairs need a symbolwise window map");
  }
  const std::size_t index_width = ceil_log(q, n);
  if (ell > n) {
    throw ParameterViolation(name + ": window length exceeds n = " + std::to_string(n));
  }
  const std::size_t bound = 2 * index_width + 1 + slack;
  if (ell < bound) {
    throw ParameterViolation(name + ": need l >= 2*ceil(log n) + 1" +
                                 std::string(slack ? " + slack" : "") + " = " +
                                 std::to_string(bound) + ", got l=" + std::to_string(ell),
                             static_cast<std::int64_t>(bound));
  }
  const std::size_t kept = n - ell;
  const std::size_t content = kept + 2 * index_width;
  const std::size_t target = n - 1 - slack;

  auto map = std::make_shared<const WindowMap>(std::move(alpha));

  ShrinkStep out;
  out.q = q;
  out.n = n;
  out.slack = slack;
  out.name = name;
  out.in_c = [map, min_gap](const Word& x) { return !find_window_pair(x, *map, min_gap); };
  out.xi = [map, min_gap, n, ell, index_width, content, target, q, name](const Word& x) {
    if (x.size() != n) throw DimensionMismatch("xi expects length " + std::to_string(n));
    const auto pair = find_window_pair(x, *map, min_gap);
    if (!pair) throw DomainError(name + ": xi applied to a word without a window pair");
    const std::vector<Symbol> padding(target - content, 0);
    return concat({x.view(0, pair->second), x.view(pair->second + ell, n - pair->second - ell),
                   encode_index(pair->first, index_width, q).symbols(),
                   encode_index(pair->second, index_width, q).symbols(), padding},
                  q);
  };
  out.xi_inv = [map, min_gap, n, ell, kept, index_width, content, target,
                q](const Word& y) -> std::optional<Word> {
    if (y.size() != target || y.alphabet() != q) return std::nullopt;
    for (std::size_t t = content; t < target; ++t) {
      if (y[t] != 0) return std::nullopt;
    }
    const std::uint64_t i = decode_index(y.view(kept, index_width), q);
    const std::uint64_t j = decode_index(y.view(kept + index_width, index_width), q);
    if (i >= j || j > kept || j < i + min_gap) return std::nullopt;

    std::vector<Symbol> x(n);
    std::copy_n(y.begin(), j, x.begin());
    if (map->is_symbolwise()) {
      // Left to right: when the pair overlaps, x[i + t] for i + t >= j was
      // rebuilt on an earlier step (the removed window is periodic in j - i).
      for (std::size_t t = 0; t < ell; ++t) x[j + t] = map->position(t)(x[i + t]);
    } else {
      map->apply(std::span<const Symbol>(x).subspan(i, ell), std::span<Symbol>(x).subspan(j, ell));
    }
    std::copy(y.begin() + static_cast<std::ptrdiff_t>(j),
              y.begin() + static_cast<std::ptrdiff_t>(kept),
              x.begin() + static_cast<std::ptrdiff_t>(j + ell));

    Word word(std::move(x), q);
    if (find_window_pair(word, *map, min_gap) != std::optional<WindowPair>({i, j})) {
      return std::nullopt;
    }
    return word;
  };
  return out;
}

}  // namespace detail

ShrinkStep rf_shrink(Alphabet q, std::size_t n, std::size_t ell,
                     const std::optional<WindowMap>& alpha, std::size_t slack) {
  WindowMap map = alpha ? *alpha : WindowMap::identity(q, ell);
  if (!map.is_symbolwise()) {
    throw ParameterViolation("srf: the window map must be symbolwise");
  }
  const bool plain = map.is_identity();
  std::string name = std::string(plain ? "rf" : "srf") + "(n=" + std::to_string(n) +
                     ",l=" + std::to_string(ell) + ")";
  return detail::make_pair_shrink(q, n, ell, std::move(map), 1, slack, std::move(name));
}

}  // namespace pcc
