#include <memory>
#include <string>

#include "pcc/errors.hpp"
#include "pcc/index_coding.hpp"
#include "pcc/local.hpp"

namespace pcc {

std::optional<std::size_t> first_forbidden_window(const Word& x, const WindowCoder& coder) {
  if (x.size() < coder.ell) return std::nullopt;
  const auto s = x.symbols();
  for (std::size_t i = 0; i + coder.ell <= x.size(); ++i) {
    if (coder.in_w(s.subspan(i, coder.ell))) return i;
  }
  return std::nullopt;
}

ShrinkStep msa_shrink(const WindowCoder& coder, std::size_t n, std::size_t slack) {
  const Alphabet q = coder.q;
  const std::size_t ell = coder.ell;
  const std::size_t ell_prime = coder.ell_prime;
  const std::size_t index_width = ceil_log(q, n);

  if (ell == 0 || ell > n) {
    throw ParameterViolation("window length " + std::to_string(ell) +
                             " must lie in [1, n = " + std::to_string(n) + "]");
  }
  if (ell_prime + index_width + 1 + slack > ell) {
    throw ParameterViolation(
        coder.name + ": need ell' <= ell - ceil(log_q n) - 1 - slack, i.e. " +
            std::to_string(ell_prime) + " <= " + std::to_string(ell) + " - " +
            std::to_string(index_width) + " - 1 - " + std::to_string(slack),
        static_cast<std::int64_t>(ell_prime + index_width + 1 + slack));
  }

  const std::size_t kept = n - ell;
  const std::size_t content = kept + index_width + ell_prime;
  const std::size_t target = n - 1 - slack;
  const std::size_t padding = target - content;

  auto c = std::make_shared<const WindowCoder>(coder);

  ShrinkStep out;
  out.q = q;
  out.n = n;
  out.slack = slack;
  out.name = coder.name;
  out.in_c = [c](const Word& x) { return !first_forbidden_window(x, *c).has_value(); };
  out.xi = [c, n, ell, index_width, padding, q](const Word& x) {
    if (x.size() != n) throw DimensionMismatch("xi expects length " + std::to_string(n));
    const auto i = first_forbidden_window(x, *c);
    if (!i) throw DomainError(c->name + ": xi applied to a word without forbidden windows");
    const auto zeros = std::vector<Symbol>(padding, 0);
    return concat({x.view(0, *i), x.view(*i + ell, n - *i - ell),
                   encode_index(*i, index_width, q).symbols(), c->chi(x.view(*i, ell)).symbols(),
                   zeros},
                  q);
  };
  out.xi_inv = [c, kept, index_width, ell_prime, content, target, q](const Word& y) -> std::optional<Word> {
    if (y.size() != target || y.alphabet() != q) return std::nullopt;
    for (std::size_t t = content; t < target; ++t) {
      if (y[t] != 0) return std::nullopt;
    }
    const auto window = c->chi_inv(y.view(kept + index_width, ell_prime));
    if (!window) return std::nullopt;
    const std::uint64_t i = decode_index(y.view(kept, index_width), q);
    if (i > kept) return std::nullopt;
    Word x = concat({y.view(0, i), window->symbols(), y.view(i, kept - i)}, q);
    // The encoded index must be the leftmost forbidden window.
    if (first_forbidden_window(x, *c) != std::optional<std::size_t>(i)) return std::nullopt;
    return x;
  };
  return out;
}

}  // namespace pcc
