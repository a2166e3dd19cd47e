#include <string>
#include <vector>

#include "pair_shrink.hpp"
#include "pcc/errors.hpp"
#include "pcc/index_coding.hpp"
#include "pcc/local.hpp"

namespace pcc {

ShrinkStep rss_shrink(std::size_t n, std::size_t ell, std::size_t slack,
                      const SymbolFunction& complement) {
  const Alphabet q = complement.alphabet();
  auto rc = WindowMap::reverse_complement(complement, ell);
  std::string name = "rss(n=" + std::to_string(n) + ",l=" + std::to_string(ell) + ")";
  return detail::make_pair_shrink(q, n, ell, std::move(rc), ell, slack, std::move(name));
}

CodecSpec build_ss(std::size_t n) {
  const std::size_t log_n = ceil_log(4, n);
  const std::size_t ell = 2 * log_n + 2;
  const std::size_t ell_palindrome = 2 * (ell / 2) + 2;
  const std::size_t slack = intersection_slack(4, 2);
  const std::string reading = "base-4 logs give l=" + std::to_string(ell) +
                              "; a base-2 reading would give l=" +
                              std::to_string(2 * ceil_log(2, n) + 2);
  if (n < ell_palindrome) {
    throw ParameterViolation("ss: n=" + std::to_string(n) + " is shorter than the palindrome window " +
                                 std::to_string(ell_palindrome) + " (" + reading + ")",
                             static_cast<std::int64_t>(ell_palindrome));
  }

  std::vector<ShrinkStep> members;
  members.push_back(rss_shrink(n, ell, slack));
  members.push_back(
      msa_shrink(enp_coder(n, ell_palindrome, SymbolFunction::dna_complement(), slack), n, slack));

  CodecSpec spec = build_one_symbol(build_intersection(members));
  spec.name = "ss(n=" + std::to_string(n) + ")";
  spec.description = "no reverse-complement window pair of length " + std::to_string(ell) +
                     " at any offsets; rss l=" + std::to_string(ell) + ", enp-rc l=" +
                     std::to_string(ell_palindrome) + " (" + reading + ")";
  return spec;
}

}  // namespace pcc
