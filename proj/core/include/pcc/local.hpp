#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcc/shrink.hpp"
#include "pcc/symbol_map.hpp"
#include "pcc/word.hpp"

namespace pcc {

// Describes a local constraint: the set W of forbidden length-ell windows
// together with an injective compressor chi: W -> Sigma^ell_prime.
struct WindowCoder {
  Alphabet q = 2;
  std::size_t ell = 0;
  std::size_t ell_prime = 0;

  // true when the window is forbidden (a member of W)
  std::function<bool(std::span<const Symbol>)> in_w;
  // Only defined on W; the result has exactly ell_prime symbols.
  std::function<Word(std::span<const Symbol>)> chi;
  // Strict inverse: nullopt unless the argument is chi(w) for some w in W.
  std::function<std::optional<Word>(std::span<const Symbol>)> chi_inv;

  std::string name;
};

// Leftmost i with x[i, i+ell) in W.
std::optional<std::size_t> first_forbidden_window(const Word& x, const WindowCoder& coder);

// Substring-avoiding shrink. Removes the leftmost forbidden window and
// appends its index (ceil(log_q n) symbols) and compressed form, padding
// with zeros up to n - 1 - slack symbols. Requires
//   ell_prime <= ell - ceil(log_q n) - 1 - slack.
ShrinkStep msa_shrink(const WindowCoder& coder, std::size_t n, std::size_t slack = 0);

// Windows of Hamming weight below p (binary). chi lists the positions of the
// ones, each in ceil(log2(ell+1)) bits, padded with the dummy index ell.
WindowCoder mw_coder(std::size_t n, std::size_t ell, std::size_t p, std::size_t slack = 0);

// Windows whose weight falls outside [lo, hi] (binary). chi is the
// fixed-width enumerative rank of the window within W.
WindowCoder lab_coder(std::size_t n, std::size_t ell, std::size_t lo, std::size_t hi,
                      std::size_t slack = 0);

// Integer weight window [ceil(p1*ell), floor(p2*ell)] for rational p1, p2.
struct WeightWindow {
  std::size_t lo;
  std::size_t hi;
};
WeightWindow lab_weight_window(std::size_t ell, std::size_t p1_num, std::size_t p1_den,
                               std::size_t p2_num, std::size_t p2_den);

// The asymptotic regime ln(n)/c^2 with c = min(1/2 - lo/ell, hi/ell - 1/2).
// Informational only; the coder is gated by the exact cardinality check.
double lab_asymptotic_min_ell(std::size_t n, std::size_t ell, std::size_t lo, std::size_t hi);

// Smallest p in [1, ell) with w_i = w_{i+p} for all valid i, or ell if none.
std::size_t minimal_period(std::span<const Symbol> w);

// Windows with minimal period below p. chi(w) = w[0, p') 1 0^(p-p'-1).
WindowCoder mp_coder(Alphabet q, std::size_t n, std::size_t ell, std::size_t p,
                     std::size_t slack = 0);

// Windows with w_i = c(w_{ell-1-i}) for an involution c (identity: plain
// palindromes, DNA complement: reverse-complement palindromes).
// chi keeps the first ceil(ell/2) symbols.
WindowCoder enp_coder(std::size_t n, std::size_t ell, const SymbolFunction& c,
                      std::size_t slack = 0);

// Explicit forbidden list; chi is the rank in sorted order.
WindowCoder generic_coder(Alphabet q, std::size_t ell, std::size_t ell_prime,
                          std::vector<Word> forbidden);

// No palindrome of length >= 2L+4, L = ceil(log_q n): intersection of the
// exact-palindrome constraints for ell = 2L+4 and 2L+5.
CodecSpec build_mpl(Alphabet q, std::size_t n);

}  // namespace pcc
