#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pcc/codec.hpp"

namespace pcc {

// Injective shrink xi: complement(C(n)) -> Sigma^(n - 1 - slack).
//
// xi is only defined on words violating the constraint; it throws
// DomainError otherwise. xi_inv is a strict partial inverse: it returns
// nullopt unless its argument is exactly xi(x) for some violating x.
struct ShrinkStep {
  Alphabet q = 2;
  std::size_t n = 0;
  std::size_t slack = 0;

  WordMap xi;
  PartialWordMap xi_inv;
  Indicator in_c;

  std::string name;

  std::size_t target_len() const { return n - 1 - slack; }
};

// One redundancy symbol: psi(x) = x.1, phi(x) = xi(x).0, S = words ending in 1.
CodecSpec build_one_symbol(const ShrinkStep& shrink);

// Intersection of m constraints. Every member must carry
// slack = ceil_log(q, m); the result has slack 0 and appends the index of the
// first violated member as a ceil_log(q, m)-symbol tag.
ShrinkStep build_intersection(const std::vector<ShrinkStep>& members);

// Tag width used by build_intersection for m members.
std::size_t intersection_slack(Alphabet q, std::size_t members);

}  // namespace pcc
