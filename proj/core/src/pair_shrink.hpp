#pragma once

// Shared machinery for the window-pair shrinks (repeat-free and the
// reverse-complement family).

#include <string>

#include "pcc/global.hpp"

namespace pcc::detail {

// min_gap >= ell is required when alpha is not symbolwise.
ShrinkStep make_pair_shrink(Alphabet q, std::size_t n, std::size_t ell, WindowMap alpha,
                            std::size_t min_gap, std::size_t slack, std::string name);

}  // namespace pcc::detail
