#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "pcc/big_count.hpp"
#include "pcc/word.hpp"

namespace pcc {

// Smallest w with q^w >= value (so 0..value-1 fit in w base-q symbols).
// ceil_log(q, 1) == 0.
std::size_t ceil_log(Alphabet q, std::uint64_t value);

// q^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(Alphabet q, std::size_t e);

// Fixed-width, big-endian, base-q representation of i.
Word encode_index(std::uint64_t i, std::size_t width, Alphabet q);
std::uint64_t decode_index(std::span<const Symbol> digits, Alphabet q);
std::uint64_t decode_index(const Word& w);

// Same for arbitrary-precision values.
Word encode_big(const BigCount& value, std::size_t width, Alphabet q);
BigCount decode_big(std::span<const Symbol> digits, Alphabet q);

}  // namespace pcc
