#include "pcc/index_coding.hpp"

#include <limits>
#include <string>
#include <vector>

#include "pcc/errors.hpp"

namespace pcc {

std::size_t ceil_log(Alphabet q, std::uint64_t value) {
  std::size_t width = 0;
  std::uint64_t reach = 1;
  while (reach < value) {
    if (reach > std::numeric_limits<std::uint64_t>::max() / q) return width + 1;
    reach *= q;
    ++width;
  }
  return width;
}

std::uint64_t saturating_pow(Alphabet q, std::size_t e) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / q) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    v *= q;
  }
  return v;
}

Word encode_index(std::uint64_t i, std::size_t width, Alphabet q) {
  std::vector<Symbol> digits(width, 0);
  std::uint64_t rest = i;
  for (std::size_t pos = width; pos > 0; --pos) {
    digits[pos - 1] = static_cast<Symbol>(rest % q);
    rest /= q;
  }
  if (rest != 0) {
    throw IndexOverflow("index " + std::to_string(i) + " does not fit in " +
                        std::to_string(width) + " base-" + std::to_string(q) + " symbols");
  }
  return Word(std::move(digits), q);
}

std::uint64_t decode_index(std::span<const Symbol> digits, Alphabet q) {
  std::uint64_t v = 0;
  for (Symbol d : digits) {
    if (v > (std::numeric_limits<std::uint64_t>::max() - d) / q) {
      throw IndexOverflow("index field too wide for 64-bit value");
    }
    v = v * q + d;
  }
  return v;
}

std::uint64_t decode_index(const Word& w) { return decode_index(w.symbols(), w.alphabet()); }

Word encode_big(const BigCount& value, std::size_t width, Alphabet q) {
  if (value < 0) throw IndexOverflow("negative value cannot be encoded");
  std::vector<Symbol> digits(width, 0);
  BigCount rest = value;
  for (std::size_t pos = width; pos > 0; --pos) {
    digits[pos - 1] = static_cast<Symbol>(static_cast<unsigned>(rest % q));
    rest /= q;
  }
  if (rest != 0) {
    throw IndexOverflow("value " + value.str() + " does not fit in " + std::to_string(width) +
                        " base-" + std::to_string(q) + " symbols");
  }
  return Word(std::move(digits), q);
}

BigCount decode_big(std::span<const Symbol> digits, Alphabet q) {
  BigCount v = 0;
  for (Symbol d : digits) v = v * q + d;
  return v;
}

std::string to_string(const BigRational& v) {
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

}  // namespace pcc
