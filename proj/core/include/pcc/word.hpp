#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace pcc {

using Symbol = std::uint8_t;
using Alphabet = unsigned;  // alphabet size q, 2 <= q <= 256

// Fixed-length sequence over the alphabet {0, ..., q-1}.
//
// Words are values: the length and symbols never change after construction.
// Every constructor validates that each symbol is below q.
class Word {
 public:
  Word(std::vector<Symbol> symbols, Alphabet q);
  Word(std::initializer_list<int> symbols, Alphabet q);
  Word(std::span<const Symbol> symbols, Alphabet q);

  static Word filled(std::size_t length, Symbol s, Alphabet q);
  static Word zeros(std::size_t length, Alphabet q) { return filled(length, 0, q); }

  Alphabet alphabet() const { return q_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol back() const { return symbols_.back(); }
  std::span<const Symbol> symbols() const { return symbols_; }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  // Symbols [pos, pos + len).
  Word slice(std::size_t pos, std::size_t len) const;
  std::span<const Symbol> view(std::size_t pos, std::size_t len) const;

  // Number of non-zero symbols.
  std::size_t weight() const;

  // Same-length word with every symbol replaced by (q - 1 - s). For q = 2
  // this is the bitwise complement.
  Word complemented() const;

  bool operator==(const Word& other) const = default;
  std::strong_ordering operator<=>(const Word& other) const;

 private:
  std::vector<Symbol> symbols_;
  Alphabet q_;
};

// Concatenation of pieces over a common alphabet.
Word concat(std::initializer_list<std::span<const Symbol>> pieces, Alphabet q);

// Digit string ("0110", "0123"), used for diagnostics and tests.
std::string to_digits(const Word& w);
Word from_digits(std::string_view text, Alphabet q);

// ASCII DNA text: A,C,G,T <-> 0,1,2,3.
std::string to_dna(const Word& w);
Word from_dna(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Word& w);

// Calls f(word) for every word of the given length in lexicographic order.
template <typename F>
void for_each_word(Alphabet q, std::size_t length, F&& f) {
  std::vector<Symbol> digits(length, 0);
  while (true) {
    f(Word(digits, q));
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < q) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
    if (length == 0) return;
  }
}

}  // namespace pcc
