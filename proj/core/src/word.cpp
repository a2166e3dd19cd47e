#include "pcc/word.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "pcc/errors.hpp"

namespace pcc {
namespace {

void check_alphabet(Alphabet q) {
  if (q < 2 || q > 256) {
    throw DimensionMismatch("alphabet size must lie in [2, 256], got " + std::to_string(q));
  }
}

void check_symbols(std::span<const Symbol> symbols, Alphabet q) {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] >= q) {
      throw DimensionMismatch("symbol " + std::to_string(symbols[i]) + " at position " +
                              std::to_string(i) + " is outside alphabet of size " +
                              std::to_string(q));
    }
  }
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, Alphabet q) : symbols_(std::move(symbols)), q_(q) {
  check_alphabet(q_);
  check_symbols(symbols_, q_);
}

Word::Word(std::initializer_list<int> symbols, Alphabet q) : q_(q) {
  check_alphabet(q_);
  symbols_.reserve(symbols.size());
  for (int s : symbols) {
    if (s < 0 || static_cast<unsigned>(s) >= q) {
      throw DimensionMismatch("symbol " + std::to_string(s) + " outside alphabet of size " +
                              std::to_string(q));
    }
    symbols_.push_back(static_cast<Symbol>(s));
  }
}

Word::Word(std::span<const Symbol> symbols, Alphabet q)
    : Word(std::vector<Symbol>(symbols.begin(), symbols.end()), q) {}

Word Word::filled(std::size_t length, Symbol s, Alphabet q) {
  return Word(std::vector<Symbol>(length, s), q);
}

Word Word::slice(std::size_t pos, std::size_t len) const { return Word(view(pos, len), q_); }

std::span<const Symbol> Word::view(std::size_t pos, std::size_t len) const {
  if (pos > symbols_.size() || len > symbols_.size() - pos) {
    throw DimensionMismatch("slice [" + std::to_string(pos) + ", " + std::to_string(pos + len) +
                            ") out of range for word of length " +
                            std::to_string(symbols_.size()));
  }
  return std::span<const Symbol>(symbols_).subspan(pos, len);
}

std::size_t Word::weight() const {
  return static_cast<std::size_t>(
      std::count_if(symbols_.begin(), symbols_.end(), [](Symbol s) { return s != 0; }));
}

Word Word::complemented() const {
  std::vector<Symbol> out(symbols_.size());
  std::transform(symbols_.begin(), symbols_.end(), out.begin(),
                 [q = q_](Symbol s) { return static_cast<Symbol>(q - 1 - s); });
  return Word(std::move(out), q_);
}

std::strong_ordering Word::operator<=>(const Word& other) const {
  if (auto c = q_ <=> other.q_; c != 0) return c;
  return symbols_ <=> other.symbols_;
}

Word concat(std::initializer_list<std::span<const Symbol>> pieces, Alphabet q) {
  std::size_t total = 0;
  for (auto p : pieces) total += p.size();
  std::vector<Symbol> out;
  out.reserve(total);
  for (auto p : pieces) out.insert(out.end(), p.begin(), p.end());
  return Word(std::move(out), q);
}

std::string to_digits(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Symbol c : w) {
    s.push_back(c < 10 ? static_cast<char>('0' + c) : static_cast<char>('a' + c - 10));
  }
  return s;
}

Word from_digits(std::string_view text, Alphabet q) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'z') v = c - 'a' + 10;
    if (v < 0 || static_cast<unsigned>(v) >= q) {
      throw ParseError(std::string("invalid symbol '") + c + "' for alphabet of size " +
                       std::to_string(q));
    }
    out.push_back(static_cast<Symbol>(v));
  }
  return Word(std::move(out), q);
}

std::string to_dna(const Word& w) {
  static constexpr char kBases[] = {'A', 'C', 'G', 'T'};
  if (w.alphabet() != 4) throw DimensionMismatch("DNA text requires q = 4");
  std::string s;
  s.reserve(w.size());
  for (Symbol c : w) s.push_back(kBases[c]);
  return s;
}

Word from_dna(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'A': out.push_back(0); break;
      case 'C': out.push_back(1); break;
      case 'G': out.push_back(2); break;
      case 'T': out.push_back(3); break;
      default: throw ParseError(std::string("invalid DNA base '") + c + "'");
    }
  }
  return Word(std::move(out), 4);
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_digits(w); }

}  // namespace pcc
