#include "pcc/symbol_map.hpp"

#include <algorithm>
#include <string>

#include "pcc/errors.hpp"

namespace pcc {

SymbolFunction::SymbolFunction(std::vector<Symbol> table, Alphabet q)
    : table_(std::move(table)), q_(q) {
  if (table_.size() != q_) {
    throw DimensionMismatch("symbol table needs " + std::to_string(q_) + " entries, got " +
                            std::to_string(table_.size()));
  }
  for (Symbol s : table_) {
    if (s >= q_) throw DimensionMismatch("symbol table entry outside alphabet");
  }
}

SymbolFunction SymbolFunction::identity(Alphabet q) {
  std::vector<Symbol> t(q);
  for (unsigned s = 0; s < q; ++s) t[s] = static_cast<Symbol>(s);
  return SymbolFunction(std::move(t), q);
}

SymbolFunction SymbolFunction::shift(Alphabet q, unsigned shift) {
  std::vector<Symbol> t(q);
  for (unsigned s = 0; s < q; ++s) t[s] = static_cast<Symbol>((s + shift) % q);
  return SymbolFunction(std::move(t), q);
}

SymbolFunction SymbolFunction::dna_complement() { return SymbolFunction({3, 2, 1, 0}, 4); }

bool SymbolFunction::is_involution() const {
  for (unsigned s = 0; s < q_; ++s) {
    if (table_[table_[s]] != s) return false;
  }
  return true;
}

bool SymbolFunction::has_fixed_point() const {
  for (unsigned s = 0; s < q_; ++s) {
    if (table_[s] == s) return true;
  }
  return false;
}

bool SymbolFunction::is_identity() const { return *this == identity(q_); }

WindowMap::WindowMap(std::vector<SymbolFunction> maps, std::size_t length, bool reversed)
    : maps_(std::move(maps)), length_(length), reversed_(reversed) {
  if (maps_.empty()) throw DimensionMismatch("window map needs at least one symbol function");
  q_ = maps_.front().alphabet();
  for (const auto& m : maps_) {
    if (m.alphabet() != q_) throw DimensionMismatch("window map mixes alphabets");
  }
}

WindowMap WindowMap::symbolwise(std::vector<SymbolFunction> per_position) {
  const std::size_t len = per_position.size();
  return WindowMap(std::move(per_position), len, false);
}

WindowMap WindowMap::uniform(const SymbolFunction& beta, std::size_t length) {
  return WindowMap(std::vector<SymbolFunction>(length, beta), length, false);
}

WindowMap WindowMap::identity(Alphabet q, std::size_t length) {
  return uniform(SymbolFunction::identity(q), length);
}

WindowMap WindowMap::reverse_complement(const SymbolFunction& c, std::size_t length) {
  if (!c.is_involution()) throw ParameterViolation("reverse-complement map needs an involution");
  return WindowMap({c}, length, true);
}

bool WindowMap::is_identity() const {
  return !reversed_ &&
         std::all_of(maps_.begin(), maps_.end(), [](const auto& m) { return m.is_identity(); });
}

void WindowMap::apply(std::span<const Symbol> in, std::span<Symbol> out) const {
  if (in.size() != length_ || out.size() != length_) {
    throw DimensionMismatch("window map expects windows of length " + std::to_string(length_));
  }
  if (reversed_) {
    for (std::size_t t = 0; t < length_; ++t) out[t] = maps_[0](in[length_ - 1 - t]);
  } else {
    for (std::size_t t = 0; t < length_; ++t) out[t] = maps_[t](in[t]);
  }
}

Word WindowMap::apply(const Word& window) const {
  std::vector<Symbol> out(length_);
  apply(window.symbols(), out);
  return Word(std::move(out), q_);
}

}  // namespace pcc
