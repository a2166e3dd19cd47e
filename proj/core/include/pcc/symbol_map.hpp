#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pcc/word.hpp"

namespace pcc {

// Table-driven function beta: Sigma -> Sigma.
class SymbolFunction {
 public:
  SymbolFunction(std::vector<Symbol> table, Alphabet q);

  static SymbolFunction identity(Alphabet q);
  // (s + shift) mod q
  static SymbolFunction shift(Alphabet q, unsigned shift);
  // A<->T, C<->G under A=0, C=1, G=2, T=3.
  static SymbolFunction dna_complement();

  Alphabet alphabet() const { return q_; }
  Symbol operator()(Symbol s) const { return table_[s]; }
  bool is_involution() const;
  bool has_fixed_point() const;
  bool is_identity() const;

  bool operator==(const SymbolFunction&) const = default;

 private:
  std::vector<Symbol> table_;
  Alphabet q_;
};

// Window transform alpha: Sigma^l -> Sigma^l.
//
// Either symbolwise, alpha(w)_t = beta_t(w_t), or a reverse-complement,
// alpha(w)_t = c(w_{l-1-t}) for an involution c.
class WindowMap {
 public:
  static WindowMap symbolwise(std::vector<SymbolFunction> per_position);
  static WindowMap uniform(const SymbolFunction& beta, std::size_t length);
  static WindowMap identity(Alphabet q, std::size_t length);
  static WindowMap reverse_complement(const SymbolFunction& c, std::size_t length);

  bool is_symbolwise() const { return !reversed_; }
  bool is_identity() const;
  std::size_t length() const { return length_; }
  Alphabet alphabet() const { return q_; }

  // beta_t for symbolwise maps; c for reverse-complement maps.
  const SymbolFunction& position(std::size_t t) const { return reversed_ ? maps_[0] : maps_[t]; }

  // out must have length() symbols and must not alias in.
  void apply(std::span<const Symbol> in, std::span<Symbol> out) const;
  Word apply(const Word& window) const;

 private:
  WindowMap(std::vector<SymbolFunction> maps, std::size_t length, bool reversed);

  std::vector<SymbolFunction> maps_;
  std::size_t length_;
  Alphabet q_;
  bool reversed_;
};

}  // namespace pcc
