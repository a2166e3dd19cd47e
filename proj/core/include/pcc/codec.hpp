#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcc/word.hpp"

namespace pcc {

using WordMap = std::function<Word(const Word&)>;
using PartialWordMap = std::function<std::optional<Word>(const Word&)>;
using Indicator = std::function<bool(const Word&)>;

// A complete constraint codec for the iterative framework.
//
// Start set S is described by psi/psi_inv/in_s; the step map phi sends words
// outside C(n) to words outside S. phi must be injective; phi_inv returns
// nullopt for words that are not in the image of phi.
struct CodecSpec {
  Alphabet q = 2;
  std::size_t n = 0;
  std::size_t k = 0;

  WordMap psi;
  WordMap psi_inv;
  Indicator in_s;

  WordMap phi;
  PartialWordMap phi_inv;
  Indicator in_c;

  std::uint64_t iter_cap = 0;
  std::string name;
  std::string description;

  std::size_t redundancy() const { return n - k; }
};

// max(2^20, q^(r+8)), saturating.
std::uint64_t default_iteration_cap(Alphabet q, std::size_t redundancy);

// Checks k < n, all callables present; fills iter_cap if zero.
CodecSpec validated(CodecSpec spec);

struct TraceStats {
  std::uint64_t iterations = 0;
  // y^0, y^1, ..., y^t when tracing was requested.
  std::optional<std::vector<Word>> visited;
};

struct Encoded {
  Word codeword;
  TraceStats trace;
};

// Embed with psi, then apply phi until the word satisfies the constraint.
Encoded encode(const CodecSpec& codec, const Word& message, bool record_trace = false);

// Apply phi_inv until the word lands in S, then psi_inv.
Word decode(const CodecSpec& codec, const Word& codeword);

}  // namespace pcc
