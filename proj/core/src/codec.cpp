#include "pcc/codec.hpp"

#include <algorithm>
#include <string>

#include "pcc/errors.hpp"
#include "pcc/index_coding.hpp"

namespace pcc {

std::uint64_t default_iteration_cap(Alphabet q, std::size_t redundancy) {
  return std::max<std::uint64_t>(std::uint64_t{1} << 20, saturating_pow(q, redundancy + 8));
}

CodecSpec validated(CodecSpec spec) {
  if (spec.k >= spec.n) {
    throw DimensionMismatch("codec needs k < n (k=" + std::to_string(spec.k) +
                            ", n=" + std::to_string(spec.n) + ")");
  }
  if (!spec.psi || !spec.psi_inv || !spec.in_s || !spec.phi || !spec.phi_inv || !spec.in_c) {
    throw DimensionMismatch("codec '" + spec.name + "' is missing a component map");
  }
  if (spec.iter_cap == 0) spec.iter_cap = default_iteration_cap(spec.q, spec.redundancy());
  return spec;
}

Encoded encode(const CodecSpec& codec, const Word& message, bool record_trace) {
  if (message.alphabet() != codec.q || message.size() != codec.k) {
    throw DimensionMismatch("encode expects a length-" + std::to_string(codec.k) +
                            " word over q=" + std::to_string(codec.q) + ", got length " +
                            std::to_string(message.size()) + " over q=" +
                            std::to_string(message.alphabet()));
  }
  Encoded out{codec.psi(message), {}};
  if (record_trace) out.trace.visited.emplace().push_back(out.codeword);

  while (!codec.in_c(out.codeword)) {
    if (out.trace.iterations >= codec.iter_cap) {
      throw IterationCapExceeded("encoder exceeded " + std::to_string(codec.iter_cap) +
                                 " iterations for input " + to_digits(message));
    }
    out.codeword = codec.phi(out.codeword);
    ++out.trace.iterations;
    if (record_trace) out.trace.visited->push_back(out.codeword);
  }
  return out;
}

Word decode(const CodecSpec& codec, const Word& codeword) {
  if (codeword.alphabet() != codec.q || codeword.size() != codec.n) {
    throw DimensionMismatch("decode expects a length-" + std::to_string(codec.n) +
                            " word over q=" + std::to_string(codec.q) + ", got length " +
                            std::to_string(codeword.size()));
  }
  Word y = codeword;
  std::uint64_t steps = 0;
  while (!codec.in_s(y)) {
    if (steps++ >= codec.iter_cap) {
      throw NotACodeword("decoder exceeded " + std::to_string(codec.iter_cap) +
                         " unravel steps on " + to_digits(codeword));
    }
    auto prev = codec.phi_inv(y);
    if (!prev) {
      throw NotACodeword("no step preimage for " + to_digits(y) + " while decoding " +
                         to_digits(codeword));
    }
    y = std::move(*prev);
  }
  return codec.psi_inv(y);
}

}  // namespace pcc
