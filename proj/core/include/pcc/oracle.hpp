#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pcc/big_count.hpp"
#include "pcc/local.hpp"
#include "pcc/shrink.hpp"

namespace pcc::oracle {

// Largest state space (words) the exhaustive checks will materialize.
inline constexpr std::uint64_t kDefaultStateBound = std::uint64_t{1} << 20;

enum class FailureKind {
  RoundTrip,        // decode(encode(x)) != x
  NotInConstraint,  // encode(x) violates C(n)
  Collision,        // two inputs share an image
  Length,           // xi / chi produced the wrong length
  Inverse,          // xi_inv(xi(x)) != x
  Exception,        // an operation threw
  InDegree,         // node with in-degree > 1
  StartInDegree,    // edge into the start set S
  Cycle,            // cycle reachable from a start node
  PathLengthSum,    // sum of path lengths exceeds q^n
  Capacity,         // |C(n)| < q^(n-1)
};

std::string to_string(FailureKind kind);

struct Failure {
  Word input;
  FailureKind kind;
  std::string detail;
};

struct GraphStats {
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
  std::uint64_t max_in_degree = 0;
};

struct VerifyReport {
  std::uint64_t total_inputs = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // first kMaxRecordedFailures only
  BigCount iteration_sum = 0;
  std::uint64_t max_iterations = 0;
  std::optional<BigCount> constraint_count;
  std::optional<GraphStats> graph;
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;

  static constexpr std::size_t kMaxRecordedFailures = 64;

  bool passed() const { return failure_count == 0; }
  void record(Word input, FailureKind kind, std::string detail = {});

  // Exact mean of the per-input iteration counts (0 when there are no inputs).
  BigRational average_iterations() const;
};

// Throws PropertyViolation naming the first recorded failure.
void ensure_passed(const VerifyReport& report);

// Human-readable summary (lines starting with '#') and the key=value block:
// inputs, failures, avg_iterations, max_iterations, constraint_count.
void write_summary(std::ostream& os, const VerifyReport& report, const std::string& title);
void write_key_values(std::ostream& os, const VerifyReport& report);

// Every x in Sigma^k: decode(encode(x)) == x, encode(x) in C(n), outputs
// pairwise distinct. Also counts |C(n)| when q^n is within the bound.
VerifyReport exhaustive_roundtrip(const CodecSpec& codec,
                                  std::uint64_t bound = kDefaultStateBound);

// Same checks on `samples` inputs drawn from a 64-bit LCG seeded with `seed`.
// Reported as non-exhaustive.
VerifyReport sampled_roundtrip(const CodecSpec& codec, std::uint64_t samples,
                               std::uint64_t seed);

// Functional-graph properties over all q^n states: in-degree <= 1, no edge
// into S, no cycle reachable from psi(x), and sum of path lengths <= q^n.
VerifyReport check_graph(const CodecSpec& codec, std::uint64_t bound = kDefaultStateBound);

// DOT rendering of the step graph, nodes in lexicographic order.
void write_dot(std::ostream& os, const CodecSpec& codec,
               std::uint64_t bound = kDefaultStateBound);

// |C(n)| by enumeration.
BigCount count_constraint(Alphabet q, std::size_t n, const Indicator& in_c,
                          std::uint64_t bound = kDefaultStateBound);

// |C(n)| >= q^(n-1).
bool meets_capacity(Alphabet q, std::size_t n, const BigCount& constraint_count);

// xi over every violating word: exact length, distinct images, exact inverse.
// constraint_count carries |C(n)|; total_inputs is the complement size.
VerifyReport check_shrink_injective(const ShrinkStep& shrink,
                                    std::uint64_t bound = kDefaultStateBound);

// chi over every forbidden window: exact length ell', distinct images,
// chi_inv(chi(w)) == w. total_inputs is |W|.
VerifyReport check_window_coder(const WindowCoder& coder,
                                std::uint64_t bound = kDefaultStateBound);

}  // namespace pcc::oracle
