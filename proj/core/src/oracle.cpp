#include "pcc/oracle.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>
#include <utility>

#include "pcc/errors.hpp"
#include "pcc/index_coding.hpp"

namespace pcc::oracle {
namespace {

std::uint64_t checked_space(Alphabet q, std::size_t length, std::uint64_t bound,
                            const std::string& what) {
  const std::uint64_t size = saturating_pow(q, length);
  if (size > bound) {
    throw BoundExceeded(what + ": " + std::to_string(q) + "^" + std::to_string(length) +
                        " states exceed the bound of " + std::to_string(bound));
  }
  return size;
}

// Records a Collision for every image that repeats an earlier one.
void record_collisions(std::vector<std::pair<Word, Word>>& image_input, VerifyReport& report) {
  std::sort(image_input.begin(), image_input.end());
  for (std::size_t t = 1; t < image_input.size(); ++t) {
    if (image_input[t].first == image_input[t - 1].first) {
      report.record(image_input[t].second, FailureKind::Collision,
                    "shares image " + to_digits(image_input[t].first) + " with " +
                        to_digits(image_input[t - 1].second));
    }
  }
}

void check_one(const CodecSpec& codec, const Word& x, VerifyReport& report,
               std::vector<std::pair<Word, Word>>& images, std::uint64_t& iteration_sum) {
  try {
    auto enc = encode(codec, x);
    iteration_sum += enc.trace.iterations;
    report.max_iterations = std::max(report.max_iterations, enc.trace.iterations);
    if (!codec.in_c(enc.codeword)) {
      report.record(x, FailureKind::NotInConstraint, "codeword " + to_digits(enc.codeword));
    }
    const Word back = decode(codec, enc.codeword);
    if (back != x) {
      report.record(x, FailureKind::RoundTrip, "decoded to " + to_digits(back));
    }
    images.emplace_back(std::move(enc.codeword), x);
  } catch (const Error& e) {
    report.record(x, FailureKind::Exception, e.what());
  }
}

}  // namespace

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::RoundTrip: return "round-trip";
    case FailureKind::NotInConstraint: return "not-in-constraint";
    case FailureKind::Collision: return "collision";
    case FailureKind::Length: return "length";
    case FailureKind::Inverse: return "inverse";
    case FailureKind::Exception: return "exception";
    case FailureKind::InDegree: return "in-degree";
    case FailureKind::StartInDegree: return "start-in-degree";
    case FailureKind::Cycle: return "cycle";
    case FailureKind::PathLengthSum: return "path-length-sum";
    case FailureKind::Capacity: return "capacity";
  }
  return "unknown";
}

void VerifyReport::record(Word input, FailureKind kind, std::string detail) {
  ++failure_count;
  if (failures.size() < kMaxRecordedFailures) {
    failures.push_back({std::move(input), kind, std::move(detail)});
  }
}

BigRational VerifyReport::average_iterations() const {
  if (total_inputs == 0) return BigRational(0);
  return BigRational(iteration_sum, BigCount(total_inputs));
}

void ensure_passed(const VerifyReport& report) {
  if (report.passed()) return;
  const auto& f = report.failures.front();
  throw PropertyViolation(to_string(f.kind) + " at " + to_digits(f.input) +
                          (f.detail.empty() ? "" : ": " + f.detail));
}

void write_summary(std::ostream& os, const VerifyReport& report, const std::string& title) {
  os << "# " << title << '\n';
  if (report.exhaustive) {
    os << "# mode: exhaustive\n";
  } else {
    os << "# mode: sampled, seed=" << report.seed.value_or(0) << " (non-exhaustive)\n";
  }
  os << "# result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& f : report.failures) {
    os << "# failure: " << to_string(f.kind) << ' ' << to_digits(f.input);
    if (!f.detail.empty()) os << " (" << f.detail << ')';
    os << '\n';
  }
  write_key_values(os, report);
}

void write_key_values(std::ostream& os, const VerifyReport& report) {
  os << "inputs=" << report.total_inputs << '\n';
  os << "failures=" << report.failure_count << '\n';
  os << "avg_iterations=" << pcc::to_string(report.average_iterations()) << '\n';
  os << "max_iterations=" << report.max_iterations << '\n';
  os << "constraint_count="
     << (report.constraint_count ? report.constraint_count->str() : std::string("NA")) << '\n';
  if (report.graph) {
    os << "graph_nodes=" << report.graph->nodes << '\n';
    os << "graph_edges=" << report.graph->edges << '\n';
    os << "graph_max_in_degree=" << report.graph->max_in_degree << '\n';
  }
}

VerifyReport exhaustive_roundtrip(const CodecSpec& codec, std::uint64_t bound) {
  const std::uint64_t inputs = checked_space(codec.q, codec.k, bound, "exhaustive round-trip");
  VerifyReport report;
  std::vector<std::pair<Word, Word>> images;
  images.reserve(inputs);
  std::uint64_t iteration_sum = 0;
  for_each_word(codec.q, codec.k, [&](const Word& x) {
    check_one(codec, x, report, images, iteration_sum);
    ++report.total_inputs;
  });
  report.iteration_sum = iteration_sum;
  record_collisions(images, report);
  if (saturating_pow(codec.q, codec.n) <= bound) {
    report.constraint_count = count_constraint(codec.q, codec.n, codec.in_c, bound);
  }
  return report;
}

VerifyReport sampled_roundtrip(const CodecSpec& codec, std::uint64_t samples,
                               std::uint64_t seed) {
  // Knuth's MMIX constants; the high half of each draw is used.
  std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0>
      rng(seed);
  VerifyReport report;
  report.exhaustive = false;
  report.seed = seed;
  std::set<Word> seen;
  std::vector<std::pair<Word, Word>> images;
  std::uint64_t iteration_sum = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<Symbol> symbols(codec.k);
    for (auto& v : symbols) v = static_cast<Symbol>((rng() >> 32) % codec.q);
    Word x(std::move(symbols), codec.q);
    ++report.total_inputs;
    if (!seen.insert(x).second) {
      // repeated draw: still exercised, but not a second collision candidate
      std::vector<std::pair<Word, Word>> scratch;
      check_one(codec, x, report, scratch, iteration_sum);
      continue;
    }
    check_one(codec, x, report, images, iteration_sum);
  }
  report.iteration_sum = iteration_sum;
  record_collisions(images, report);
  return report;
}

BigCount count_constraint(Alphabet q, std::size_t n, const Indicator& in_c,
                          std::uint64_t bound) {
  checked_space(q, n, bound, "count_constraint");
  std::uint64_t count = 0;
  for_each_word(q, n, [&](const Word& x) { count += in_c(x) ? 1 : 0; });
  return BigCount(count);
}

bool meets_capacity(Alphabet q, std::size_t n, const BigCount& constraint_count) {
  return constraint_count >= boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(n - 1));
}

VerifyReport check_shrink_injective(const ShrinkStep& shrink, std::uint64_t bound) {
  checked_space(shrink.q, shrink.n, bound, "check_shrink_injective");
  VerifyReport report;
  std::uint64_t satisfied = 0;
  std::vector<std::pair<Word, Word>> images;
  for_each_word(shrink.q, shrink.n, [&](const Word& x) {
    if (shrink.in_c(x)) {
      ++satisfied;
      return;
    }
    ++report.total_inputs;
    try {
      Word y = shrink.xi(x);
      if (y.size() != shrink.target_len()) {
        report.record(x, FailureKind::Length,
                      "xi has length " + std::to_string(y.size()) + ", expected " +
                          std::to_string(shrink.target_len()));
        return;
      }
      auto back = shrink.xi_inv(y);
      if (!back || *back != x) {
        report.record(x, FailureKind::Inverse,
                      back ? "xi_inv gave " + to_digits(*back) : "xi_inv rejected its image");
      }
      images.emplace_back(std::move(y), x);
    } catch (const Error& e) {
      report.record(x, FailureKind::Exception, e.what());
    }
  });
  record_collisions(images, report);
  report.constraint_count = BigCount(satisfied);
  return report;
}

VerifyReport check_window_coder(const WindowCoder& coder, std::uint64_t bound) {
  checked_space(coder.q, coder.ell, bound, "check_window_coder");
  VerifyReport report;
  std::vector<std::pair<Word, Word>> images;
  for_each_word(coder.q, coder.ell, [&](const Word& w) {
    if (!coder.in_w(w.symbols())) return;
    ++report.total_inputs;
    try {
      Word c = coder.chi(w.symbols());
      if (c.size() != coder.ell_prime) {
        report.record(w, FailureKind::Length,
                      "chi has length " + std::to_string(c.size()) + ", expected " +
                          std::to_string(coder.ell_prime));
        return;
      }
      auto back = coder.chi_inv(c.symbols());
      if (!back || *back != w) {
        report.record(w, FailureKind::Inverse,
                      back ? "chi_inv gave " + to_digits(*back) : "chi_inv rejected its image");
      }
      images.emplace_back(std::move(c), w);
    } catch (const Error& e) {
      report.record(w, FailureKind::Exception, e.what());
    }
  });
  record_collisions(images, report);
  return report;
}

}  // namespace pcc::oracle
