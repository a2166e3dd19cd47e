#include <algorithm>
#include <limits>
#include <ostream>
#include <vector>

#include "pcc/errors.hpp"
#include "pcc/index_coding.hpp"
#include "pcc/oracle.hpp"

namespace pcc::oracle {
namespace {

constexpr std::uint64_t kNoEdge = std::numeric_limits<std::uint64_t>::max();

std::uint64_t node_count(const CodecSpec& codec, std::uint64_t bound) {
  const std::uint64_t nodes = saturating_pow(codec.q, codec.n);
  if (nodes > bound) {
    throw BoundExceeded("state graph: " + std::to_string(codec.q) + "^" +
                        std::to_string(codec.n) + " nodes exceed the bound of " +
                        std::to_string(bound));
  }
  return nodes;
}

Word node_word(const CodecSpec& codec, std::uint64_t id) {
  return encode_index(id, codec.n, codec.q);
}

}  // namespace

VerifyReport check_graph(const CodecSpec& codec, std::uint64_t bound) {
  const std::uint64_t nodes = node_count(codec, bound);
  VerifyReport report;
  GraphStats stats;
  stats.nodes = nodes;

  // next[u] = phi(u) for u outside C(n); kNoEdge otherwise.
  std::vector<std::uint64_t> next(nodes, kNoEdge);
  std::vector<std::uint32_t> in_degree(nodes, 0);
  std::uint64_t satisfied = 0;
  for (std::uint64_t u = 0; u < nodes; ++u) {
    const Word w = node_word(codec, u);
    if (codec.in_c(w)) {
      ++satisfied;
      continue;
    }
    try {
      const Word v = codec.phi(w);
      if (v.size() != codec.n || v.alphabet() != codec.q) {
        report.record(w, FailureKind::Length, "phi left the state space");
        continue;
      }
      const std::uint64_t vid = decode_index(v);
      next[u] = vid;
      ++stats.edges;
      if (++in_degree[vid] == 2) {
        report.record(v, FailureKind::InDegree, "second edge from " + to_digits(w));
      }
      if (codec.in_s(v)) {
        report.record(v, FailureKind::StartInDegree, "edge from " + to_digits(w));
      }
    } catch (const Error& e) {
      report.record(w, FailureKind::Exception, e.what());
    }
  }
  for (auto d : in_degree) stats.max_in_degree = std::max<std::uint64_t>(stats.max_in_degree, d);
  report.constraint_count = BigCount(satisfied);

  // Walk every encoder path; visit stamps detect both cycles and shared nodes.
  std::vector<std::uint64_t> stamp(nodes, 0);
  std::uint64_t path_sum = 0;
  std::uint64_t start_id = 0;
  for_each_word(codec.q, codec.k, [&](const Word& x) {
    ++start_id;
    ++report.total_inputs;
    const Word start = codec.psi(x);
    std::uint64_t u = decode_index(start);
    std::uint64_t steps = 0;
    while (next[u] != kNoEdge) {
      if (stamp[u] == start_id) {
        report.record(start, FailureKind::Cycle, "revisits " + to_digits(node_word(codec, u)));
        break;
      }
      stamp[u] = start_id;
      u = next[u];
      ++steps;
    }
    path_sum += steps;
    report.max_iterations = std::max(report.max_iterations, steps);
  });
  report.iteration_sum = path_sum;
  if (path_sum > nodes) {
    report.record(Word::zeros(codec.n, codec.q), FailureKind::PathLengthSum,
                  std::to_string(path_sum) + " > " + std::to_string(nodes));
  }
  report.graph = stats;
  return report;
}

void write_dot(std::ostream& os, const CodecSpec& codec, std::uint64_t bound) {
  const std::uint64_t nodes = node_count(codec, bound);
  auto label = [&](const Word& w) { return codec.q == 4 ? to_dna(w) : to_digits(w); };

  os << "digraph \"" << codec.name << "\" {\n";
  os << "  node [style=filled];\n";
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::uint64_t u = 0; u < nodes; ++u) {
    const Word w = node_word(codec, u);
    const bool in_c = codec.in_c(w);
    const bool in_s = codec.in_s(w);
    // green: in C(n); blue: start state outside C(n); white: neither.
    // Start states carry a double border.
    const char* fill = in_c ? "palegreen" : (in_s ? "lightskyblue" : "white");
    os << "  \"" << label(w) << "\" [fillcolor=" << fill << (in_s ? ", peripheries=2" : "")
       << "];\n";
    if (!in_c) edges.emplace_back(label(w), label(codec.phi(w)));
  }
  for (const auto& [from, to] : edges) os << "  \"" << from << "\" -> \"" << to << "\";\n";
  os << "}\n";
}

}  // namespace pcc::oracle
