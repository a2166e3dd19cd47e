// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Every check is exhaustive and exact. Outputs are judged by the brute-force
// scanners in support/scan_oracles.hpp, not by the codec's own indicator.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "pcc/errors.hpp"
#include "pcc/global.hpp"
#include "pcc/index_coding.hpp"
#include "pcc/local.hpp"
#include "pcc/oracle.hpp"
#include "support/scan_oracles.hpp"

namespace {

using namespace pcc;

// Tolerances. Every comparison is exact integer/rational arithmetic.
constexpr std::uint64_t kIterationSlackNumerator = 0;  // avg <= q + 0
constexpr std::uint64_t kAllowedFailures = 0;

struct Suite {
  std::string label;
  CodecSpec codec;
  std::function<bool(const Word&)> scan;  // independent membership test
  std::vector<ShrinkStep> shrinks;        // every shrink step the codec is built from
  std::vector<WindowCoder> coders;        // every window coder involved
  std::string builder_check;              // note for builder-time cardinality checks
};

struct SuiteResult {
  std::uint64_t inputs = 0;
  std::uint64_t failures = 0;
  BigCount iteration_sum = 0;
  std::string first_failure;
};

std::vector<Suite> make_suites() {
  std::vector<Suite> s;
  {
    auto coder = mw_coder(16, 9, 2);
    auto shrink = msa_shrink(coder, 16);
    s.push_back({"MW(n=16,l=9,p=2)", build_one_symbol(shrink),
                 [](const Word& y) { return test::all_windows_weight_at_least(y, 9, 2); },
                 {shrink}, {coder}, ""});
  }
  {
    auto coder = mp_coder(2, 16, 8, 3);
    auto shrink = msa_shrink(coder, 16);
    s.push_back({"MP(n=16,l=8,p=3)", build_one_symbol(shrink),
                 [](const Word& y) { return test::all_windows_period_at_least(y, 8, 3); },
                 {shrink}, {coder}, ""});
  }
  {
    auto coder = enp_coder(16, 10, SymbolFunction::identity(2));
    auto shrink = msa_shrink(coder, 16);
    s.push_back({"ENP(n=16,l=10)", build_one_symbol(shrink),
                 [](const Word& y) { return !test::has_palindrome_of_length(y, 10); }, {shrink},
                 {coder}, ""});
  }
  {
    const std::size_t slack = intersection_slack(2, 2);
    auto c12 = enp_coder(16, 12, SymbolFunction::identity(2), slack);
    auto c13 = enp_coder(16, 13, SymbolFunction::identity(2), slack);
    auto m12 = msa_shrink(c12, 16, slack);
    auto m13 = msa_shrink(c13, 16, slack);
    auto both = build_intersection({m12, m13});
    s.push_back({"MPL(n=16,l=12|13)", build_mpl(2, 16),
                 [](const Word& y) { return !test::has_palindrome_at_least(y, 12); },
                 {m12, m13, both}, {c12, c13}, ""});
  }
  {
    auto coder = lab_coder(16, 12, 2, 10);
    auto shrink = msa_shrink(coder, 16);
    s.push_back({"LAB(n=16,l=12,[2,10])", build_one_symbol(shrink),
                 [](const Word& y) { return test::all_windows_weight_within(y, 12, 2, 10); },
                 {shrink}, {coder}, "|W|=26<=2^7"});
  }
  {
    auto shrink = rf_shrink(2, 8, 7);
    s.push_back({"RF(n=8,l=7)", build_one_symbol(shrink),
                 [](const Word& y) { return !test::has_repeat(y, 7); }, {shrink}, {}, ""});
  }
  {
    auto shrink = rf_shrink(2, 16, 9);
    s.push_back({"RF(n=16,l=9)", build_one_symbol(shrink),
                 [](const Word& y) { return !test::has_repeat(y, 9); }, {shrink}, {}, ""});
  }
  {
    auto shrink = rss_shrink(8, 5);
    s.push_back({"RSS(q=4,n=8,l=5)", build_one_symbol(shrink),
                 [](const Word& y) { return !test::has_rc_pair(y, 5, 5); }, {shrink}, {}, ""});
  }
  {
    const std::size_t slack = intersection_slack(4, 2);
    auto rss = rss_shrink(8, 6, slack);
    auto pal = enp_coder(8, 8, SymbolFunction::dna_complement(), slack);
    auto pal_shrink = msa_shrink(pal, 8, slack);
    auto both = build_intersection({rss, pal_shrink});
    // full-offset predicate, stricter than the codec's own members
    s.push_back({"SS(q=4,n=8,l=6,lp=8)", build_ss(8),
                 [](const Word& y) { return !test::has_rc_pair(y, 6, 1); },
                 {rss, pal_shrink, both}, {pal}, ""});
  }
  {
    auto [high, low] = ab_shrink_pair(16);
    auto both = build_intersection({high, low});
    const bool count_ok = count_weight_le(16, 3) <= (BigCount(1) << 14);
    s.push_back({"AB(n=16,[4,12])", build_ab(16),
                 [](const Word& y) {
                   const auto w = test::hamming(y);
                   return w >= 4 && w <= 12;
                 },
                 {high, low, both}, {},
                 std::string("count_weight_le(16,3)=697<=2^14:") + (count_ok ? "ok" : "FAILED")});
  }
  return s;
}

// Exhaustive round trip judged by the independent scanner.
SuiteResult run_suite(const Suite& suite) {
  SuiteResult r;
  const CodecSpec& c = suite.codec;
  std::unordered_set<std::string> images;
  auto fail = [&](const Word& x, const std::string& why) {
    if (r.failures++ == 0) r.first_failure = to_digits(x) + ": " + why;
  };
  for_each_word(c.q, c.k, [&](const Word& x) {
    ++r.inputs;
    try {
      const auto out = encode(c, x);
      r.iteration_sum += out.trace.iterations;
      if (out.codeword.size() != c.n) return fail(x, "length");
      if (!suite.scan(out.codeword)) return fail(x, "output violates constraint");
      if (!images.insert(to_digits(out.codeword)).second) return fail(x, "collision");
      if (decode(c, out.codeword) != x) return fail(x, "round trip");
    } catch (const std::exception& e) {
      fail(x, e.what());
    }
  });
  return r;
}

struct Line {
  int criterion;
  bool pass;
  std::string detail;
};

void print(const Line& l) {
  std::cout << "criterion " << l.criterion << ": " << (l.pass ? "PASS" : "FAIL") << " | "
            << l.detail << std::endl;
}

// Independent functional-graph check over all q^n states.
bool graph_ok(const CodecSpec& c, std::string& detail) {
  std::vector<Word> states;
  for_each_word(c.q, c.n, [&](const Word& w) { states.push_back(w); });
  std::vector<std::uint64_t> index_of_next(states.size(), UINT64_MAX);
  std::vector<std::uint64_t> in_degree(states.size(), 0);
  bool ok = true;
  std::uint64_t into_s = 0, max_in = 0;
  for (std::size_t u = 0; u < states.size(); ++u) {
    if (c.in_c(states[u])) continue;
    const Word v = c.phi(states[u]);
    const std::uint64_t id = decode_index(v);
    index_of_next[u] = id;
    max_in = std::max(max_in, ++in_degree[id]);
    if (c.in_s(v)) ++into_s;
  }
  ok = ok && max_in <= 1 && into_s == 0;

  BigCount path_sum = 0;
  std::uint64_t cycles = 0;
  for_each_word(c.q, c.k, [&](const Word& x) {
    std::uint64_t u = decode_index(c.psi(x));
    std::uint64_t steps = 0;
    while (index_of_next[u] != UINT64_MAX) {
      u = index_of_next[u];
      if (++steps > states.size()) {
        ++cycles;
        break;
      }
    }
    path_sum += steps;
  });
  ok = ok && cycles == 0 && path_sum <= BigCount(states.size());
  std::ostringstream os;
  os << c.name << " nodes=" << states.size() << " max_in=" << max_in << " into_S=" << into_s
     << " cycles=" << cycles << " path_sum=" << path_sum << "<=" << states.size();
  detail = os.str();

  const auto report = oracle::check_graph(c);
  if (!report.passed()) {
    ok = false;
    detail += " (oracle module disagrees)";
  }
  return ok;
}

template <typename F>
bool rejects_one_below(F&& build_at, std::int64_t minimal, std::string& detail,
                       const std::string& label) {
  bool accepted = false;
  bool rejected = false;
  try {
    build_at(minimal);
    accepted = true;
  } catch (const std::exception&) {
  }
  try {
    build_at(minimal - 1);
  } catch (const ParameterViolation&) {
    rejected = true;
  } catch (const std::exception&) {
  }
  detail += label + "=" + std::to_string(minimal) + (accepted ? " ok" : " REJECTED") + "/" +
            std::to_string(minimal - 1) + (rejected ? " rejected" : " NOT REJECTED") + "; ";
  return accepted && rejected;
}

// Lexicographically minimal pair (i, j) with x[i, i+l) == x[j, j+l), by brute force.
std::optional<std::pair<std::size_t, std::size_t>> brute_min_pair(const Word& x, std::size_t ell) {
  const auto s = test::raw(x);
  for (std::size_t i = 0; i + ell <= s.size(); ++i) {
    for (std::size_t j = i + 1; j + ell <= s.size(); ++j) {
      if (test::windows_equal(s, i, j, ell)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

// For every q=4 word of length <= 12, every overlapping RC pair of 6-windows
// must enclose an RC-palindrome of length 8.
Line overlap_reduction() {
  constexpr std::size_t ell = 6;
  constexpr std::size_t pal = 2 * (ell / 2) + 2;
  std::uint64_t words = 0, pairs = 0, counterexamples = 0;
  std::string first;
  std::vector<int> s;
  for (std::size_t len = ell; len <= 12; ++len) {
    s.assign(len, 0);
    while (true) {
      ++words;
      for (std::size_t i = 0; i + ell <= len; ++i) {
        for (std::size_t j = i + 1; j < i + ell && j + ell <= len; ++j) {
          bool rc = true;
          for (std::size_t t = 0; t < ell && rc; ++t) {
            rc = s[j + t] == test::dna_complement(s[i + ell - 1 - t]);
          }
          if (!rc) continue;
          ++pairs;
          bool found = false;
          for (std::size_t b = i; b + pal <= j + ell && !found; ++b) {
            found = test::is_c_palindrome(s, b, pal, test::dna_complement);
          }
          if (!found && counterexamples++ == 0) {
            for (int v : s) first += "ACGT"[v];
          }
        }
      }
      std::size_t pos = len;
      while (pos > 0 && ++s[pos - 1] == 4) s[--pos] = 0;
      if (pos == 0) break;
    }
  }
  std::ostringstream os;
  os << "words=" << words << " overlapping_rc_pairs=" << pairs
     << " counterexamples=" << counterexamples;
  if (!first.empty()) os << " first=" << first;
  return {8, counterexamples == kAllowedFailures && pairs > 0, os.str()};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Line> lines;
  std::vector<Suite> suites;
  try {
    suites = make_suites();
  } catch (const std::exception& e) {
    std::cout << "suite construction failed: " << e.what() << std::endl;
    for (int c = 1; c <= 8; ++c) print({c, false, "builders threw"});
    return 1;
  }

  // 1 and 2: round trip and average iterations
  {
    bool ok1 = true, ok2 = true;
    std::ostringstream d1, d2;
    for (const auto& suite : suites) {
      const SuiteResult r = run_suite(suite);
      const std::uint64_t expected = saturating_pow(suite.codec.q, suite.codec.k);
      const bool pass = r.failures == kAllowedFailures && r.inputs == expected;
      ok1 = ok1 && pass;
      d1 << suite.label << " inputs=" << r.inputs << " failures=" << r.failures;
      if (!suite.builder_check.empty()) d1 << " " << suite.builder_check;
      if (!r.first_failure.empty()) d1 << " first=" << r.first_failure;
      d1 << "; ";
      const BigRational avg(r.iteration_sum, r.inputs);
      const BigRational limit(suite.codec.q + kIterationSlackNumerator);
      ok2 = ok2 && avg <= limit;
      d2 << suite.label << " avg=" << to_string(avg) << "<=" << suite.codec.q << "; ";
    }
    ok1 = ok1 && suites.back().builder_check.find("FAILED") == std::string::npos;
    lines.push_back({1, ok1, d1.str()});
    lines.push_back({2, ok2, d2.str()});
    print(lines[0]);
    print(lines[1]);
  }

  // 3: functional graph properties
  {
    std::string a, b;
    const bool ok = graph_ok(build_one_symbol(msa_shrink(mw_coder(8, 7, 2), 8)), a) &
                    graph_ok(build_one_symbol(rf_shrink(2, 8, 7)), b);
    lines.push_back({3, ok, a + "; " + b});
    print(lines.back());
  }

  // 4: capacity precondition by enumeration
  {
    bool ok = true;
    std::ostringstream d;
    for (const auto& suite : suites) {
      const CodecSpec& c = suite.codec;
      if (saturating_pow(c.q, c.n) > (std::uint64_t{1} << 20)) continue;
      const BigCount count = oracle::count_constraint(c.q, c.n, c.in_c);
      const BigCount scanned = oracle::count_constraint(c.q, c.n, suite.scan);
      const bool pass = oracle::meets_capacity(c.q, c.n, count) && count == scanned;
      ok = ok && pass;
      d << suite.label << " |C|=" << count << (count == scanned ? "" : " (scan disagrees)")
        << ">=" << saturating_pow(c.q, c.n - 1) << "; ";
    }
    lines.push_back({4, ok, d.str()});
    print(lines.back());
  }

  // 5: shrink and window-coder injectivity
  {
    bool ok = true;
    std::uint64_t shrinks = 0, coders = 0;
    std::ostringstream bad;
    for (const auto& suite : suites) {
      for (const auto& s : suite.shrinks) {
        ++shrinks;
        const auto r = oracle::check_shrink_injective(s);
        if (!r.passed()) {
          ok = false;
          bad << s.name << " failures=" << r.failure_count << "; ";
        }
      }
      for (const auto& c : suite.coders) {
        ++coders;
        const auto r = oracle::check_window_coder(c);
        if (!r.passed()) {
          ok = false;
          bad << c.name << " failures=" << r.failure_count << "; ";
        }
      }
    }
    lines.push_back({5, ok,
                     "shrink steps=" + std::to_string(shrinks) +
                         " window coders=" + std::to_string(coders) + " " + bad.str()});
    print(lines.back());
  }

  // 6: minimal parameters accepted, one below rejected
  {
    std::string d;
    bool ok = true;
    ok &= rejects_one_below([](std::int64_t l) { msa_shrink(mw_coder(16, l, 2), 16); }, 9, d,
                            "MW(n=16,p=2) l");
    ok &= rejects_one_below([](std::int64_t l) { rf_shrink(2, 8, l); }, 7, d, "RF(n=8) l");
    ok &= rejects_one_below([](std::int64_t l) { rf_shrink(2, 16, l); }, 9, d, "RF(n=16) l");
    ok &= rejects_one_below(
        [](std::int64_t l) { msa_shrink(enp_coder(16, l, SymbolFunction::identity(2)), 16); }, 10,
        d, "ENP(n=16) l");
    ok &= rejects_one_below([](std::int64_t l) { msa_shrink(mp_coder(2, 16, l, 3), 16); }, 8, d,
                            "MP(n=16,p=3) l");
    ok &= rejects_one_below([](std::int64_t n) { build_ab(n); }, 5, d, "AB n");
    lines.push_back({6, ok, d});
    print(lines.back());
  }

  // 7: overlapping minimal pairs in RF(n=8, l=7)
  {
    const ShrinkStep rf = rf_shrink(2, 8, 7);
    std::uint64_t overlapping = 0, failures = 0;
    for_each_word(2, 8, [&](const Word& x) {
      const auto pair = brute_min_pair(x, 7);
      if (!pair || pair->second >= pair->first + 7) return;
      ++overlapping;
      const auto found = find_window_pair(x, WindowMap::identity(2, 7));
      if (!found || found->first != pair->first || found->second != pair->second) {
        ++failures;
        return;
      }
      const auto back = rf.xi_inv(rf.xi(x));
      if (!back || *back != x) ++failures;
    });
    lines.push_back({7, failures == kAllowedFailures && overlapping > 0,
                     "overlapping violating words=" + std::to_string(overlapping) +
                         " failures=" + std::to_string(failures)});
    print(lines.back());
  }

  // 8: overlap-palindrome reduction
  lines.push_back(overlap_reduction());
  print(lines.back());

  const auto secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool all = true;
  for (const auto& l : lines) all = all && l.pass;
  std::printf("summary: %s (%.1f s)\n", all ? "all criteria passed" : "FAILURES", secs);
  return all ? 0 : 1;
}
