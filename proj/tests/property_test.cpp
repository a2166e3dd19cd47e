// Randomized properties with hand-rolled generators and fixed seeds.
#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "pcc/enumerative.hpp"
#include "pcc/global.hpp"
#include "pcc/index_coding.hpp"
#include "pcc/local.hpp"
#include "support/scan_oracles.hpp"

namespace pcc {
namespace {

// Mixes uniform, sparse and near-periodic words so that constraints are
// violated often enough to exercise the step map.
class WordGen {
 public:
  explicit WordGen(std::uint64_t seed) : rng_(seed) {}

  Word operator()(Alphabet q, std::size_t len) {
    std::vector<Symbol> s(len);
    switch (pick(3)) {
      case 0:
        for (auto& v : s) v = static_cast<Symbol>(pick(q));
        break;
      case 1:
        for (auto& v : s) v = pick(8) == 0 ? static_cast<Symbol>(1 + pick(q - 1)) : 0;
        break;
      default: {
        const std::size_t period = 1 + pick(4);
        std::vector<Symbol> seed(period);
        for (auto& v : seed) v = static_cast<Symbol>(pick(q));
        for (std::size_t i = 0; i < len; ++i) s[i] = seed[i % period];
        for (std::size_t f = pick(3); f > 0 && len > 0; --f) {
          s[pick(len)] = static_cast<Symbol>(pick(q));
        }
      }
    }
    return Word(std::move(s), q);
  }

  std::size_t pick(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

struct Case {
  std::string label;
  std::function<CodecSpec()> make;
  std::function<bool(const Word&)> independent_check;
};

std::size_t ceil_sqrt_bound_lo(std::size_t n) {
  std::size_t t = 0;
  while (2 * t < n && (n - 2 * t) * (n - 2 * t) > 4 * n) ++t;
  return t;
}

std::vector<Case> cases() {
  std::vector<Case> out;
  out.push_back({"mw", [] { return build_one_symbol(msa_shrink(mw_coder(128, 18, 3), 128)); },
                 [](const Word& y) { return test::all_windows_weight_at_least(y, 18, 3); }});
  out.push_back({"lab", [] { return build_one_symbol(msa_shrink(lab_coder(64, 24, 4, 20), 64)); },
                 [](const Word& y) { return test::all_windows_weight_within(y, 24, 4, 20); }});
  out.push_back({"mp4", [] { return build_one_symbol(msa_shrink(mp_coder(4, 64, 8, 4), 64)); },
                 [](const Word& y) { return test::all_windows_period_at_least(y, 8, 4); }});
  out.push_back(
      {"enp",
       [] { return build_one_symbol(msa_shrink(enp_coder(64, 14, SymbolFunction::identity(2)), 64)); },
       [](const Word& y) { return !test::has_palindrome_of_length(y, 14); }});
  out.push_back({"mpl", [] { return build_mpl(2, 64); },
                 [](const Word& y) { return !test::has_palindrome_at_least(y, 16); }});
  out.push_back({"rf", [] { return build_one_symbol(rf_shrink(2, 64, 13)); },
                 [](const Word& y) { return !test::has_repeat(y, 13); }});
  out.push_back({"rss", [] { return build_one_symbol(rss_shrink(64, 7)); },
                 [](const Word& y) { return !test::has_rc_pair(y, 7, 7); }});
  out.push_back({"ss", [] { return build_ss(32); },
                 [](const Word& y) { return !test::has_rc_pair(y, 8, 1); }});
  out.push_back({"ab", [] { return build_ab(64); },
                 [](const Word& y) {
                   const std::size_t lo = ceil_sqrt_bound_lo(64);
                   const std::size_t w = test::hamming(y);
                   return w >= lo && w <= 64 - lo;
                 }});
  out.push_back({"mw+mp",
                 [] {
                   return build_one_symbol(build_intersection(
                       {msa_shrink(mw_coder(64, 12, 2, 1), 64, 1),
                        msa_shrink(mp_coder(2, 64, 12, 3, 1), 64, 1)}));
                 },
                 [](const Word& y) {
                   return test::all_windows_weight_at_least(y, 12, 2) &&
                          test::all_windows_period_at_least(y, 12, 3);
                 }});
  return out;
}

TEST(RandomRoundTripProperty, EveryCodec) {
  WordGen gen(0x5eed);
  for (const auto& c : cases()) {
    SCOPED_TRACE(c.label);
    const CodecSpec codec = c.make();
    std::uint64_t stepped = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      const Word x = gen(codec.q, codec.k);
      const auto out = encode(codec, x, true);
      ASSERT_TRUE(c.independent_check(out.codeword)) << to_digits(x);
      ASSERT_EQ(decode(codec, out.codeword), x) << to_digits(x);
      // the walk never revisits a word
      const auto& seen = *out.trace.visited;
      ASSERT_EQ(std::set<Word>(seen.begin(), seen.end()).size(), seen.size());
      stepped += out.trace.iterations > 0;
    }
    EXPECT_GT(stepped, 0u) << "generator never violated the constraint";
  }
}

TEST(MinimalPeriodProperty, AgreesWithBorderComputation) {
  for (std::size_t len = 1; len <= 12; ++len) {
    for_each_word(2, len, [&](const Word& w) {
      ASSERT_EQ(minimal_period(w.symbols()), test::period_via_border(test::raw(w)))
          << to_digits(w);
    });
  }
  WordGen gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = gen(4, 1 + gen.pick(40));
    ASSERT_EQ(minimal_period(w.symbols()), test::period_via_border(test::raw(w)));
  }
}

TEST(ShrinkInverseProperty, RandomViolatingWords) {
  WordGen gen(23);
  const std::vector<ShrinkStep> steps = {
      msa_shrink(mw_coder(200, 21, 3), 200), rf_shrink(2, 200, 17),
      rf_shrink(4, 100, 9, WindowMap::uniform(SymbolFunction::shift(4, 2), 9)),
      rss_shrink(100, 9), ab_shrink_pair(200).first, ab_shrink_pair(200).second};
  for (const auto& s : steps) {
    SCOPED_TRACE(s.name);
    int violated = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      const Word x = gen(s.q, s.n);
      if (s.in_c(x)) continue;
      ++violated;
      const Word y = s.xi(x);
      ASSERT_EQ(y.size(), s.target_len());
      ASSERT_EQ(s.xi_inv(y), x);
    }
    EXPECT_GT(violated, 0);
  }
}

TEST(IndexCodingProperty, RoundTrip) {
  WordGen gen(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Alphabet q = static_cast<Alphabet>(2 + gen.pick(7));
    const std::size_t width = 1 + gen.pick(10);
    const std::uint64_t limit = saturating_pow(q, width);
    const std::uint64_t i = gen.pick(static_cast<std::size_t>(std::min<std::uint64_t>(limit, 1u << 30)));
    const Word w = encode_index(i, width, q);
    ASSERT_EQ(w.size(), width);
    ASSERT_EQ(decode_index(w), i);
  }
}

TEST(BoundedRankProperty, LargeLengths) {
  WordGen gen(9);
  const std::size_t n = 200;
  const std::size_t wmax = 60;
  const BigCount total = count_weight_le(n, wmax);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Symbol> s(n, 0);
    for (std::size_t f = gen.pick(wmax + 1); f > 0; --f) s[gen.pick(n)] = 1;
    const Word x(std::move(s), 2);
    const BigCount r = rank_bounded(x, wmax);
    ASSERT_LT(r, total);
    ASSERT_EQ(unrank_bounded(r, n, wmax), x);
  }
}

}  // namespace
}  // namespace pcc
