#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "pcc/enumerative.hpp"
#include "pcc/errors.hpp"
#include "pcc/index_coding.hpp"
#include "pcc/local.hpp"

namespace pcc {
namespace {

std::size_t hamming_weight(std::span<const Symbol> w) {
  return static_cast<std::size_t>(
      std::count_if(w.begin(), w.end(), [](Symbol s) { return s != 0; }));
}

void require_binary_window(std::span<const Symbol> w, std::size_t ell) {
  if (w.size() != ell) {
    throw DimensionMismatch("window coder expects windows of length " + std::to_string(ell));
  }
}

// Smallest ell with ell >= ceil(log2 n) + (p-1)*ceil(log2(ell+1)) + 1 + slack.
std::size_t mw_minimal_ell(std::size_t n, std::size_t p, std::size_t slack) {
  const std::size_t log_n = ceil_log(2, n);
  for (std::size_t ell = 1;; ++ell) {
    if (ell >= log_n + (p - 1) * ceil_log(2, ell + 1) + 1 + slack) return ell;
  }
}

}  // namespace

std::size_t minimal_period(std::span<const Symbol> w) {
  const std::size_t ell = w.size();
  for (std::size_t p = 1; p < ell; ++p) {
    if (std::equal(w.begin() + static_cast<std::ptrdiff_t>(p), w.end(), w.begin())) return p;
  }
  return ell;
}

WindowCoder mw_coder(std::size_t n, std::size_t ell, std::size_t p, std::size_t slack) {
  if (p == 0) throw ParameterViolation("mw: minimal weight p must be at least 1", 1);
  const std::size_t log_n = ceil_log(2, n);
  const std::size_t field = ceil_log(2, ell + 1);
  const std::size_t bound = log_n + (p - 1) * field + 1 + slack;
  if (ell < bound) {
    throw ParameterViolation(
        "mw: need l >= ceil(log n) + (p-1)*ceil(log(l+1)) + 1" +
            std::string(slack ? " + slack" : "") + " = " + std::to_string(bound) + ", got l=" +
            std::to_string(ell) + " (minimal admissible l = " +
            std::to_string(mw_minimal_ell(n, p, slack)) + ")",
        static_cast<std::int64_t>(mw_minimal_ell(n, p, slack)));
  }

  WindowCoder c;
  c.q = 2;
  c.ell = ell;
  c.ell_prime = (p - 1) * field;
  c.name = "mw(n=" + std::to_string(n) + ",l=" + std::to_string(ell) + ",p=" + std::to_string(p) +
           ")";
  c.in_w = [p](std::span<const Symbol> w) { return hamming_weight(w) < p; };
  c.chi = [ell, p, field](std::span<const Symbol> w) {
    require_binary_window(w, ell);
    std::vector<Symbol> out;
    out.reserve((p - 1) * field);
    std::size_t listed = 0;
    auto put = [&](std::size_t idx) {
      const Word f = encode_index(idx, field, 2);
      out.insert(out.end(), f.begin(), f.end());
      ++listed;
    };
    for (std::size_t t = 0; t < ell; ++t) {
      if (w[t] != 0) {
        if (listed == p - 1) throw DomainError("mw: chi applied to a window of weight >= p");
        put(t);
      }
    }
    while (listed < p - 1) put(ell);
    return Word(std::move(out), 2);
  };
  c.chi_inv = [ell, p, field](std::span<const Symbol> code) -> std::optional<Word> {
    if (code.size() != (p - 1) * field) return std::nullopt;
    std::vector<Symbol> w(ell, 0);
    bool in_padding = false;
    std::optional<std::size_t> last;
    for (std::size_t f = 0; f + 1 < p; ++f) {
      const std::uint64_t idx = decode_index(code.subspan(f * field, field), 2);
      if (idx > ell) return std::nullopt;
      if (idx == ell) {
        in_padding = true;
        continue;
      }
      // real indices strictly ascending, all before the dummies
      if (in_padding || (last && idx <= *last)) return std::nullopt;
      last = idx;
      w[idx] = 1;
    }
    return Word(std::move(w), 2);
  };
  return c;
}

WeightWindow lab_weight_window(std::size_t ell, std::size_t p1_num, std::size_t p1_den,
                               std::size_t p2_num, std::size_t p2_den) {
  if (p1_den == 0 || p2_den == 0) throw ParameterViolation("lab: zero denominator");
  const std::size_t lo = (p1_num * ell + p1_den - 1) / p1_den;
  const std::size_t hi = (p2_num * ell) / p2_den;
  return {lo, hi};
}

double lab_asymptotic_min_ell(std::size_t n, std::size_t ell, std::size_t lo, std::size_t hi) {
  const double l = static_cast<double>(ell);
  const double c = std::min(0.5 - static_cast<double>(lo) / l, static_cast<double>(hi) / l - 0.5);
  if (c <= 0) return std::numeric_limits<double>::infinity();
  return std::log(static_cast<double>(n)) / (c * c);
}

WindowCoder lab_coder(std::size_t n, std::size_t ell, std::size_t lo, std::size_t hi,
                      std::size_t slack) {
  if (lo > hi || hi > ell) {
    throw ParameterViolation("lab: need 0 <= lo <= hi <= l, got [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "] with l=" + std::to_string(ell));
  }
  const std::size_t log_n = ceil_log(2, n);
  if (ell < log_n + 1 + slack) {
    throw ParameterViolation("lab: window length " + std::to_string(ell) +
                                 " leaves no room for the index field",
                             static_cast<std::int64_t>(log_n + 1 + slack));
  }
  const std::size_t ell_prime = ell - log_n - 1 - slack;

  std::vector<std::size_t> weights;
  for (std::size_t w = 0; w <= ell; ++w) {
    if (w < lo || w > hi) weights.push_back(w);
  }
  auto ranker = std::make_shared<const WeightClassRanker>(ell, weights);
  const BigCount capacity = BigCount(1) << ell_prime;
  if (ranker->size() > capacity) {
    throw ParameterViolation("lab: |W| = " + ranker->size().str() + " exceeds 2^" +
                             std::to_string(ell_prime) + " = " + capacity.str() +
                             " (asymptotic regime ln(n)/c^2 = " +
                             std::to_string(lab_asymptotic_min_ell(n, ell, lo, hi)) + ")");
  }

  WindowCoder c;
  c.q = 2;
  c.ell = ell;
  c.ell_prime = ell_prime;
  c.name = "lab(n=" + std::to_string(n) + ",l=" + std::to_string(ell) + ",lo=" +
           std::to_string(lo) + ",hi=" + std::to_string(hi) + ")";
  c.in_w = [lo, hi](std::span<const Symbol> w) {
    const std::size_t wt = hamming_weight(w);
    return wt < lo || wt > hi;
  };
  c.chi = [ranker, ell_prime](std::span<const Symbol> w) {
    return encode_big(ranker->rank(w), ell_prime, 2);
  };
  c.chi_inv = [ranker, ell_prime](std::span<const Symbol> code) -> std::optional<Word> {
    if (code.size() != ell_prime) return std::nullopt;
    const BigCount r = decode_big(code, 2);
    if (r >= ranker->size()) return std::nullopt;
    return ranker->unrank(r);
  };
  return c;
}

WindowCoder mp_coder(Alphabet q, std::size_t n, std::size_t ell, std::size_t p,
                     std::size_t slack) {
  if (p == 0) throw ParameterViolation("mp: minimal period p must be at least 1", 1);
  const std::size_t bound = ceil_log(q, n) + p + 1 + slack;
  if (ell < bound) {
    throw ParameterViolation("mp: need l >= ceil(log n) + p + 1" +
                                 std::string(slack ? " + slack" : "") + " = " +
                                 std::to_string(bound) + ", got l=" + std::to_string(ell),
                             static_cast<std::int64_t>(bound));
  }

  WindowCoder c;
  c.q = q;
  c.ell = ell;
  c.ell_prime = p;
  c.name = "mp(n=" + std::to_string(n) + ",l=" + std::to_string(ell) + ",p=" + std::to_string(p) +
           ")";
  c.in_w = [p](std::span<const Symbol> w) {
    for (std::size_t d = 1; d < p && d < w.size(); ++d) {
      if (std::equal(w.begin() + static_cast<std::ptrdiff_t>(d), w.end(), w.begin())) return true;
    }
    return false;
  };
  c.chi = [q, p](std::span<const Symbol> w) {
    const std::size_t period = minimal_period(w);
    if (period >= p) throw DomainError("mp: chi applied to a window with minimal period >= p");
    std::vector<Symbol> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(period));
    out.push_back(1);
    out.resize(p, 0);
    return Word(std::move(out), q);
  };
  c.chi_inv = [q, ell, p](std::span<const Symbol> code) -> std::optional<Word> {
    if (code.size() != p) return std::nullopt;
    std::size_t marker = p;
    while (marker > 0 && code[marker - 1] == 0) --marker;
    if (marker == 0 || code[marker - 1] != 1) return std::nullopt;
    const std::size_t period = marker - 1;
    if (period == 0) return std::nullopt;
    std::vector<Symbol> w(ell);
    for (std::size_t t = 0; t < ell; ++t) w[t] = code[t % period];
    if (minimal_period(w) != period) return std::nullopt;
    return Word(std::move(w), q);
  };
  return c;
}

WindowCoder enp_coder(std::size_t n, std::size_t ell, const SymbolFunction& inv,
                      std::size_t slack) {
  if (!inv.is_involution()) throw ParameterViolation("enp: symbol map must be an involution");
  const Alphabet q = inv.alphabet();
  const std::size_t need = ceil_log(q, n) + 1 + slack;
  if (ell / 2 < need) {
    throw ParameterViolation("enp: need floor(l/2) >= ceil(log n) + 1" +
                                 std::string(slack ? " + slack" : "") + " = " +
                                 std::to_string(need) + ", got l=" + std::to_string(ell) +
                                 " (minimal admissible l = " + std::to_string(2 * need) + ")",
                             static_cast<std::int64_t>(2 * need));
  }
  const std::size_t half = (ell + 1) / 2;

  WindowCoder c;
  c.q = q;
  c.ell = ell;
  c.ell_prime = half;
  c.name = std::string(inv.is_identity() ? "enp" : "enp-rc") + "(n=" + std::to_string(n) +
           ",l=" + std::to_string(ell) + ")";
  c.in_w = [inv, ell](std::span<const Symbol> w) {
    for (std::size_t i = 0; i < ell - i; ++i) {
      if (w[i] != inv(w[ell - 1 - i])) return false;
    }
    return true;
  };
  c.chi = [q, half](std::span<const Symbol> w) { return Word(w.first(half), q); };
  c.chi_inv = [inv, q, ell, half](std::span<const Symbol> code) -> std::optional<Word> {
    if (code.size() != half) return std::nullopt;
    std::vector<Symbol> w(ell);
    for (std::size_t i = 0; i < half; ++i) {
      w[i] = code[i];
      w[ell - 1 - i] = inv(code[i]);
    }
    // odd length: the middle symbol must be a fixed point of the involution
    if (ell % 2 == 1 && inv(code[half - 1]) != code[half - 1]) return std::nullopt;
    return Word(std::move(w), q);
  };
  return c;
}

WindowCoder generic_coder(Alphabet q, std::size_t ell, std::size_t ell_prime,
                          std::vector<Word> forbidden) {
  for (const auto& w : forbidden) {
    if (w.size() != ell || w.alphabet() != q) {
      throw DimensionMismatch("generic coder: forbidden word " + to_digits(w) +
                              " is not a length-" + std::to_string(ell) + " word over q=" +
                              std::to_string(q));
    }
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  if (forbidden.size() > saturating_pow(q, ell_prime)) {
    throw ParameterViolation("generic coder: |W| = " + std::to_string(forbidden.size()) +
                             " exceeds q^l' = " + std::to_string(saturating_pow(q, ell_prime)));
  }
  auto list = std::make_shared<const std::vector<Word>>(std::move(forbidden));
  auto less = [](const Word& a, std::span<const Symbol> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  auto find = [list, less](std::span<const Symbol> w) -> std::optional<std::size_t> {
    auto it = std::lower_bound(list->begin(), list->end(), w, less);
    if (it == list->end() || !std::equal(it->begin(), it->end(), w.begin(), w.end())) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - list->begin());
  };

  WindowCoder c;
  c.q = q;
  c.ell = ell;
  c.ell_prime = ell_prime;
  c.name = "generic(l=" + std::to_string(ell) + ",|W|=" + std::to_string(list->size()) + ")";
  c.in_w = [find](std::span<const Symbol> w) { return find(w).has_value(); };
  c.chi = [find, q, ell_prime](std::span<const Symbol> w) {
    const auto r = find(w);
    if (!r) throw DomainError("generic coder: chi applied to a permitted window");
    return encode_index(*r, ell_prime, q);
  };
  c.chi_inv = [list, q](std::span<const Symbol> code) -> std::optional<Word> {
    const std::uint64_t r = decode_index(code, q);
    if (r >= list->size()) return std::nullopt;
    return (*list)[r];
  };
  return c;
}

CodecSpec build_mpl(Alphabet q, std::size_t n) {
  const std::size_t log_n = ceil_log(q, n);
  const std::size_t slack = intersection_slack(q, 2);
  const auto id = SymbolFunction::identity(q);
  std::vector<ShrinkStep> members;
  for (std::size_t ell : {2 * log_n + 4, 2 * log_n + 5}) {
    members.push_back(msa_shrink(enp_coder(n, ell, id, slack), n, slack));
  }
  CodecSpec spec = build_one_symbol(build_intersection(members));
  spec.name = "mpl(n=" + std::to_string(n) + ")";
  spec.description = "no palindrome of length >= " + std::to_string(2 * log_n + 4) +
                     "; members enp l=" + std::to_string(2 * log_n + 4) + " and l=" +
                     std::to_string(2 * log_n + 5);
  return spec;
}

}  // namespace pcc
