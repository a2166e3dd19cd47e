#include "pcc/shrink.hpp"

#include <memory>
#include <string>

#include "pcc/errors.hpp"
#include "pcc/index_coding.hpp"

namespace pcc {
namespace {

constexpr Symbol kStartMarker = 1;
constexpr Symbol kStepMarker = 0;

}  // namespace

CodecSpec build_one_symbol(const ShrinkStep& shrink) {
  if (shrink.slack != 0) {
    throw SlackMismatch("build_one_symbol needs a shrink with slack 0, '" + shrink.name +
                        "' has slack " + std::to_string(shrink.slack));
  }
  if (shrink.n < 2) throw DimensionMismatch("block length must be at least 2");

  auto s = std::make_shared<const ShrinkStep>(shrink);
  const Alphabet q = s->q;
  const std::size_t n = s->n;

  CodecSpec spec;
  spec.q = q;
  spec.n = n;
  spec.k = n - 1;
  spec.name = s->name;
  spec.psi = [q](const Word& x) {
    const Symbol marker[] = {kStartMarker};
    return concat({x.symbols(), marker}, q);
  };
  spec.psi_inv = [n](const Word& y) { return y.slice(0, n - 1); };
  spec.in_s = [](const Word& y) { return y.back() == kStartMarker; };
  spec.phi = [s, q](const Word& y) {
    const Symbol marker[] = {kStepMarker};
    return concat({s->xi(y).symbols(), marker}, q);
  };
  spec.phi_inv = [s, n](const Word& y) -> std::optional<Word> {
    if (y.back() != kStepMarker) return std::nullopt;
    return s->xi_inv(y.slice(0, n - 1));
  };
  spec.in_c = s->in_c;
  return validated(std::move(spec));
}

std::size_t intersection_slack(Alphabet q, std::size_t members) { return ceil_log(q, members); }

ShrinkStep build_intersection(const std::vector<ShrinkStep>& members) {
  if (members.empty()) throw DimensionMismatch("intersection needs at least one member");
  const Alphabet q = members.front().q;
  const std::size_t n = members.front().n;
  const std::size_t tag = intersection_slack(q, members.size());

  std::string name = "intersect(";
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& m = members[i];
    if (m.q != q || m.n != n) {
      throw DimensionMismatch("intersection member '" + m.name + "' has (q, n) = (" +
                              std::to_string(m.q) + ", " + std::to_string(m.n) +
                              "), expected (" + std::to_string(q) + ", " + std::to_string(n) +
                              ")");
    }
    if (m.slack != tag) {
      throw SlackMismatch("intersection member '" + m.name + "' has slack " +
                          std::to_string(m.slack) + ", expected ceil(log_" +
                          std::to_string(q) + " " + std::to_string(members.size()) +
                          ") = " + std::to_string(tag));
    }
    if (i) name += " + ";
    name += m.name;
  }
  name += ")";

  auto ms = std::make_shared<const std::vector<ShrinkStep>>(members);

  ShrinkStep out;
  out.q = q;
  out.n = n;
  out.slack = 0;
  out.name = name;
  out.in_c = [ms](const Word& x) {
    for (const auto& m : *ms) {
      if (!m.in_c(x)) return false;
    }
    return true;
  };
  out.xi = [ms, tag, q](const Word& x) {
    for (std::size_t i = 0; i < ms->size(); ++i) {
      const auto& m = (*ms)[i];
      if (!m.in_c(x)) {
        return concat({m.xi(x).symbols(), encode_index(i, tag, q).symbols()}, q);
      }
    }
    throw DomainError("intersection xi applied to a word satisfying every member");
  };
  out.xi_inv = [ms, tag, q, n](const Word& y) -> std::optional<Word> {
    if (y.size() != n - 1) return std::nullopt;
    const std::size_t body = n - 1 - tag;
    const std::uint64_t i = decode_index(y.view(body, tag), q);
    if (i >= ms->size()) return std::nullopt;
    auto x = (*ms)[i].xi_inv(y.slice(0, body));
    if (!x) return std::nullopt;
    // i must be the first violated member of the reconstructed word.
    for (std::size_t j = 0; j < i; ++j) {
      if (!(*ms)[j].in_c(*x)) return std::nullopt;
    }
    if ((*ms)[i].in_c(*x)) return std::nullopt;
    return x;
  };
  return out;
}

}  // namespace pcc
