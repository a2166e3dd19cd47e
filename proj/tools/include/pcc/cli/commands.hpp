#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pcc/codec.hpp"

namespace pcc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

enum class TextFormat { Bits, Dna };

TextFormat default_format(Alphabet q);
std::string format_word(const Word& w, TextFormat format);
Word parse_word(std::string_view text, TextFormat format);

// Line-oriented commands. Blank lines and lines starting with '#' are
// skipped. On a bad line the 1-based line number goes to err and the
// command returns kExitDataError.
int cmd_encode(const CodecSpec& codec, TextFormat format, std::istream& in, std::ostream& out,
               std::ostream& err);
int cmd_decode(const CodecSpec& codec, TextFormat format, std::istream& in, std::ostream& out,
               std::ostream& err);
int cmd_check(const CodecSpec& codec, TextFormat format, std::istream& in, std::ostream& out,
              std::ostream& err);

struct StatsOptions {
  bool exhaustive = false;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
};
int cmd_stats(const CodecSpec& codec, const StatsOptions& options, std::ostream& out,
              std::ostream& err);

// Writes DOT to `dot` and the graph report to `report`.
int cmd_graph(const CodecSpec& codec, std::ostream& dot, std::ostream& report, std::ostream& err);

// Full command-line entry point; `-` for --input/--output maps to in/out.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pcc::cli
