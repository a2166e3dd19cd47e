#include "pcc/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "pcc/cli/constraint_spec.hpp"
#include "pcc/errors.hpp"
#include "pcc/oracle.hpp"

namespace pcc::cli {
namespace {

// Runs `handle` on every data line; stops at the first failure.
int for_each_line(std::istream& in, std::ostream& err,
                  const std::function<void(std::string_view)>& handle) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      handle(line);
    } catch (const Error& e) {
      err << "line " << number << ": " << e.what() << '\n';
      return kExitDataError;
    }
  }
  return kExitOk;
}

Word read_word(std::string_view text, TextFormat format, const CodecSpec& codec,
               std::size_t length) {
  Word w = parse_word(text, format);
  if (w.alphabet() != codec.q) {
    throw DimensionMismatch("word format does not match q=" + std::to_string(codec.q));
  }
  if (w.size() != length) {
    throw DimensionMismatch("expected " + std::to_string(length) + " symbols, got " +
                            std::to_string(w.size()));
  }
  return w;
}

}  // namespace

TextFormat default_format(Alphabet q) { return q == 4 ? TextFormat::Dna : TextFormat::Bits; }

std::string format_word(const Word& w, TextFormat format) {
  return format == TextFormat::Dna ? to_dna(w) : to_digits(w);
}

Word parse_word(std::string_view text, TextFormat format) {
  return format == TextFormat::Dna ? from_dna(text) : from_digits(text, 2);
}

int cmd_encode(const CodecSpec& codec, TextFormat format, std::istream& in, std::ostream& out,
               std::ostream& err) {
  return for_each_line(in, err, [&](std::string_view line) {
    const Word x = read_word(line, format, codec, codec.k);
    out << format_word(encode(codec, x).codeword, format) << '\n';
  });
}

int cmd_decode(const CodecSpec& codec, TextFormat format, std::istream& in, std::ostream& out,
               std::ostream& err) {
  return for_each_line(in, err, [&](std::string_view line) {
    const Word y = read_word(line, format, codec, codec.n);
    out << format_word(decode(codec, y), format) << '\n';
  });
}

int cmd_check(const CodecSpec& codec, TextFormat format, std::istream& in, std::ostream& out,
              std::ostream& err) {
  return for_each_line(in, err, [&](std::string_view line) {
    const Word y = read_word(line, format, codec, codec.n);
    out << (codec.in_c(y) ? '1' : '0') << '\n';
  });
}

int cmd_stats(const CodecSpec& codec, const StatsOptions& options, std::ostream& out,
              std::ostream& err) {
  if (options.exhaustive == options.samples.has_value()) {
    err << "stats needs exactly one of --exhaustive or --samples N\n";
    return kExitUsage;
  }
  oracle::VerifyReport report;
  try {
    report = options.exhaustive ? oracle::exhaustive_roundtrip(codec)
                                : oracle::sampled_roundtrip(codec, *options.samples, options.seed);
  } catch (const BoundExceeded& e) {
    err << e.what() << " (use --samples N --seed S)\n";
    return kExitUsage;
  }
  std::string title = codec.name + " (q=" + std::to_string(codec.q) + ", n=" +
                      std::to_string(codec.n) + ", k=" + std::to_string(codec.k) + ")";
  if (!codec.description.empty()) title += "; " + codec.description;
  oracle::write_summary(out, report, title);
  return report.passed() ? kExitOk : kExitDataError;
}

int cmd_graph(const CodecSpec& codec, std::ostream& dot, std::ostream& report_out,
              std::ostream& err) {
  oracle::VerifyReport report;
  try {
    report = oracle::check_graph(codec);
    oracle::write_dot(dot, codec);
  } catch (const BoundExceeded& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  oracle::write_summary(report_out, report, "state graph of " + codec.name);
  return report.passed() ? kExitOk : kExitDataError;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Parametric constrained codes: one-symbol-redundancy encoders and oracles", "pcc"};
  app.require_subcommand(1);

  std::string spec_text;
  unsigned q = 2;
  std::string format_name;
  std::string input = "-";
  std::string output = "-";
  StatsOptions stats;
  std::uint64_t samples = 0;
  std::string dot_path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--spec", spec_text, "Constraint, e.g. mw:n=16,l=9,p=2")->required();
    sub->add_option("--q", q, "Alphabet size")->check(CLI::IsMember({2u, 4u}));
    sub->add_option("--format", format_name, "Word text format")
        ->check(CLI::IsMember({"bits", "dna"}));
    sub->add_option("--input", input, "Input file or -");
    sub->add_option("--output", output, "Output file or -");
  };
  auto* encode_cmd = app.add_subcommand("encode", "Encode k-symbol words, one per line");
  auto* decode_cmd = app.add_subcommand("decode", "Decode n-symbol codewords, one per line");
  auto* check_cmd = app.add_subcommand("check", "Print 1/0 constraint membership per line");
  auto* stats_cmd = app.add_subcommand("stats", "Run the round-trip oracle and print a report");
  auto* graph_cmd = app.add_subcommand("graph", "Check the step graph and export DOT");
  for (auto* sub : {encode_cmd, decode_cmd, check_cmd, stats_cmd, graph_cmd}) common(sub);
  stats_cmd->add_flag("--exhaustive", stats.exhaustive, "Enumerate every input");
  auto* samples_opt = stats_cmd->add_option("--samples", samples, "Number of sampled inputs");
  stats_cmd->add_option("--seed", stats.seed, "Sampling seed");
  graph_cmd->add_option("--dot", dot_path, "Write DOT here (default or -: --output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  if (samples_opt->count()) stats.samples = samples;

  CodecSpec codec;
  TextFormat format = default_format(q);
  try {
    codec = build(parse_spec(spec_text, q));
    if (!format_name.empty()) format = format_name == "dna" ? TextFormat::Dna : TextFormat::Bits;
    if ((format == TextFormat::Dna) != (q == 4)) {
      throw ParseError("--format " + format_name + " does not match --q " + std::to_string(q));
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  std::unique_ptr<std::ifstream> in_file;
  std::unique_ptr<std::ofstream> out_file;
  if (input != "-") {
    in_file = std::make_unique<std::ifstream>(input);
    if (!*in_file) {
      err << "cannot open input " << input << '\n';
      return kExitUsage;
    }
  }
  if (output != "-") {
    out_file = std::make_unique<std::ofstream>(output);
    if (!*out_file) {
      err << "cannot open output " << output << '\n';
      return kExitUsage;
    }
  }
  std::istream& src = in_file ? *in_file : in;
  std::ostream& dst = out_file ? *out_file : out;

  if (encode_cmd->parsed()) return cmd_encode(codec, format, src, dst, err);
  if (decode_cmd->parsed()) return cmd_decode(codec, format, src, dst, err);
  if (check_cmd->parsed()) return cmd_check(codec, format, src, dst, err);
  if (stats_cmd->parsed()) return cmd_stats(codec, stats, dst, err);

  if (dot_path.empty() || dot_path == "-") {
    std::ostringstream discard;
    return cmd_graph(codec, dst, discard, err);
  }
  std::ofstream dot(dot_path);
  if (!dot) {
    err << "cannot open " << dot_path << '\n';
    return kExitUsage;
  }
  return cmd_graph(codec, dot, dst, err);
}

}  // namespace pcc::cli
