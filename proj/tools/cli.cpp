#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bentkit/bentkit.hpp"

namespace bentkit::cli {
namespace {

// Carries an exit code through the dispatch without printing twice.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputSource {
  std::string path;
  std::string hex;
  std::string anf;
  int n = 0;
};

void add_input_options(CLI::App& cmd, InputSource& src) {
  auto* path = cmd.add_option("-i,--input", src.path, "File holding a truth table (n=<int> + hex) or ANF text");
  auto* hex = cmd.add_option("--hex", src.hex, "Inline truth table hex digits (needs --n)");
  auto* anf = cmd.add_option("--anf", src.anf, "Inline ANF, e.g. \"x1*x2 + x3 + 1\"");
  path->excludes(hex)->excludes(anf);
  hex->excludes(anf);
  cmd.add_option("-n,--n", src.n, "Variable count for --hex (optional for ANF)");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BooleanFunction load_function(const InputSource& src) {
  const std::optional<int> n = src.n > 0 ? std::optional<int>(src.n) : std::nullopt;
  if (!src.hex.empty()) {
    if (!n) throw UsageError("--hex needs --n");
    return parse_hex(*n, src.hex);
  }
  if (!src.anf.empty()) return anf_to_truth_table(parse_anf(src.anf, n));
  if (src.path.empty()) throw UsageError("no input: pass --input, --hex or --anf");
  const std::string text = slurp(src.path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 2, "n=") == 0) return parse_truth_table(text);
  return anf_to_truth_table(parse_anf(text, n));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << text;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

int cmd_analyze(const InputSource& src, const std::string& csv, std::ostream& out) {
  const auto f = load_function(src);
  const auto spectrum = walsh_spectrum(f);
  const auto b = restricted_balance(f);
  out << "n=" << f.variables() << '\n'
      << "hex=" << to_hex(f) << '\n'
      << "anf=" << to_anf_text(truth_table_to_anf(f)) << '\n'
      << "wH=" << hamming_weight(f) << '\n'
      << "degree=" << algebraic_degree(f) << '\n'
      << "max_abs_walsh=" << spectrum.max_abs() << '\n'
      << "Nl=" << nonlinearity_from_spectrum(spectrum) << '\n'
      << "bent=" << yes_no(f.variables() % 2 == 0 && is_bent(spectrum)) << '\n'
      << "zeros_even=" << b.zeros_even << '\n'
      << "ones_even=" << b.ones_even << '\n'
      << "zeros_odd=" << b.zeros_odd << '\n'
      << "ones_odd=" << b.ones_odd << '\n'
      << "balanced_even=" << yes_no(b.balanced_even) << '\n'
      << "balanced_odd=" << yes_no(b.balanced_odd) << '\n';
  if (!csv.empty()) write_text(csv, std::string(function_csv_header()) + '\n' + function_csv_row(f) + '\n');
  return kSuccess;
}

int cmd_extend(const InputSource& src, int target_n, const std::vector<std::string>& offsets_hex,
               const std::string& output, const std::string& trace_path, std::ostream& out) {
  if (target_n % 2 != 0) throw UsageError("--target-n must be even, got " + std::to_string(target_n));
  const auto seed = load_function(src);
  if (target_n <= seed.variables())
    throw UsageError("--target-n " + std::to_string(target_n) + " must exceed the seed's n=" +
                     std::to_string(seed.variables()));
  const auto steps = static_cast<std::size_t>((target_n - seed.variables()) / 2);
  std::vector<LinearOffset> offsets;
  if (!offsets_hex.empty()) {
    if (offsets_hex.size() != steps)
      throw UsageError("got " + std::to_string(offsets_hex.size()) + " --offset values for " + std::to_string(steps) +
                       " extension steps");
    for (std::size_t k = 0; k < steps; ++k) {
      const std::string& h = offsets_hex[k];
      if (h.empty() || h.size() > 8 || h.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
        throw UsageError("--offset '" + h + "' is not a hex bit mask");
      const int m = seed.variables() + 2 * static_cast<int>(k);
      try {
        offsets.push_back(LinearOffset::unpack(m, static_cast<Point>(std::stoul(h, nullptr, 16))));
      } catch (const DomainError& e) {
        throw UsageError("--offset '" + h + "': " + e.what());
      }
    }
  }
  const auto trace = offsets.empty() ? build_chain(seed, target_n)
                                     : build_chain(seed, target_n, std::span<const LinearOffset>(offsets));

  if (!trace_path.empty()) {
    std::ostringstream csv;
    csv << "step,n,offset_hex,bent,Nl,balanced_even,balanced_odd,zeros_even,zeros_odd\n";
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
      const auto& s = trace.steps[k];
      std::ostringstream off;
      if (s.offset) off << std::hex << s.offset->packed();
      csv << k + 1 << ',' << s.n << ',' << off.str() << ',' << s.bent << ',' << s.nonlinearity << ','
          << s.balance.balanced_even << ',' << s.balance.balanced_odd << ',' << s.balance.zeros_even << ','
          << s.balance.zeros_odd << '\n';
    }
    write_text(trace_path, csv.str());
  }

  const std::string table = to_truth_table_text(trace.final_function);
  if (output.empty()) {
    out << table;
  } else {
    write_text(output, table);
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
      const auto& s = trace.steps[k];
      out << "step " << k + 1 << ": n=" << s.n << " bent=" << yes_no(s.bent) << " Nl=" << s.nonlinearity
          << " balanced_even=" << yes_no(s.balance.balanced_even)
          << " balanced_odd=" << yes_no(s.balance.balanced_odd) << '\n';
    }
  }
  return kSuccess;
}

void print_suite(const SuiteResult& r, std::ostream& out) {
  out << "suite=" << r.suite << " n=" << r.n << " mode=" << (r.exhaustive ? "exhaustive" : "sampled")
      << " checked=" << r.checked << " counterexamples=" << r.failures << '\n';
  for (const auto& note : r.notes) out << "  " << note << '\n';
}

int cmd_verify(const std::string& suite, int n, const VerifyOptions& opt, const std::string& csv, std::ostream& out) {
  std::vector<SuiteResult> results;
  auto run_one = [&](const std::string& name, bool skip_if_inapplicable) {
    try {
      if (name == "walsh") results.push_back(run_walsh_suite(n, opt));
      if (name == "nonlinearity") results.push_back(run_nonlinearity_suite(n, opt));
      if (name == "theorem4") results.push_back(run_theorem4_suite(n, opt));
      if (name == "algorithms") results.push_back(run_algorithms_suite(n, opt));
    } catch (const DomainError& e) {
      if (!skip_if_inapplicable) throw UsageError(e.what());
      out << "suite=" << name << " n=" << n << " skipped: " << e.what() << '\n';
    }
  };
  if (suite == "all") {
    for (const char* name : {"walsh", "nonlinearity", "theorem4", "algorithms"}) run_one(name, true);
  } else {
    run_one(suite, false);
  }
  std::uint64_t failures = 0;
  for (const auto& r : results) {
    print_suite(r, out);
    failures += r.failures;
  }
  if (!csv.empty()) {
    std::ostringstream rows;
    rows << function_csv_header() << '\n';
    for (const auto& r : results)
      for (const auto& f : r.population) rows << function_csv_row(f) << '\n';
    write_text(csv, rows.str());
  }
  out << "result=" << (failures == 0 ? "pass" : "fail") << '\n';
  return failures == 0 ? kSuccess : kCounterexample;
}

template <class Map>
std::string histogram(const Map& m) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, v] : m) {
    s << (first ? "" : ",") << k << ':' << v;
    first = false;
  }
  return s.str();
}

int cmd_enumerate(int n, unsigned threads, const std::string& csv, std::ostream& out) {
  if (n != 2 && n != 4)
    throw UsageError("exhaustive enumeration supports n = 2 or 4 only; for larger n use "
                     "`bentkit verify --suite theorem4 --sampled --n " + std::to_string(n) + "`");
  const auto s = oracle::enumerate_bent(n, threads);
  out << "n=" << s.n << '\n'
      << "total_functions=" << s.total_functions << '\n'
      << "bent_count=" << s.bent_count << '\n'
      << "even_balanced=" << s.even_balanced_count << '\n'
      << "odd_balanced=" << s.odd_balanced_count << '\n'
      << "both_balanced=" << s.both_balanced_count << '\n'
      << "bent_weights=" << histogram(s.bent_weights) << '\n'
      << "bent_nonlinearities=" << histogram(s.bent_nonlinearities) << '\n'
      << "fast_path_mismatches=" << s.fast_path_mismatches << '\n'
      << "counterexamples=" << s.counterexamples.size() << '\n';
  for (const auto& f : s.counterexamples) out << "counterexample=" << to_hex(f) << '\n';
  if (!csv.empty()) {
    std::ostringstream rows;
    rows << function_csv_header() << '\n';
    for (const auto& f : s.bent_functions) rows << function_csv_row(f) << '\n';
    write_text(csv, rows.str());
  }
  return s.counterexamples.empty() && s.fast_path_mismatches == 0 ? kSuccess : kCounterexample;
}

int cmd_seed(int n, std::uint64_t rng_seed, const std::string& output, std::ostream& out) {
  BooleanFunction f = [&] {
    try {
      return seed_bent(n, rng_seed);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }();
  const std::string table = to_truth_table_text(f);
  if (output.empty())
    out << table;
  else
    write_text(output, table);
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bent function analysis and parity-based Maiorana-McFarland extension"};
  app.name("bentkit");
  app.require_subcommand(1);

  InputSource analyze_src;
  std::string analyze_csv;
  auto* analyze = app.add_subcommand("analyze", "Walsh spectrum summary, nonlinearity and weight-class balance");
  add_input_options(*analyze, analyze_src);
  analyze->add_option("--csv", analyze_csv,
                      "Write a CSV row (function_hex,wH,Nl,bent,balanced_even,balanced_odd,zeros_even,zeros_odd)");

  InputSource extend_src;
  int target_n = 0;
  std::vector<std::string> offsets;
  std::string extend_out, trace_path;
  auto* extend_cmd = app.add_subcommand("extend", "Extend a bent seed by two variables per step");
  add_input_options(*extend_cmd, extend_src);
  extend_cmd->add_option("--target-n", target_n, "Final (even) variable count")->required();
  extend_cmd->add_option("--offset", offsets,
                         "Hex mask b = (a_0, a_bar, a_s) for one step, bit 0 = a_0; repeat once per step");
  extend_cmd->add_option("-o,--output", extend_out, "Write the final truth table here instead of stdout");
  extend_cmd->add_option("--trace", trace_path,
                         "Write the step trace as CSV (step,n,offset_hex,bent,Nl,balanced_even,balanced_odd,"
                         "zeros_even,zeros_odd)");

  std::string suite;
  int verify_n = 0;
  VerifyOptions opt;
  opt.threads = default_threads();
  std::string verify_csv;
  auto* verify = app.add_subcommand("verify", "Check fast paths and balance laws against brute-force oracles");
  verify->add_option("--suite", suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"walsh", "nonlinearity", "theorem4", "algorithms", "all"}));
  verify->add_option("-n,--n", verify_n, "Variable count")->required();
  verify->add_flag("--sampled", opt.sampled, "Sample instead of exhausting B_n");
  verify->add_option("--samples", opt.samples,
                     "Sample count (0 = suite default: theorem4 10000, algorithms 20 seeds, others 100)");
  verify->add_option("--rng-seed", opt.rng_seed, "Seed for sampled suites");
  verify->add_option("--threads", opt.threads, "Worker threads for sweeps");
  verify->add_option("--csv", verify_csv,
                     "Write CSV rows (function_hex,wH,Nl,bent,balanced_even,balanced_odd,zeros_even,zeros_odd) "
                     "for the bent functions covered by theorem4 and algorithms");

  int enumerate_n = 0;
  unsigned enumerate_threads = default_threads();
  std::string enumerate_csv;
  auto* enumerate = app.add_subcommand("enumerate", "Scan every truth table of B_2 or B_4");
  enumerate->add_option("-n,--n", enumerate_n, "Variable count (2 or 4)")->required();
  enumerate->add_option("--threads", enumerate_threads, "Worker threads");
  enumerate->add_option("--csv", enumerate_csv, "Write one CSV row per bent function");

  int seed_n = 0;
  std::uint64_t seed_rng = kDefaultRngSeed;
  std::string seed_out;
  auto* seed = app.add_subcommand("seed", "Random Maiorana-McFarland bent function");
  seed->add_option("-n,--n", seed_n, "Even variable count in [2, 16]")->required();
  seed->add_option("--rng-seed", seed_rng, "RNG seed");
  seed->add_option("-o,--output", seed_out, "Write the truth table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_src, analyze_csv, out);
    if (*extend_cmd) return cmd_extend(extend_src, target_n, offsets, extend_out, trace_path, out);
    if (*verify) return cmd_verify(suite, verify_n, opt, verify_csv, out);
    if (*enumerate) return cmd_enumerate(enumerate_n, enumerate_threads, enumerate_csv, out);
    if (*seed) return cmd_seed(seed_n, seed_rng, seed_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kFormatError;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kFormatError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kCounterexample;
  }
  return kUsageError;
}

}  // namespace bentkit::cli
