// One line per acceptance criterion. Exit status is nonzero if any fails.
#include <bentkit/bentkit.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using namespace bentkit;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < limit_seconds;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %d %s | %s | %.2fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs,
              limit_seconds, in_time ? "" : " TIMEOUT");
  std::fflush(stdout);
}

void info(const std::string& text) { std::printf("       info: %s\n", text.c_str()); }

BooleanFunction x1x2() { return anf_to_truth_table(parse_anf("x1*x2", 2)); }
BooleanFunction x1x2_x3x4() { return anf_to_truth_table(parse_anf("x1*x2 + x3*x4", 4)); }

std::vector<BooleanFunction> bent_b2() { return oracle::enumerate_bent(2, 1).bent_functions; }
std::vector<BooleanFunction> bent_b4() { return oracle::enumerate_bent(4, 1).bent_functions; }

// Seeds and offsets swept by the offset-law and transcription criteria.
std::vector<std::pair<BooleanFunction, LinearOffset>> offset_pairs() {
  std::vector<std::pair<BooleanFunction, LinearOffset>> pairs;
  for (const auto& g : bent_b2())
    for (Point b = 0; b < 16; ++b) pairs.emplace_back(g, LinearOffset::unpack(2, b));
  for (Point b = 0; b < 64; ++b) pairs.emplace_back(x1x2_x3x4(), LinearOffset::unpack(4, b));
  return pairs;
}

}  // namespace

int main() {
  criterion(1, "exhaustive B_4 gate", 60, [] {
    const auto s = oracle::enumerate_bent(4, 1);
    bool weights_ok = true;
    for (const auto& [w, count] : s.bent_weights) weights_ok &= (w == 6 || w == 10);
    const bool nl_ok = s.bent_nonlinearities.size() == 1 && s.bent_nonlinearities.begin()->first == 6;
    const bool ok = s.total_functions == 65536 && s.bent_count == 896 && weights_ok && nl_ok &&
                    s.counterexamples.empty() && s.fast_path_mismatches == 0;
    return Outcome{ok, "scanned " + std::to_string(s.total_functions) + ", bent " + std::to_string(s.bent_count) +
                           ", weights in {6,10}: " + (weights_ok ? "yes" : "no") + ", Nl all 6: " +
                           (nl_ok ? "yes" : "no") + ", balanced on neither class: " +
                           std::to_string(s.counterexamples.size())};
  });

  criterion(2, "oracle equivalence (FWHT, nonlinearity)", 120, [] {
    std::uint64_t checked = 0, bad = 0;
    VerifyOptions opt;
    for (int n = 1; n <= 4; ++n) {
      for (const auto& r : {run_walsh_suite(n, opt), run_nonlinearity_suite(n, opt)}) {
        checked += r.checked;
        bad += r.failures;
      }
    }
    for (int n : {6, 8, 10, 12}) {
      const auto r = run_walsh_suite(n, opt);
      checked += r.checked;
      bad += r.failures;
    }
    return Outcome{bad == 0, "functions checked " + std::to_string(checked) + ", mismatches " + std::to_string(bad)};
  });

  criterion(3, "construction chain x1x2 -> n=10", 5, [] {
    const auto trace = build_chain(x1x2(), 10);
    const std::int64_t expected[] = {6, 28, 120, 496};
    bool ok = trace.steps.size() == 4;
    std::string nls;
    for (std::size_t k = 0; ok && k < 4; ++k) {
      const auto& s = trace.steps[k];
      ok &= s.n == 4 + 2 * static_cast<int>(k) && s.bent && s.nonlinearity == expected[k] && s.balance.balanced_even;
      nls += (k ? "," : "") + std::to_string(s.nonlinearity);
    }
    return Outcome{ok, "Nl " + nls + ", bent and even-balanced at every step: " + (ok ? "yes" : "no")};
  });

  criterion(4, "offset law: balanced class odd iff a_0 = 1", 5, [] {
    std::uint64_t pairs = 0, not_bent = 0, law_failures = 0, corrected_failures = 0, failures_with_as = 0;
    for (const auto& [g, off] : offset_pairs()) {
      ++pairs;
      const auto f = extend_with_offset(g, off);
      if (!is_bent(f)) ++not_bent;
      const auto b = restricted_balance(f);
      const bool stated = off.a0 ? (b.balanced_odd && !b.balanced_even) : (b.balanced_even && !b.balanced_odd);
      if (!stated) {
        ++law_failures;
        failures_with_as += off.a_s;
      }
      const bool odd = balanced_class_for(off) == WeightClass::odd;
      if (b.balanced_odd != odd || b.balanced_even == odd) ++corrected_failures;
    }
    info("a_0 xor a_s law: " + std::to_string(pairs - corrected_failures) + "/" + std::to_string(pairs) +
         " pairs agree; every a_0-law failure has a_s = 1: " + (failures_with_as == law_failures ? "yes" : "no"));
    return Outcome{not_bent == 0 && law_failures == 0,
                   "pairs " + std::to_string(pairs) + ", not bent " + std::to_string(not_bent) +
                       ", class disagrees with a_0 in " + std::to_string(law_failures)};
  });

  criterion(5, "literal transcriptions match the closed forms", 60, [] {
    std::uint64_t checked = 0, bad = 0;
    for (const auto& seeds : {bent_b2(), bent_b4()})
      for (const auto& g : seeds) {
        ++checked;
        bad += oracle::literal_algorithm1(g) != extend(g);
      }
    for (const auto& [g, off] : offset_pairs()) {
      ++checked;
      bad += oracle::literal_algorithm2(g, off) != extend_with_offset(g, off);
    }
    return Outcome{bad == 0, "tables compared " + std::to_string(checked) + ", differing " + std::to_string(bad)};
  });

  criterion(6, "restricted-bent lifts and spectral sign identities", 120, [] {
    std::uint64_t seeds = 0, lift_failures = 0, item1 = 0, item2 = 0, item3 = 0, law = 0, positions = 0;
    for (const auto& all : {bent_b2(), bent_b4()})
      for (const auto& g : all) {
        ++seeds;
        const auto r = verify_spectral_sign_corollary(g);
        positions += r.positions;
        lift_failures += !r.lifts_bent();
        item1 += r.item1_failures.size();
        item2 += r.item2_failures.size();
        item3 += r.item3_failures.size();
        law += r.position_law_failures.size();
      }
    info("per-position law (sign of W_e0(a,1) from the balanced class of g + l_a): " + std::to_string(law) +
         " failures over " + std::to_string(positions) + " positions");
    return Outcome{lift_failures == 0 && item1 == 0 && item2 == 0 && item3 == 0,
                   "seeds " + std::to_string(seeds) + ", lifts not restricted-bent " + std::to_string(lift_failures) +
                       ", item 1 failures " + std::to_string(item1) + ", item 2 failures " + std::to_string(item2) +
                       ", item 3 failures " + std::to_string(item3) + " of " + std::to_string(positions) +
                       " positions"};
  });

  criterion(7, "even-weight code structure for n <= 12", 10, [] {
    int bad = 0;
    for (int n = 2; n <= 12; ++n) {
      const auto s = inspect_code_structure(partition(n));
      bad += !(s.contains_zero && s.xor_closed && s.min_nonzero_weight == 2 && s.odd_coset_relation);
    }
    return Outcome{bad == 0, "n = 2..12, violations " + std::to_string(bad)};
  });

  criterion(8, "sampled parity balance, 10^4 bent functions on n=6", 120, [] {
    VerifyOptions opt;
    opt.sampled = true;
    opt.samples = 10000;
    const auto v = verify_parity_balance_theorem(6, opt);
    return Outcome{v.tally.checked == 10000 && v.tally.holds(),
                   "checked " + std::to_string(v.tally.checked) + ", even-balanced " +
                       std::to_string(v.tally.even_balanced) + ", odd-balanced " +
                       std::to_string(v.tally.odd_balanced) + ", counterexamples " +
                       std::to_string(v.tally.counterexamples.size())};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
