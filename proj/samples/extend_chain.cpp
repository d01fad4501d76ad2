// Grows x1*x2 to a bent function on 10 variables, printing each step.
#include <bentkit/bentkit.hpp>

#include <iostream>

int main() {
  using namespace bentkit;
  const auto seed = anf_to_truth_table(parse_anf("x1*x2", 2));
  const auto trace = build_chain(seed, 10);

  std::cout << "seed " << to_anf_text(truth_table_to_anf(seed)) << "  Nl=" << nonlinearity(seed) << '\n';
  for (const auto& step : trace.steps) {
    std::cout << "n=" << step.n << "  bent=" << step.bent << "  Nl=" << step.nonlinearity
              << "  (bound " << bent_nonlinearity(step.n) << ")"
              << "  balanced on " << (step.balance.balanced_even ? "even" : "odd") << " weights\n";
  }
  std::cout << "n=4 ANF: " << to_anf_text(truth_table_to_anf(extend(seed))) << '\n';
}
