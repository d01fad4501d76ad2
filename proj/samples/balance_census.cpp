// Counts which weight class each bent function on 4 variables is balanced on.
#include <bentkit/bentkit.hpp>

#include <iostream>

int main() {
  using namespace bentkit;
  const auto s = oracle::enumerate_bent(4, 1);
  std::cout << "bent functions on 4 variables: " << s.bent_count << '\n'
            << "balanced on even weights:      " << s.even_balanced_count << '\n'
            << "balanced on odd weights:       " << s.odd_balanced_count << '\n'
            << "balanced on both:              " << s.both_balanced_count << '\n'
            << "balanced on neither:           " << s.counterexamples.size() << '\n';

  const auto g = anf_to_truth_table(parse_anf("x1*x2 + x3*x4", 4));
  const auto c = AffineSubspace::even_weight(4);
  std::cout << "x1*x2 + x3*x4 restricted to even weights:\n";
  for (Point a = 0; a < g.size(); ++a)
    std::cout << "  W(" << a << ") = " << restricted_walsh(g, c, a) << '\n';
}
