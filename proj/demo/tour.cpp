// A short tour of the library: one word, all four representations, and the
// counting, ranking and sampling entry points.

#include <iostream>

#include "cylpath/cylpath.hpp"

int main() {
  using namespace cylpath;
  const Params p(2, 1);

  const Word w = parse_word(p, "-1-1+2+2-1-1");
  std::cout << "word      " << format_word(w) << "\n";
  std::cout << "legal     "
            << (is_legal(w, p.default_mode()) ? "yes" : "no") << "\n";

  const CylCycle cycle = word_to_cycle(w);
  std::cout << "cycle     " << format_cycle(cycle) << "\n";

  const WeightFunction wf = path_to_weights(cycle);
  std::cout << "weights\n" << format_weights(wf);

  const LapSequence laps = weights_to_laps(wf);
  std::cout << "laps\n" << format_laps(laps);
  std::cout << "restored  " << format_word(laps_to_word(laps)) << "\n";

  std::cout << "rank      " << rank_word(w).str() << "\n";
  std::cout << "legal words for n=2: "
            << count_formula(p, 2, p.default_mode()).str() << "\n";
  std::cout << "a sample  " << format_word(sample_word(p, 2, 7)) << "\n";
  return 0;
}
