#pragma once

// Small constructors used across the test files: build steps, words, laps
// and lap sequences from "UDD"-style direction strings.

#include <initializer_list>
#include <string>
#include <vector>

#include "cylpath/cylpath.hpp"

inline std::vector<cylpath::Step> steps(const std::string& dirs) {
  std::vector<cylpath::Step> out;
  out.reserve(dirs.size());
  for (char c : dirs) out.push_back(cylpath::step_from_char(c));
  return out;
}

inline cylpath::Word make_word(const cylpath::Params& p,
                               const std::string& dirs) {
  return cylpath::Word{p, steps(dirs)};
}

inline cylpath::LapCycle make_lap(const cylpath::Params& p,
                                  const std::string& dirs) {
  return cylpath::LapCycle(p, steps(dirs));
}

inline cylpath::LapSequence make_laps(const cylpath::Params& p,
                                      std::initializer_list<std::string> ls) {
  std::vector<cylpath::LapCycle> laps;
  for (const std::string& s : ls) laps.push_back(make_lap(p, s));
  return cylpath::LapSequence(p, std::move(laps));
}

// All 2^len direction sequences of the given length, as words.
inline std::vector<cylpath::Word> all_words(const cylpath::Params& p,
                                            int len) {
  std::vector<cylpath::Word> out;
  out.reserve(std::size_t{1} << len);
  for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
    std::vector<cylpath::Step> st(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
      st[i] = (mask >> i) & 1 ? cylpath::Step::Up : cylpath::Step::Down;
    out.push_back(cylpath::Word{p, std::move(st)});
  }
  return out;
}
