#pragma once

// Words over the alphabet {+a, -b}: parsing and printing, the zero-sum test,
// the two legality predicates, the quadratic scan that reports every illegal
// span, and the translation between words and cylinder cycles.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cylpath/cylinder.hpp"
#include "cylpath/params.hpp"

namespace cylpath {

struct Word {
  Params params;
  std::vector<Step> steps;
  bool operator==(const Word&) const = default;
};

// Running sums: heights(w)[i] is the sum of the first i steps, so the vector
// has size length+1 and starts at 0.
inline std::vector<long long> heights(const Word& w) {
  std::vector<long long> h(w.steps.size() + 1);
  h[0] = 0;
  for (std::size_t i = 0; i < w.steps.size(); ++i)
    h[i + 1] = h[i] + step_value(w.params, w.steps[i]);
  return h;
}

inline bool is_zero_sum(const Word& w) {
  long long s = 0;
  for (Step st : w.steps) s += step_value(w.params, st);
  return s == 0;
}

// Every span (i, j), 1-based inclusive, such that steps i..j sum to zero,
// step i is an up, and step j+1 exists and is a down; ModM keeps only spans
// whose length is a multiple of a+b. Sorted by start, then end. This is the
// straightforward O(L^2) scan and serves as the reference the linear
// is_legal below is tested against.
inline std::vector<std::pair<std::size_t, std::size_t>> find_illegal_subwords(
    const Word& w, LegalityMode mode) {
  const std::vector<long long> h = heights(w);
  const std::size_t len = w.steps.size();
  const std::size_t m = static_cast<std::size_t>(w.params.modulus());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i <= len; ++i) {
    if (w.steps[i - 1] != Step::Up) continue;
    for (std::size_t j = i; j + 1 <= len; ++j) {
      if (w.steps[j] != Step::Down) continue;  // step j+1
      if (h[j] != h[i - 1]) continue;          // steps i..j not zero-sum
      if (mode == LegalityMode::ModM && (j - i + 1) % m != 0) continue;
      out.emplace_back(i, j);
    }
  }
  return out;
}

// Linear-time legality. Key each position before its step: by the current
// height in Strict mode, by the cylinder vertex (position mod a+b, height)
// in ModM mode. A forbidden span ends exactly when a down departs a key some
// up already departed.
inline bool is_legal(const Word& w, LegalityMode mode) {
  const int m = w.params.modulus();
  std::unordered_set<long long> up_departed;
  long long y = 0;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const long long key = mode == LegalityMode::Strict
                              ? y
                              : y * m + static_cast<long long>(i % m);
    if (w.steps[i] == Step::Up) {
      up_departed.insert(key);
    } else if (up_departed.count(key)) {
      return false;
    }
    y += step_value(w.params, w.steps[i]);
  }
  return true;
}

// Token text, e.g. "+3-2-2+3-2" for a=3, b=2. Each token must be exactly +a
// or -b. Surrounding whitespace is tolerated; an empty body is the empty
// word.
inline Word parse_word(const Params& p, std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return Word{p, {}};
  const auto last = text.find_last_not_of(" \t\r\n");
  text = text.substr(first, last - first + 1);

  std::vector<Step> steps;
  std::size_t i = 0;
  while (i < text.size()) {
    const char sign = text[i];
    if (sign != '+' && sign != '-')
      throw parse_error("expected '+' or '-' at position " +
                        std::to_string(i + 1) + " of word text");
    ++i;
    int value = 0;
    const auto res =
        std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr == text.data() + i)
      throw parse_error("missing step size after '" + std::string(1, sign) +
                        "' at position " + std::to_string(i) + " of word text");
    i = static_cast<std::size_t>(res.ptr - text.data());
    if (sign == '+') {
      if (value != p.a)
        throw parse_error("up tokens must be +" + std::to_string(p.a) +
                          ", got +" + std::to_string(value));
      steps.push_back(Step::Up);
    } else {
      if (value != p.b)
        throw parse_error("down tokens must be -" + std::to_string(p.b) +
                          ", got -" + std::to_string(value));
      steps.push_back(Step::Down);
    }
  }
  return Word{p, std::move(steps)};
}

inline std::string format_word(const Word& w) {
  const std::string up = "+" + std::to_string(w.params.a);
  const std::string down = "-" + std::to_string(w.params.b);
  std::string out;
  out.reserve(w.steps.size() * up.size());
  for (Step s : w.steps) out += s == Step::Up ? up : down;
  return out;
}

// A zero-sum word whose length is a multiple of a+b walks the cylinder from
// the origin and closes up; word heights and cycle heights coincide. Other
// lengths (possible only when gcd(a,b) > 1) do not return to column 0 and
// are rejected.
inline CylCycle word_to_cycle(const Word& w) {
  if (!is_zero_sum(w))
    throw precondition_error("word is not zero-sum: its walk does not close");
  if (w.steps.size() % static_cast<std::size_t>(w.params.modulus()) != 0)
    throw precondition_error(
        "word length is not a multiple of a+b: its walk does not close on "
        "the cylinder");
  return CylCycle(w.params, Vertex{0, 0}, w.steps);
}

inline Word cycle_to_word(const CylCycle& c) {
  if (!(c.start() == Vertex{0, 0}))
    throw precondition_error("cycle does not start at the origin");
  return Word{c.params(), c.dirs()};
}

}  // namespace cylpath
