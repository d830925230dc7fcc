#pragma once

// Shared vocabulary: the step alphabet, the two legality modes, and the
// (a, b) parameter pair with its derived modulus a+b.

#include <numeric>
#include <string>

#include "cylpath/errors.hpp"

namespace cylpath {

// Up contributes +a to the running sum, Down contributes -b. Down orders
// before Up; every lexicographic order in the library uses that.
enum class Step : unsigned char { Down = 0, Up = 1 };

inline char step_char(Step s) { return s == Step::Up ? 'U' : 'D'; }

inline Step step_from_char(char c) {
  if (c == 'U') return Step::Up;
  if (c == 'D') return Step::Down;
  throw parse_error(std::string("bad direction character '") + c +
                    "', expected 'U' or 'D'");
}

// Strict forbids every illegal subword; ModM forbids only those whose length
// is a multiple of a+b. The two agree on zero-sum words when gcd(a,b) = 1.
enum class LegalityMode { Strict, ModM };

inline const char* mode_name(LegalityMode m) {
  return m == LegalityMode::Strict ? "strict" : "modm";
}

struct Params {
  int a;  // up-step size
  int b;  // down-step size

  Params(int up, int down) : a(up), b(down) {
    if (a < 1 || b < 1) throw precondition_error("step sizes must be >= 1");
  }

  int modulus() const { return a + b; }
  int gcd() const { return std::gcd(a, b); }
  bool coprime() const { return gcd() == 1; }

  // Strict when it coincides with ModM, otherwise the mode the bijections
  // live in.
  LegalityMode default_mode() const {
    return coprime() ? LegalityMode::Strict : LegalityMode::ModM;
  }

  bool operator==(const Params&) const = default;
};

inline long long step_value(const Params& p, Step s) {
  return s == Step::Up ? p.a : -p.b;
}

}  // namespace cylpath
