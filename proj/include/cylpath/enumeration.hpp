#pragma once

// Counting, exhaustive enumeration, ranking and uniform sampling of legal
// words, and the self-check that pits the closed-form count, the brute-force
// enumeration, and the bijection pipeline against each other.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cylpath/bijections.hpp"
#include "cylpath/cylinder.hpp"
#include "cylpath/params.hpp"
#include "cylpath/words.hpp"

namespace cylpath {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt pow_big(BigInt base, unsigned long long exp) {
  BigInt r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

// Number of lap cycles, i.e. the branching factor per lap.
inline BigInt lap_count(const Params& p) { return binomial(p.modulus(), p.a); }

// Closed form for the number of legal zero-sum words of length (a+b)n.
// With c = gcd(a,b): ModM counts C(a+b, a)^n, Strict counts
// C((a+b)/c, a/c)^(cn); the two coincide when c = 1.
inline BigInt count_formula(const Params& p, int n, LegalityMode mode) {
  if (n < 0) throw precondition_error("n must be nonnegative");
  if (mode == LegalityMode::ModM)
    return pow_big(lap_count(p), static_cast<unsigned long long>(n));
  const int c = p.gcd();
  return pow_big(binomial(p.modulus() / c, p.a / c),
                 static_cast<unsigned long long>(c) * n);
}

// Exhaustive enumeration is exponential in (a+b)n, so refuse beyond this
// unless the caller overrides.
inline constexpr long long kBruteForceGuard = 24;

inline void check_brute_force_size(const Params& p, int n, bool force) {
  const long long len = static_cast<long long>(p.modulus()) * n;
  if (!force && len > kBruteForceGuard)
    throw size_guard_error("(a+b)*n = " + std::to_string(len) + " exceeds " +
                           std::to_string(kBruteForceGuard) +
                           "; exhaustive enumeration would be too large "
                           "(pass --force to proceed anyway)");
}

// All legal zero-sum words of length (a+b)n in lexicographic order (down
// before up). Backtracking over the remaining up/down budgets with the same
// key-tracking scheme as is_legal, undone on backtrack, so illegal prefixes
// are pruned immediately.
inline std::vector<Word> brute_force_legal_words(const Params& p, int n,
                                                 LegalityMode mode,
                                                 bool force = false) {
  if (n < 0) throw precondition_error("n must be nonnegative");
  check_brute_force_size(p, n, force);
  const std::size_t len = static_cast<std::size_t>(p.modulus()) * n;
  const int m = p.modulus();

  std::vector<Word> out;
  std::vector<Step> cur;
  cur.reserve(len);
  std::unordered_map<long long, int> up_departed;  // key -> open up departures
  long long y = 0;
  long long ups_left = static_cast<long long>(p.b) * n;
  long long downs_left = static_cast<long long>(p.a) * n;

  const auto rec = [&](const auto& self, std::size_t t) -> void {
    if (t == len) {
      out.push_back(Word{p, cur});
      return;
    }
    const long long key = mode == LegalityMode::Strict
                              ? y
                              : y * m + static_cast<long long>(t % m);
    if (downs_left > 0) {
      const auto it = up_departed.find(key);
      if (it == up_departed.end() || it->second == 0) {
        cur.push_back(Step::Down);
        y -= p.b;
        --downs_left;
        self(self, t + 1);
        ++downs_left;
        y += p.b;
        cur.pop_back();
      }
    }
    if (ups_left > 0) {
      ++up_departed[key];
      cur.push_back(Step::Up);
      y += p.a;
      --ups_left;
      self(self, t + 1);
      ++ups_left;
      y -= p.a;
      cur.pop_back();
      --up_departed[key];
    }
  };
  rec(rec, 0);
  return out;
}

// Lexicographic rank of a lap among the C(a+b, a) laps, down before up.
inline BigInt rank_lap_cycle(const LapCycle& lap) {
  int u = lap.params().b;
  int d = lap.params().a;
  BigInt r = 0;
  for (Step s : lap.dirs()) {
    if (s == Step::Up) {
      r += binomial(u + d - 1, u);  // laps that put a down here instead
      --u;
    } else {
      --d;
    }
  }
  return r;
}

inline LapCycle unrank_lap_cycle(const Params& p, const BigInt& rank) {
  if (rank < 0 || rank >= lap_count(p))
    throw precondition_error("lap rank " + rank.str() + " out of range");
  int u = p.b;
  int d = p.a;
  BigInt rest = rank;
  std::vector<Step> dirs;
  dirs.reserve(static_cast<std::size_t>(p.modulus()));
  for (int i = 0; i < p.modulus(); ++i) {
    if (d > 0) {
      const BigInt with_down = binomial(u + d - 1, u);
      if (rest < with_down) {
        dirs.push_back(Step::Down);
        --d;
        continue;
      }
      rest -= with_down;
    }
    dirs.push_back(Step::Up);
    --u;
  }
  return LapCycle(p, std::move(dirs));
}

// Rank of a legal word among all C(a+b, a)^n of its length: base-C(a+b, a)
// digits, the first lap least significant.
inline BigInt rank_word(const Word& w) {
  const Params& p = w.params;
  if (!is_zero_sum(w)) throw precondition_error("word is not zero-sum");
  if (w.steps.size() % static_cast<std::size_t>(p.modulus()) != 0)
    throw precondition_error("word length is not a multiple of a+b");
  if (!is_legal(w, LegalityMode::ModM))
    throw precondition_error("word is not legal, so it has no rank");
  const LapSequence seq = word_to_laps(w);
  const BigInt k = lap_count(p);
  BigInt r = 0;
  for (std::size_t i = seq.laps.size(); i-- > 0;)
    r = r * k + rank_lap_cycle(seq.laps[i]);
  return r;
}

inline Word unrank_word(const Params& p, int n, const BigInt& rank) {
  if (n < 0) throw precondition_error("n must be nonnegative");
  const BigInt k = lap_count(p);
  if (rank < 0 || rank >= pow_big(k, static_cast<unsigned long long>(n)))
    throw precondition_error("word rank " + rank.str() +
                             " out of range for n = " + std::to_string(n));
  BigInt rest = rank;
  std::vector<LapCycle> laps;
  laps.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    laps.push_back(unrank_lap_cycle(p, rest % k));
    rest /= k;
  }
  return laps_to_word(LapSequence(p, std::move(laps)));
}

// Uniform draw from [0, bound) built from whole 64-bit chunks of the
// generator, masked to the bit width of bound-1 and rejected when too big.
// Identical results on every platform for a given seed.
inline BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
  if (bound <= 0) throw precondition_error("sample space is empty");
  if (bound == 1) return 0;
  const unsigned bits = boost::multiprecision::msb(bound - 1) + 1;
  const BigInt mask = (BigInt(1) << bits) - 1;
  for (;;) {
    BigInt v = 0;
    for (unsigned got = 0; got < bits; got += 64) v = (v << 64) | rng();
    v &= mask;
    if (v < bound) return v;
  }
}

// `count` independent draws from one seeded stream.
inline std::vector<Word> sample_words(const Params& p, int n,
                                      std::uint64_t seed, int count) {
  if (n < 0) throw precondition_error("n must be nonnegative");
  if (count < 0) throw precondition_error("sample count must be nonnegative");
  std::mt19937_64 rng(seed);
  const BigInt space = pow_big(lap_count(p), static_cast<unsigned long long>(n));
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out.push_back(unrank_word(p, n, uniform_below(rng, space)));
  return out;
}

inline Word sample_word(const Params& p, int n, std::uint64_t seed) {
  return sample_words(p, n, seed, 1).front();
}

struct CountReport {
  Params params;
  int n;
  LegalityMode mode;
  BigInt formula_count;
  std::optional<BigInt> brute_count;
  std::optional<bool> agree;          // brute count equals the formula
  std::optional<bool> image_ok;       // lap sequences biject onto the legal set
  std::optional<bool> roundtrips_ok;  // all four round-trip identities held

  bool pass() const {
    return agree.value_or(false) && image_ok.value_or(false) &&
           roundtrips_ok.value_or(false);
  }
};

// Cross-checks formula against brute force for n = 1..n_max, and exercises
// the full bijection pipeline over every object of each size. The counting
// check honors the requested mode; the bijections are ModM creatures, so the
// image and round-trip checks always compare against the ModM-legal set.
inline std::vector<CountReport> verify(const Params& p, int n_max,
                                       LegalityMode mode, bool force = false) {
  if (n_max < 0) throw precondition_error("n_max must be nonnegative");
  check_brute_force_size(p, n_max, force);

  const std::vector<LapCycle> all_laps = enumerate_lap_cycles(p);
  std::vector<CountReport> reports;
  for (int n = 1; n <= n_max; ++n) {
    CountReport rep{p, n, mode, count_formula(p, n, mode), std::nullopt,
                    std::nullopt, std::nullopt, std::nullopt};
    const std::vector<Word> brute = brute_force_legal_words(p, n, mode, force);
    rep.brute_count = BigInt(brute.size());
    rep.agree = *rep.brute_count == rep.formula_count;

    const std::vector<Word> modm_words =
        mode == LegalityMode::ModM
            ? brute
            : brute_force_legal_words(p, n, LegalityMode::ModM, force);
    std::set<std::string> legal;
    for (const Word& w : modm_words) legal.insert(format_word(w));

    bool roundtrips = true;
    // one lap sequence per function from laps to words
    std::set<std::string> image;
    bool injective = true;
    std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
    for (;;) {
      std::vector<LapCycle> laps;
      laps.reserve(digit.size());
      for (std::size_t idx : digit) laps.push_back(all_laps[idx]);
      const LapSequence seq(p, std::move(laps));

      const WeightFunction wf = laps_to_weights(seq);
      if (!(weights_to_laps(wf) == seq)) roundtrips = false;
      const CylCycle cyc = weights_to_path(wf);
      if (!(path_to_weights(cyc) == wf)) roundtrips = false;
      const Word w = cycle_to_word(cyc);
      if (!is_legal(w, LegalityMode::ModM)) roundtrips = false;
      if (!image.insert(format_word(w)).second) injective = false;

      std::size_t pos = 0;
      while (pos < digit.size() && ++digit[pos] == all_laps.size()) {
        digit[pos] = 0;
        ++pos;
      }
      if (pos == digit.size()) break;
    }
    rep.image_ok = injective && image == legal;

    // and back again, starting from every legal word
    for (const Word& w : modm_words) {
      const CylCycle cyc = word_to_cycle(w);
      if (!is_downs_first(cyc)) roundtrips = false;
      const WeightFunction wf = path_to_weights(cyc);
      if (!(weights_to_path(wf) == cyc)) roundtrips = false;
      const LapSequence seq = weights_to_laps(wf);
      if (!(laps_to_weights(seq) == wf)) roundtrips = false;
      if (!(laps_to_word(seq) == w)) roundtrips = false;
    }
    rep.roundtrips_ok = roundtrips;
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace cylpath
