#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "cylpath/cylpath.hpp"
#include "helpers.hpp"

using namespace cylpath;

namespace {
using Spans = std::vector<std::pair<std::size_t, std::size_t>>;
}

TEST_CASE("word parsing accepts exact tokens and round-trips") {
  const Params p(3, 2);
  const Word w = parse_word(p, "-2+3+3-2-2-2+3-2-2+3");
  REQUIRE(w.steps.size() == 10);
  CHECK(w.steps[0] == Step::Down);
  CHECK(w.steps[1] == Step::Up);
  CHECK(format_word(w) == "-2+3+3-2-2-2+3-2-2+3");

  CHECK(parse_word(p, "  +3-2-2+3-2\n") == parse_word(p, "+3-2-2+3-2"));
  CHECK(parse_word(p, "").steps.empty());
  CHECK(parse_word(p, " \n ").steps.empty());
  CHECK(format_word(Word{p, {}}) == "");
}

TEST_CASE("word parsing rejects malformed text") {
  const Params p(3, 2);
  CHECK_THROWS_AS(parse_word(p, "+2-2"), parse_error);   // up must be +3
  CHECK_THROWS_AS(parse_word(p, "+3-3"), parse_error);   // down must be -2
  CHECK_THROWS_AS(parse_word(p, "3-2"), parse_error);    // missing sign
  CHECK_THROWS_AS(parse_word(p, "+3 -2"), parse_error);  // inner whitespace
  CHECK_THROWS_AS(parse_word(p, "+-3"), parse_error);
  CHECK_THROWS_AS(parse_word(p, "+3-"), parse_error);
  CHECK_THROWS_AS(parse_word(p, "UDD"), parse_error);
}

TEST_CASE("heights and zero-sum") {
  const Params p(2, 1);
  const Word w = make_word(p, "UDDUDD");
  CHECK(heights(w) == std::vector<long long>{0, 2, 1, 0, 2, 1, 0});
  CHECK(is_zero_sum(w));
  CHECK(is_zero_sum(Word{p, {}}));
  CHECK_FALSE(is_zero_sum(make_word(p, "UD")));
  CHECK_FALSE(is_zero_sum(make_word(Params(3, 2), "UU")));
}

TEST_CASE("illegal subword scan finds the only bad span") {
  const Params p(3, 2);
  const Word w = parse_word(p, "-2+3+3-2-2-2+3-2-2+3");
  const Spans expect{{3, 7}};
  CHECK(find_illegal_subwords(w, LegalityMode::Strict) == expect);
  // the span has length 5, so ModM flags it too
  CHECK(find_illegal_subwords(w, LegalityMode::ModM) == expect);
  CHECK_FALSE(is_legal(w, LegalityMode::Strict));
  CHECK_FALSE(is_legal(w, LegalityMode::ModM));
}

TEST_CASE("illegal subword scan, small example") {
  const Params p(2, 1);
  const Word w = parse_word(p, "+2-1+2-1-1-1");
  const Spans expect{{3, 5}};
  CHECK(find_illegal_subwords(w, LegalityMode::Strict) == expect);
  CHECK(find_illegal_subwords(w, LegalityMode::ModM) == expect);
}

TEST_CASE("span length matters only in modm mode") {
  const Params p(2, 2);
  const Word w = parse_word(p, "+2-2-2+2");
  CHECK(find_illegal_subwords(w, LegalityMode::Strict) == Spans{{1, 2}});
  CHECK(find_illegal_subwords(w, LegalityMode::ModM) == Spans{});
  CHECK_FALSE(is_legal(w, LegalityMode::Strict));
  CHECK(is_legal(w, LegalityMode::ModM));
}

TEST_CASE("fast legality agrees with the quadratic scan") {
  for (const Params p : {Params(2, 1), Params(2, 2), Params(3, 2)}) {
    for (int len = 0; len <= 10; ++len) {
      for (const Word& w : all_words(p, len)) {
        for (const LegalityMode mode :
             {LegalityMode::Strict, LegalityMode::ModM}) {
          CAPTURE(p.a, p.b, format_word(w), mode_name(mode));
          REQUIRE(is_legal(w, mode) ==
                  find_illegal_subwords(w, mode).empty());
        }
      }
    }
  }
}

TEST_CASE("strict and modm legality coincide on zero-sum words of coprime "
          "parameters") {
  for (const Params p : {Params(2, 1), Params(1, 2), Params(3, 2)}) {
    for (int len = 0; len <= 12; ++len) {
      for (const Word& w : all_words(p, len)) {
        if (!is_zero_sum(w)) continue;
        CAPTURE(p.a, p.b, format_word(w));
        REQUIRE(is_legal(w, LegalityMode::Strict) ==
                is_legal(w, LegalityMode::ModM));
      }
    }
  }
}

TEST_CASE("words become origin cycles and back") {
  const Params p(2, 1);
  const Word w = parse_word(p, "+2-1-1");
  const CylCycle c = word_to_cycle(w);
  CHECK(c.start() == Vertex{0, 0});
  CHECK(c.vertices() ==
        std::vector<Vertex>{{0, 0}, {1, 2}, {2, 1}, {0, 0}});
  CHECK(cycle_to_word(c) == w);

  const Word empty{p, {}};
  CHECK(cycle_to_word(word_to_cycle(empty)) == empty);
}

TEST_CASE("only closing words become cycles") {
  CHECK_THROWS_AS(word_to_cycle(make_word(Params(2, 1), "UD")),
                  precondition_error);
  // zero-sum but the column does not wrap around
  CHECK_THROWS_AS(word_to_cycle(make_word(Params(2, 2), "UD")),
                  precondition_error);
  const CylCycle off(Params(2, 1), Vertex{1, 2}, steps("DDU"));
  CHECK_THROWS_AS(cycle_to_word(off), precondition_error);
}

TEST_CASE("cycle translation preserves legality data exhaustively") {
  // over full cycle lengths, word heights equal cycle heights
  const Params p(3, 2);
  for (const Word& w : all_words(p, 10)) {
    if (!is_zero_sum(w)) continue;
    const CylCycle c = word_to_cycle(w);
    const auto h = heights(w);
    const auto vs = c.vertices();
    REQUIRE(vs.size() == h.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
      REQUIRE(vs[i].y == h[i]);
      REQUIRE(vs[i].x == static_cast<int>(i % 5));
    }
    REQUIRE(cycle_to_word(c) == w);
  }
}
