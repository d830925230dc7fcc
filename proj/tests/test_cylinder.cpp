#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "cylpath/cylpath.hpp"
#include "helpers.hpp"

using namespace cylpath;

TEST_CASE("ceiling heights") {
  const Params p(3, 2);
  CHECK(ceiling_height(p, 0) == 0);
  CHECK(ceiling_height(p, 1) == 3);
  CHECK(ceiling_height(p, 2) == 6);
  CHECK(ceiling_height(p, 3) == 4);
  CHECK(ceiling_height(p, 4) == 2);
}

TEST_CASE("the ceiling lies on the lattice") {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      const Params p(a, b);
      for (int x = 0; x < p.modulus(); ++x) {
        CAPTURE(a, b, x);
        REQUIRE(on_lattice(p, x, ceiling_height(p, x)));
      }
    }
}

TEST_CASE("vertex membership") {
  const Params p(3, 2);
  CHECK(vertex_valid(p, 0, 0));
  CHECK(vertex_valid(p, 2, 6));
  CHECK(vertex_valid(p, 1, 3));
  CHECK(vertex_valid(p, 1, -2));
  CHECK_FALSE(vertex_valid(p, 0, 5));   // above the ceiling
  CHECK_FALSE(vertex_valid(p, 1, 4));   // off the lattice
  CHECK_FALSE(vertex_valid(p, 2, 11));  // on the lattice, above the ceiling
  CHECK_FALSE(vertex_valid(p, 5, 0));   // column out of range
  CHECK_FALSE(vertex_valid(p, -1, 0));
}

TEST_CASE("edges move one column right, wrapping at a+b") {
  const Params p(3, 2);
  CHECK(step_from(p, Vertex{0, 0}, Step::Up) == Vertex{1, 3});
  CHECK(step_from(p, Vertex{0, 0}, Step::Down) == Vertex{1, -2});
  CHECK(step_from(p, Vertex{4, 2}, Step::Down) == Vertex{0, 0});
  CHECK(edge_head(p, Edge{Vertex{4, 2}, Step::Up}) == Vertex{0, 5});
}

TEST_CASE("cycle construction checks the start and the closure") {
  const Params p(2, 1);
  const CylCycle c(p, Vertex{0, 0}, steps("UDDUDD"));
  CHECK(c.length() == 6);
  CHECK(c.vertices().front() == c.vertices().back());
  CHECK_NOTHROW(CylCycle(p, Vertex{0, -3}, steps("UDD")));
  CHECK_NOTHROW(CylCycle(p, Vertex{0, 0}, {}));
  // start off the lattice
  CHECK_THROWS_AS(CylCycle(p, Vertex{1, 0}, steps("DDU")), precondition_error);
  // does not return to the start
  CHECK_THROWS_AS(CylCycle(p, Vertex{0, 0}, steps("UDU")), precondition_error);
  CHECK_THROWS_AS(CylCycle(p, Vertex{0, 0}, steps("UD")), precondition_error);
}

TEST_CASE("downs-first detection and its witness") {
  const Params p(2, 1);
  CHECK(is_downs_first(word_to_cycle(parse_word(p, "+2-1-1+2-1-1"))));
  CHECK(is_downs_first(CylCycle(p, Vertex{0, 0}, {})));

  const CylCycle bad = word_to_cycle(parse_word(p, "+2-1+2-1-1-1"));
  const auto w = downs_first_witness(bad);
  REQUIRE(w.has_value());
  CHECK(w->vertex == Vertex{2, 1});
  CHECK(w->up_step == 3);
  CHECK(w->down_step == 6);
}

TEST_CASE("downs-first cycles match modm legality exhaustively") {
  for (const Params p : {Params(2, 1), Params(2, 2), Params(3, 2)}) {
    for (int len = p.modulus(); len <= 12; len += p.modulus()) {
      for (const Word& w : all_words(p, len)) {
        if (!is_zero_sum(w)) continue;
        CAPTURE(p.a, p.b, format_word(w));
        REQUIRE(is_downs_first(word_to_cycle(w)) ==
                is_legal(w, LegalityMode::ModM));
      }
    }
  }
}

TEST_CASE("downs-first origin cycles never climb past the origin weld") {
  for (const Params p : {Params(2, 1), Params(3, 2)}) {
    for (int len = p.modulus(); len <= 12; len += p.modulus()) {
      for (const Word& w : all_words(p, len)) {
        if (!is_zero_sum(w) || !is_legal(w, LegalityMode::ModM)) continue;
        for (const Vertex& v : word_to_cycle(w).vertices())
          if (is_weld(v)) {
            CAPTURE(p.a, p.b, format_word(w), v.y);
            REQUIRE(v.y <= 0);
          }
      }
    }
  }
}

TEST_CASE("lap cycles enumerate in lexicographic order") {
  const Params p(2, 1);
  const auto laps = enumerate_lap_cycles(p);
  REQUIRE(laps.size() == 3);
  CHECK(laps[0].dir_string() == "DDU");
  CHECK(laps[1].dir_string() == "DUD");
  CHECK(laps[2].dir_string() == "UDD");

  const auto big = enumerate_lap_cycles(Params(3, 2));
  REQUIRE(big.size() == 10);
  CHECK(big.front().dir_string() == "DDDUU");
  CHECK(big.back().dir_string() == "UUDDD");
  std::set<std::string> distinct;
  for (const auto& lap : big) distinct.insert(lap.dir_string());
  CHECK(distinct.size() == 10);

  const auto tiny = enumerate_lap_cycles(Params(1, 1));
  REQUIRE(tiny.size() == 2);
  CHECK(tiny[0].dir_string() == "DU");
  CHECK(tiny[1].dir_string() == "UD");
}

TEST_CASE("lap cycle construction and profile") {
  const Params p(2, 1);
  const LapCycle lap = make_lap(p, "UDD");
  CHECK(lap.profile() == std::vector<long long>{0, 2, 1});
  CHECK(lap.to_cycle() == word_to_cycle(parse_word(p, "+2-1-1")));
  CHECK_THROWS_AS(make_lap(p, "UD"), precondition_error);    // too short
  CHECK_THROWS_AS(make_lap(p, "UUD"), precondition_error);   // too many ups
  CHECK_THROWS_AS(make_lap(p, "DDD"), precondition_error);   // no up at all
}

TEST_CASE("every lap stays at or below the ceiling") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const Params p(a, b);
      for (const LapCycle& lap : enumerate_lap_cycles(p)) {
        const auto prof = lap.profile();
        for (int x = 0; x < p.modulus(); ++x) {
          CAPTURE(a, b, lap.dir_string(), x);
          REQUIRE(prof[x] <= ceiling_height(p, x));
          REQUIRE(on_lattice(p, x, prof[x]));
        }
      }
    }
}

TEST_CASE("cycle text round-trips") {
  const Params p(2, 1);
  const CylCycle c = word_to_cycle(parse_word(p, "+2-1-1+2-1-1"));
  CHECK(format_cycle(c) == "0,0:UDDUDD");
  CHECK(parse_cycle(p, "0,0:UDDUDD") == c);
  CHECK(parse_cycle(p, " 0,-3:UDD \n") ==
        CylCycle(p, Vertex{0, -3}, steps("UDD")));
  CHECK(format_cycle(CylCycle(p, Vertex{0, 0}, {})) == "0,0:");
  CHECK(parse_cycle(p, "0,0:") == CylCycle(p, Vertex{0, 0}, {}));
}

TEST_CASE("cycle text rejects malformed or broken input") {
  const Params p(2, 1);
  CHECK_THROWS_AS(parse_cycle(p, ""), parse_error);
  CHECK_THROWS_AS(parse_cycle(p, "0 0 UDD"), parse_error);
  CHECK_THROWS_AS(parse_cycle(p, "0,0 UDD"), parse_error);
  CHECK_THROWS_AS(parse_cycle(p, "x,0:UDD"), parse_error);
  CHECK_THROWS_AS(parse_cycle(p, "0,y:UDD"), parse_error);
  CHECK_THROWS_AS(parse_cycle(p, "0,0:UXD"), parse_error);
  // well-formed text, but semantically not a cycle
  CHECK_THROWS_AS(parse_cycle(p, "1,0:DDU"), precondition_error);
  CHECK_THROWS_AS(parse_cycle(p, "0,0:UUD"), precondition_error);
}
