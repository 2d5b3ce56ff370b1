#include <doctest.h>

#include "oddgraph/germ.hpp"
#include "oddgraph/verification.hpp"

using namespace oddgraph;

TEST_CASE("universe") {
  const Universe odd(GraphKind::Odd, 2);
  CHECK(odd.size() == 10);
  CHECK(odd.contains(0b00011));
  CHECK_FALSE(odd.contains(0b00111));
  CHECK(odd.adjacent(0b00011, 0b01100));
  CHECK_FALSE(odd.adjacent(0b00011, 0b00110));
  const Universe mid(GraphKind::Middle, 2);
  CHECK(mid.size() == 20);
  CHECK(mid.adjacent(0b00011, 0b00111));
  CHECK(mid.adjacent(0b00111, 0b00011));
  CHECK_FALSE(mid.adjacent(0b00011, 0b01101));
}

TEST_CASE("Hamilton checker rejects broken cycles") {
  const Universe u(GraphKind::Odd, 2);
  // Petersen graph: a 9-cycle is the longest, so any 10-walk must fail.
  const std::vector<Mask> five{0b00011, 0b01100, 0b10001, 0b00110, 0b11000};
  CHECK_FALSE(check_hamiltonian(five, u).passed);
  std::vector<Mask> repeated(10, 0b00011);
  const CheckReport r = check_hamiltonian(repeated, u);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.counterexample.empty());
}

TEST_CASE("cycle cover checker") {
  const Universe u(GraphKind::Odd, 1);
  CHECK(check_cycle_cover({{0b001, 0b010, 0b100}}, 1, 3, u).passed);
  CHECK_FALSE(check_cycle_cover({{0b001, 0b010, 0b100}}, 2, 3, u).passed);
  CHECK_FALSE(check_cycle_cover({{0b001, 0b010, 0b010}}, 1, 3, u).passed);
  CHECK_FALSE(check_cycle_cover({{0b001, 0b011, 0b100}}, 1, 3, u).passed);
}

TEST_CASE("class census") {
  for (int k = 1; k <= 7; ++k) {
    const CheckReport r = check_class_census(k);
    CHECK(r.passed);
    CHECK(r.counts.at("classes") == catalan(k));
  }
}

TEST_CASE("hypertree checker") {
  CHECK(check_hypertree({{{0, 1, 2}, {1, 4, 0}}, {{0, 3, 4}, {0, 4, 5}}}, 5).passed);
  // Same bar at the shared vertex.
  CHECK_FALSE(check_hypertree({{{0, 1, 2}, {1, 4, 0}}, {{0, 3, 4}, {1, 4, 5}}}, 5).passed);
  // Cycle through two shared vertices.
  CHECK_FALSE(check_hypertree({{{0, 1, 2}, {1, 2, 3}}, {{0, 1, 3}, {4, 5, 6}}}, 4).passed);
  // Disconnected.
  CHECK_FALSE(check_hypertree({{{0, 1}, {1, 2}}, {{2, 3}, {1, 2}}}, 5).passed);
  // Out of range.
  CHECK_FALSE(check_hypertree({{{0, 9}, {1, 2}}}, 2).passed);
}

TEST_CASE("matching coloring checker") {
  // M_1: levels {001,010,100} and {011,101,110}; the 6-cycle splits into two matchings.
  std::vector<ColoredEdge> good{{0b001, 0b011, 1}, {0b010, 0b110, 1}, {0b100, 0b101, 1},
                                {0b001, 0b101, 2}, {0b010, 0b011, 2}, {0b100, 0b110, 2}};
  CHECK(check_matching_coloring(good, 1).passed);
  auto bad = good;
  bad[0].color = 2;
  CHECK_FALSE(check_matching_coloring(bad, 1).passed);
  bad = good;
  bad[0].upper = 0b110;
  CHECK_FALSE(check_matching_coloring(bad, 1).passed);
  bad = good;
  bad.pop_back();
  CHECK_FALSE(check_matching_coloring(bad, 1).passed);
}
