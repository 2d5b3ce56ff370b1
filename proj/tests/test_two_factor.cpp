#include <doctest.h>

#include <algorithm>
#include <set>

#include "oddgraph/error.hpp"
#include "oddgraph/odd_graph.hpp"
#include "oddgraph/two_factor.hpp"
#include "oddgraph/verification.hpp"

using namespace oddgraph;

namespace {

Mask mask_of(std::initializer_list<int> positions) {
  Mask m = 0;
  for (int p : positions) m |= Mask{1} << p;
  return m;
}

std::vector<Mask> masks(const CycleList& c) {
  std::vector<Mask> out;
  for (const auto& r : c.rows) out.push_back(r.vertex.bits);
  return out;
}

// The unique neighbor of u whose shared position is p, by scanning every vertex.
Vertex brute_step(Vertex u, int p, int k) {
  Vertex found{};
  int hits = 0;
  for (Vertex v : all_of_weight(2 * k + 1, k))
    if ((u.bits & v.bits) == 0 && !v.has(p) && !u.has(p)) {
      found = v;
      ++hits;
    }
  CHECK(hits == 1);
  return found;
}

}  // namespace

TEST_CASE("hand-derived cycles") {
  const CycleList a = build_cycle_list(Germ::parse(2, "0"));
  CHECK(masks(a) == std::vector<Mask>{mask_of({3, 4}), mask_of({0, 2}), mask_of({1, 4}), mask_of({0, 3}), mask_of({1, 2})});
  CHECK(a.positions == std::vector<int>{1, 3, 2, 4, 0});

  const CycleList b = build_cycle_list(Germ::parse(2, "1"));
  CHECK(masks(b) == std::vector<Mask>{mask_of({2, 4}), mask_of({0, 1}), mask_of({2, 3}), mask_of({0, 4}), mask_of({1, 3})});
  CHECK(b.positions == std::vector<int>{3, 4, 1, 2, 0});

  const CycleList c = build_cycle_list(Germ::parse(3, "00"));
  CHECK(masks(c) == std::vector<Mask>{mask_of({4, 5, 6}), mask_of({0, 2, 3}), mask_of({1, 4, 6}), mask_of({0, 2, 5}),
                                      mask_of({1, 3, 6}), mask_of({0, 4, 5}), mask_of({1, 2, 3})});
  CHECK(c.positions == std::vector<int>{1, 5, 3, 4, 2, 6, 0});
}

TEST_CASE("cycle lists follow their positions") {
  for (int k = 1; k <= 6; ++k) {
    const int n = 2 * k + 1;
    const ClassIndex classes(k);
    for (const Germ& g : all_germs(k)) {
      const CycleList list = build_cycle_list(g, classes);
      REQUIRE(list.rows.size() == static_cast<std::size_t>(n));
      std::vector<int> sorted = list.positions;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < n; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
      CHECK(list.positions.back() == 0);
      CHECK(list.label(0)[0] == Symbol::number(0));
      CHECK(list.label(n - 1)[0] == Symbol::number(k));
      for (int m = 0; m < n; ++m) {
        const Vertex u = list.rows[static_cast<std::size_t>(m)].vertex;
        const Vertex v = list.rows[static_cast<std::size_t>((m + 1) % n)].vertex;
        const int p = list.positions[static_cast<std::size_t>(m)];
        CHECK(brute_step(u, p, k) == v);
        CHECK(shared_position(u, v, k) == p);
        CHECK(arc_color(u, v, k).color + arc_color(v, u, k).color == k);
        CHECK(list.label(m).support() == u);
        CHECK(list.label(m) == label_vertex(u, k));
      }
      // The closing arc carries colors (k, 0).
      CHECK(arc_color(list.rows.back().vertex, list.rows.front().vertex, k).color == k);
    }
  }
}

TEST_CASE("two-factor partitions the vertex set") {
  for (int k = 1; k <= 7; ++k) {
    const TwoFactor tf = build_two_factor(k, 4);
    CHECK(tf.cycles.size() == catalan(k));
    CHECK(check_two_factor_structure(tf).passed);
    std::vector<std::vector<Mask>> cycles;
    for (const auto& c : tf.cycles) cycles.push_back(masks(c));
    CHECK(check_cycle_cover(cycles, catalan(k), static_cast<std::uint64_t>(2 * k + 1), Universe(GraphKind::Odd, k)).passed);
  }
}

TEST_CASE("thread count does not change the two-factor") {
  const TwoFactor a = build_two_factor(6, 1);
  const TwoFactor b = build_two_factor(6, 5);
  REQUIRE(a.cycles.size() == b.cycles.size());
  for (std::size_t i = 0; i < a.cycles.size(); ++i) {
    CHECK(masks(a.cycles[i]) == masks(b.cycles[i]));
    CHECK(a.cycles[i].positions == b.cycles[i].positions);
  }
}

TEST_CASE("ascending order breaks generation at every k") {
  for (int k = 2; k <= 6; ++k) {
    int failures = 0;
    for (const Germ& g : all_germs(k)) {
      try {
        build_cycle_list(g, StepOrder::Ascending);
      } catch (const Error& e) {
        CHECK((e.code() == ErrorCode::Generation || e.code() == ErrorCode::Supplementation));
        ++failures;
      }
    }
    CHECK(failures > 0);
  }
}

TEST_CASE("underlined lists") {
  const auto rows = build_underlined_list(Germ::parse(2, "0"));
  std::vector<Symbol> column;
  for (const auto& r : rows) column.push_back(r[0]);
  CHECK(column == std::vector<Symbol>{Symbol::number(0), Symbol::under(2), Symbol::number(1), Symbol::under(1),
                                      Symbol::number(2)});
  for (int k = 1; k <= 6; ++k) {
    const int n = 2 * k + 1;
    for (const Germ& g : all_germs(k)) {
      const auto list = build_underlined_list(g);
      for (int m = 0; m < n; ++m) {
        const auto& row = list[static_cast<std::size_t>(m)];
        const Symbol expect = m % 2 == 0 ? Symbol::number(m / 2) : Symbol::under(k - m / 2);
        CHECK(row[0] == expect);
        const int pk = row.find_number(k);
        CHECK(row[(pk + 1) % n] == Symbol::under(k));
      }
    }
  }
}

TEST_CASE("class index") {
  const ClassIndex idx(3);
  for (Vertex v : all_of_weight(7, 3)) {
    const CycleRow row = idx.row_of(v);
    CHECK(rotate(bitstring_of_germ(germ_unrank(3, row.class_rank)), row.rotation, 7) == v);
  }
  CHECK_THROWS_AS(idx.rank_of_canonical(parse_bitstring("1000011")), Error);
}
