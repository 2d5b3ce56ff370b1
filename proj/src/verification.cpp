#include "oddgraph/verification.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

#include "oddgraph/error.hpp"
#include "oddgraph/germ.hpp"

namespace oddgraph {

const char* graph_kind_name(GraphKind kind) { return kind == GraphKind::Odd ? "odd" : "middle"; }

Universe::Universe(GraphKind kind, int k) : kind_(kind), k_(k) {
  if (k < 1 || k > kMaxOrder) fail(ErrorCode::Range, "k = " + std::to_string(k) + " outside [1, 30]");
}

std::uint64_t Universe::size() const {
  const std::uint64_t c = binomial(n(), k_);
  return kind_ == GraphKind::Odd ? c : 2 * c;
}

bool Universe::contains(Mask v) const {
  if (v & ~full_mask(n())) return false;
  const int w = std::popcount(v);
  return kind_ == GraphKind::Odd ? w == k_ : (w == k_ || w == k_ + 1);
}

bool Universe::adjacent(Mask a, Mask b) const {
  if (!contains(a) || !contains(b)) return false;
  if (kind_ == GraphKind::Odd) return (a & b) == 0;
  if (std::popcount(a) > std::popcount(b)) std::swap(a, b);
  return std::popcount(a) == k_ && std::popcount(b) == k_ + 1 && (a & ~b) == 0;
}

namespace {

void check_closed_walk(CheckReport& report, const std::vector<Mask>& cycle, const Universe& u, std::uint64_t index) {
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len && report.passed; ++i) {
    const Mask a = cycle[i];
    const Mask b = cycle[(i + 1) % len];
    if (!u.contains(a)) {
      report.fail("vertex outside the graph", {index, i, a});
    } else if (len > 1 && !u.adjacent(a, b)) {
      report.fail("consecutive vertices are not adjacent", {index, i, a, b});
    }
  }
}

}  // namespace

CheckReport check_cycle_cover(const std::vector<std::vector<Mask>>& cycles, std::uint64_t expected_count,
                              std::uint64_t expected_length, const Universe& universe) {
  CheckReport report("cycle-cover");
  report.counts["cycles"] = cycles.size();
  report.counts["vertices"] = universe.size();
  if (cycles.size() != expected_count)
    report.fail("wrong number of cycles", {cycles.size(), expected_count});
  std::unordered_set<Mask> seen;
  seen.reserve(static_cast<std::size_t>(universe.size()));
  for (std::size_t c = 0; c < cycles.size() && report.passed; ++c) {
    if (cycles[c].size() != expected_length) {
      report.fail("cycle of wrong length", {c, cycles[c].size(), expected_length});
      break;
    }
    check_closed_walk(report, cycles[c], universe, c);
    for (std::size_t i = 0; i < cycles[c].size() && report.passed; ++i)
      if (!seen.insert(cycles[c][i]).second) report.fail("vertex covered twice", {c, i, cycles[c][i]});
  }
  if (report.passed && seen.size() != universe.size())
    report.fail("cycles do not cover every vertex", {seen.size(), universe.size()});
  report.counts["covered"] = seen.size();
  return report;
}

CheckReport check_hamiltonian(const std::vector<Mask>& cycle, const Universe& universe) {
  CheckReport report("hamiltonian");
  report.counts["length"] = cycle.size();
  report.counts["vertices"] = universe.size();
  if (cycle.size() != universe.size()) {
    report.fail("cycle length differs from the vertex count", {cycle.size(), universe.size()});
    return report;
  }
  check_closed_walk(report, cycle, universe, 0);
  std::unordered_set<Mask> seen;
  seen.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size() && report.passed; ++i)
    if (!seen.insert(cycle[i]).second) report.fail("vertex repeated", {i, cycle[i]});
  return report;
}

CheckReport check_class_census(int k) {
  CheckReport report("class-census");
  const int n = 2 * k + 1;
  std::map<Rank, std::uint64_t> sizes;
  std::uint64_t total = 0;
  for (Vertex v : all_of_weight(n, k)) {
    ++total;
    const CanonicalForm cf = canonical_rotation(v, k);
    if (rotate(bitstring_of_germ(cf.germ), cf.rotation, n) != v) {
      report.fail("canonical rotation does not reproduce the vertex", {v.bits});
      break;
    }
    ++sizes[germ_rank(cf.germ)];
  }
  report.counts["vertices"] = total;
  report.counts["classes"] = sizes.size();
  if (report.passed && sizes.size() != catalan(k)) report.fail("class count differs from C_k", {sizes.size(), catalan(k)});
  for (const auto& [rank, size] : sizes)
    if (size != static_cast<std::uint64_t>(n)) report.fail("class of size other than n", {rank, size});
  return report;
}

CheckReport check_hypertree(const std::vector<HyperedgeView>& edges, std::uint64_t vertex_count) {
  CheckReport report("hypertree");
  report.counts["hyperedges"] = edges.size();
  report.counts["vertices"] = vertex_count;

  std::vector<std::uint64_t> parent(static_cast<std::size_t>(vertex_count));
  std::iota(parent.begin(), parent.end(), std::uint64_t{0});
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::uint64_t rank_sum = 0;
  // (vertex -> list of (hyperedge, bar)) for the intersection and conflict checks.
  std::vector<std::vector<std::pair<std::size_t, int>>> incident(static_cast<std::size_t>(vertex_count));
  for (std::size_t e = 0; e < edges.size() && report.passed; ++e) {
    const auto& he = edges[e];
    if (he.germs.size() < 2 || he.bars.size() != he.germs.size()) {
      report.fail("malformed hyperedge", {e});
      break;
    }
    rank_sum += he.germs.size() - 1;
    std::vector<std::uint64_t> roots;
    for (std::size_t i = 0; i < he.germs.size(); ++i) {
      const std::uint64_t g = he.germs[i];
      if (g >= vertex_count) {
        report.fail("hyperedge vertex out of range", {e, g});
        break;
      }
      roots.push_back(find(g));
      incident[g].emplace_back(e, he.bars[i]);
    }
    if (!report.passed) break;
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) {
      report.fail("hyperedge closes a cycle", {e});
      break;
    }
    for (std::uint64_t r : roots) parent[r] = roots.front();
  }
  report.counts["rank_sum"] = rank_sum;
  if (!report.passed) return report;
  if (rank_sum + 1 != vertex_count) report.fail("hyperedge sizes do not sum to a spanning tree", {rank_sum, vertex_count});

  std::uint64_t components = 0;
  for (std::uint64_t v = 0; v < vertex_count; ++v)
    if (find(v) == v) ++components;
  report.counts["components"] = components;
  if (components != 1) report.fail("hypergraph is disconnected", {components});

  std::map<std::pair<std::size_t, std::size_t>, int> shared;
  for (std::uint64_t v = 0; v < vertex_count && report.passed; ++v) {
    const auto& inc = incident[v];
    for (std::size_t i = 0; i < inc.size() && report.passed; ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        if (inc[i].second == inc[j].second) {
          report.fail("hyperedges share a vertex with the same barred position", {inc[i].first, inc[j].first, v});
          break;
        }
        if (++shared[{inc[i].first, inc[j].first}] > 1) {
          report.fail("hyperedges share more than one vertex", {inc[i].first, inc[j].first});
          break;
        }
      }
  }
  return report;
}

CheckReport check_matching_coloring(const std::vector<ColoredEdge>& edges, int k) {
  CheckReport report("matching-coloring");
  const Universe u(GraphKind::Middle, k);
  const std::uint64_t level = binomial(2 * k + 1, k);
  report.counts["edges"] = edges.size();
  report.counts["colors"] = static_cast<std::uint64_t>(k + 1);
  if (edges.size() != level * static_cast<std::uint64_t>(k + 1)) {
    report.fail("edge count differs from (k+1) * C(n,k)", {edges.size(), level * static_cast<std::uint64_t>(k + 1)});
    return report;
  }
  std::unordered_set<Edge, EdgeHash> seen;
  seen.reserve(edges.size());
  // One set of matched vertices per color.
  std::vector<std::unordered_set<Mask>> covered(static_cast<std::size_t>(k + 2));
  for (std::size_t i = 0; i < edges.size() && report.passed; ++i) {
    const ColoredEdge& e = edges[i];
    if (std::popcount(e.lower) != k || !u.adjacent(e.lower, e.upper)) {
      report.fail("not an edge of the middle-levels graph", {i, e.lower, e.upper});
    } else if (e.color < 1 || e.color > k + 1) {
      report.fail("color outside [1, k+1]", {i, static_cast<std::uint64_t>(e.color)});
    } else if (!seen.insert(Edge::of(e.lower, e.upper)).second) {
      report.fail("edge listed twice", {i, e.lower, e.upper});
    } else {
      auto& cov = covered[static_cast<std::size_t>(e.color)];
      if (!cov.insert(e.lower).second || !cov.insert(e.upper).second)
        report.fail("two edges of one color share a vertex", {i, e.lower, e.upper, static_cast<std::uint64_t>(e.color)});
    }
  }
  for (int c = 1; c <= k + 1 && report.passed; ++c)
    if (covered[static_cast<std::size_t>(c)].size() != 2 * level)
      report.fail("color class is not a perfect matching", {static_cast<std::uint64_t>(c)});
  return report;
}

}  // namespace oddgraph
