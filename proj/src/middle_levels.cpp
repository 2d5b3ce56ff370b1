#include "oddgraph/middle_levels.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "oddgraph/error.hpp"
#include "oddgraph/odd_graph.hpp"
#include "oddgraph/parallel.hpp"

namespace oddgraph {

MiddleVertex middle_vertex(Mask bits, int k) {
  const int w = std::popcount(bits);
  if ((bits & ~full_mask(2 * k + 1)) || (w != k && w != k + 1))
    fail(ErrorCode::Lift, "mask is not a middle-levels vertex for k = " + std::to_string(k));
  return MiddleVertex{Vertex{bits}, w == k ? Level::Lower : Level::Upper};
}

std::vector<MiddleVertex> lift_cycle(const CycleList& list) {
  const int n = list.germ.n();
  const std::size_t len = list.rows.size();
  std::vector<MiddleVertex> out;
  out.reserve(2 * len);
  for (std::size_t t = 0; t < 2 * len; ++t) {
    const Vertex x = list.rows[t % len].vertex;
    out.push_back(t % 2 == 0 ? MiddleVertex{x, Level::Lower} : MiddleVertex{complement(x, n), Level::Upper});
  }
  for (std::size_t t = 0; t < out.size(); ++t) {
    const MiddleVertex& a = out[t];
    const MiddleVertex& b = out[(t + 1) % out.size()];
    const Mask lo = a.level == Level::Lower ? a.vertex.bits : b.vertex.bits;
    const Mask hi = a.level == Level::Lower ? b.vertex.bits : a.vertex.bits;
    if (lo & ~hi) fail(ErrorCode::Lift, "lifted rows " + std::to_string(t) + " are not nested");
  }
  return out;
}

int modular_color(Vertex lower, Vertex upper, int k) {
  const int n = 2 * k + 1;
  if (lower.weight() != k || upper.weight() != k + 1 || (lower.bits & ~upper.bits))
    fail(ErrorCode::Adjacency, "not an edge of the middle-levels graph");
  return arc_color(lower, complement(upper, n), k).color + 1;
}

std::vector<ColoredEdge> modular_coloring(int k, unsigned threads) {
  const int n = 2 * k + 1;
  const auto lower = odd_graph_vertices(k);
  const std::size_t deg = static_cast<std::size_t>(k + 1);
  std::vector<ColoredEdge> edges(lower.size() * deg);
  parallel_for(lower.size(), threads, [&](std::size_t i) {
    const Vertex u = lower[i];
    const LabeledString lu = label_vertex(u, k);
    std::vector<ColoredEdge> local;
    for (Vertex w : neighbors(u, k)) {
      const int p = shared_position(u, w, k);
      local.push_back({u.bits, complement(w, n).bits, lu[p].value + 1});
    }
    std::sort(local.begin(), local.end(), [](const ColoredEdge& a, const ColoredEdge& b) { return a.upper < b.upper; });
    std::copy(local.begin(), local.end(), edges.begin() + static_cast<std::ptrdiff_t>(i * deg));
  });
  return edges;
}

CheckReport verify_modular_factorization(int k, unsigned threads) {
  CheckReport report = check_matching_coloring(modular_coloring(k, threads), k);
  report.name = "modular-factorization";
  report.counts["k"] = static_cast<std::uint64_t>(k);
  return report;
}

std::vector<std::vector<Mask>> lift_two_factor(const TwoFactor& tf) {
  std::vector<std::vector<Mask>> out;
  out.reserve(tf.cycles.size());
  for (const auto& c : tf.cycles) {
    std::vector<Mask> seq;
    for (const auto& v : lift_cycle(c)) seq.push_back(v.vertex.bits);
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<Mask> lift_flipping_cycle(const FlippingCycle& fc, int k) {
  const int n = 2 * k + 1;
  const auto& xs = fc.vertices;
  const std::size_t q = static_cast<std::size_t>(std::min_element(xs.begin(), xs.end()) - xs.begin());
  std::vector<Mask> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const bool lower = (i + xs.size() - q) % 2 == 0;
    out.push_back(lower ? xs[i].bits : complement(xs[i], n).bits);
  }
  return out;
}

MiddleHamilton lift_hamilton(const HamiltonAssembly& assembly) {
  const int k = assembly.two_factor.k;
  std::vector<std::vector<Mask>> flips;
  flips.reserve(assembly.flips.size());
  for (const auto& fc : assembly.flips) flips.push_back(lift_flipping_cycle(fc, k));
  MiddleHamilton out;
  out.k = k;
  out.cycle = apply_flips(lift_two_factor(assembly.two_factor), flips);
  const CheckReport report = check_hamiltonian(out.cycle, Universe(GraphKind::Middle, k));
  if (!report.passed) fail(ErrorCode::Lift, "lifted cycle is not Hamiltonian: " + report.message);
  return out;
}

MiddleHamilton lift_hamilton(int k, unsigned threads) { return lift_hamilton(assemble_hamilton(k, threads)); }

}  // namespace oddgraph
