#include "oddgraph/odd_graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "oddgraph/error.hpp"
#include "oddgraph/germ.hpp"
#include "oddgraph/parallel.hpp"

namespace oddgraph {

namespace {

void require_vertex(Vertex u, int k) {
  if (k < 1 || k > kMaxOrder) fail(ErrorCode::Range, "k out of range");
  if ((u.bits & ~full_mask(2 * k + 1)) != 0 || u.weight() != k)
    fail(ErrorCode::Weight, "vertex " + to_bitstring(u, 2 * k + 1) + " is not a k-subset");
}

}  // namespace

std::vector<Vertex> odd_graph_vertices(int k) { return all_of_weight(2 * k + 1, k); }

bool is_adjacent(Vertex u, Vertex v, int k) {
  require_vertex(u, k);
  require_vertex(v, k);
  return (u.bits & v.bits) == 0;
}

std::vector<Vertex> neighbors(Vertex u, int k) {
  require_vertex(u, k);
  const Mask rest = complement(u, 2 * k + 1).bits;
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(k + 1));
  for (Mask m = rest; m != 0; m &= m - 1) out.push_back(Vertex{rest & ~(m & (~m + 1))});
  std::sort(out.begin(), out.end());
  return out;
}

int shared_position(Vertex u, Vertex v, int k) {
  if (!is_adjacent(u, v, k))
    fail(ErrorCode::Adjacency, to_bitstring(u, 2 * k + 1) + " and " + to_bitstring(v, 2 * k + 1) + " are not adjacent");
  const Mask free = ~(u.bits | v.bits) & full_mask(2 * k + 1);
  return std::countr_zero(free);
}

ColoredArc arc_color(Vertex u, Vertex v, int k) {
  const int i = shared_position(u, v, k);
  const LabeledString lu = label_vertex(u, k);
  return ColoredArc{u, v, lu[i].value, i};
}

CheckReport verify_arc_factorization(int k, unsigned threads) {
  CheckReport report("arc-factorization");
  const auto vertices = odd_graph_vertices(k);
  // Per-vertex first violation; merged in vertex order for a deterministic report.
  struct Finding {
    bool bad = false;
    std::string why;
    std::vector<std::uint64_t> payload;
  };
  std::vector<Finding> findings(vertices.size());
  parallel_for(vertices.size(), threads, [&](std::size_t idx) {
    const Vertex u = vertices[idx];
    const LabeledString lu = label_vertex(u, k);
    Mask seen = 0;
    for (Vertex v : neighbors(u, k)) {
      const int i = shared_position(u, v, k);
      const int c = lu[i].value;
      if (!lu[i].is_number()) {
        findings[idx] = {true, "shared position carries no number label", {u.bits, v.bits}};
        return;
      }
      if (seen & (Mask{1} << c)) {
        findings[idx] = {true, "repeated departing color " + std::to_string(c), {u.bits, v.bits}};
        return;
      }
      seen |= Mask{1} << c;
      const LabeledString lv = label_vertex(v, k);
      if (!lv[i].is_number() || c + lv[i].value != k) {
        findings[idx] = {true, "arc colors of an edge do not sum to k", {u.bits, v.bits}};
        return;
      }
    }
    if (seen != full_mask(k + 1)) findings[idx] = {true, "departing colors do not cover [0,k]", {u.bits}};
  });
  for (auto& f : findings)
    if (f.bad) report.fail(f.why, f.payload);
  report.counts["k"] = static_cast<std::uint64_t>(k);
  report.counts["vertices"] = vertices.size();
  report.counts["arcs"] = vertices.size() * static_cast<std::uint64_t>(k + 1);
  return report;
}

}  // namespace oddgraph
