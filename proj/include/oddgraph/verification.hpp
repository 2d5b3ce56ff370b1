#pragma once

#include <cstdint>
#include <vector>

#include "oddgraph/bits.hpp"
#include "oddgraph/report.hpp"

namespace oddgraph {

enum class GraphKind { Odd, Middle };

const char* graph_kind_name(GraphKind kind);

/// Vertex set and adjacency of O_k or of the middle-levels graph M_k on
/// n = 2k+1 positions (levels k and k+1).
class Universe {
 public:
  Universe(GraphKind kind, int k);

  GraphKind kind() const { return kind_; }
  int k() const { return k_; }
  int n() const { return 2 * k_ + 1; }
  std::uint64_t size() const;
  bool contains(Mask v) const;
  bool adjacent(Mask a, Mask b) const;

 private:
  GraphKind kind_;
  int k_;
};

/// Disjoint cycles of the given count and length that together cover the
/// universe, with every consecutive pair (closing pair included) adjacent.
CheckReport check_cycle_cover(const std::vector<std::vector<Mask>>& cycles, std::uint64_t expected_count,
                              std::uint64_t expected_length, const Universe& universe);

CheckReport check_hamiltonian(const std::vector<Mask>& cycle, const Universe& universe);

/// Every rotation class of V(O_k) has exactly n members and there are C_k of them.
CheckReport check_class_census(int k);

struct HyperedgeView {
  std::vector<std::uint64_t> germs;
  std::vector<int> bars;
};

/// Spanning hypertree on [0, vertex_count): covering, connected, Berge-acyclic,
/// pairwise intersections of size at most one with distinct bars at the
/// shared vertex.
CheckReport check_hypertree(const std::vector<HyperedgeView>& edges, std::uint64_t vertex_count);

struct ColoredEdge {
  Mask lower = 0;
  Mask upper = 0;
  int color = 0;
};

/// Every edge of M_k appears once with a color in [1, k+1] and each color
/// class is a perfect matching.
CheckReport check_matching_coloring(const std::vector<ColoredEdge>& edges, int k);

}  // namespace oddgraph
