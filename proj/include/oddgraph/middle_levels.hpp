#pragma once

#include <vector>

#include "oddgraph/hamilton.hpp"
#include "oddgraph/report.hpp"
#include "oddgraph/two_factor.hpp"
#include "oddgraph/verification.hpp"

namespace oddgraph {

enum class Level { Lower, Upper };

/// A vertex of M_k: level k (Lower) or level k+1 (Upper) of the n-cube.
struct MiddleVertex {
  Vertex vertex;
  Level level = Level::Lower;

  friend auto operator<=>(const MiddleVertex&, const MiddleVertex&) = default;
};

MiddleVertex middle_vertex(Mask bits, int k);

/// The 2n-cycle of M_k over C(alpha): rows alternate between the lower vertex
/// x and the upper vertex complement(x).
std::vector<MiddleVertex> lift_cycle(const CycleList& list);

/// Color in [1, k+1] of the M_k edge lower-upper.
int modular_color(Vertex lower, Vertex upper, int k);

/// Every edge of M_k with its modular color, ordered by (lower, upper).
std::vector<ColoredEdge> modular_coloring(int k, unsigned threads = 1);

CheckReport verify_modular_factorization(int k, unsigned threads = 1);

/// Lifted 2-factor of M_k as mask sequences, one cycle per germ.
std::vector<std::vector<Mask>> lift_two_factor(const TwoFactor& tf);

/// One of the two lifts of a flipping cycle of O_k: the vertex with the
/// smallest mask stays on the lower level.
std::vector<Mask> lift_flipping_cycle(const FlippingCycle& fc, int k);

struct MiddleHamilton {
  int k = 0;
  std::vector<Mask> cycle;
};

MiddleHamilton lift_hamilton(const HamiltonAssembly& assembly);
MiddleHamilton lift_hamilton(int k, unsigned threads = 1);

}  // namespace oddgraph
