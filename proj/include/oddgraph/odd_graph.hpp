#pragma once

#include <vector>

#include "oddgraph/bits.hpp"
#include "oddgraph/report.hpp"

namespace oddgraph {

struct ColoredArc {
  Vertex tail;
  Vertex head;
  int color = 0;
  int shared_position = 0;
};

/// Vertices of O_k in ascending mask order.
std::vector<Vertex> odd_graph_vertices(int k);

bool is_adjacent(Vertex u, Vertex v, int k);

/// The k+1 neighbors of u, ascending.
std::vector<Vertex> neighbors(Vertex u, int k);

/// The unique element of Z_n outside u and v.
int shared_position(Vertex u, Vertex v, int k);

/// Color of the arc u -> v: the label at the shared position in the labeled
/// rotation of u. color(u->v) + color(v->u) = k.
ColoredArc arc_color(Vertex u, Vertex v, int k);

/// Exhaustive check that departing colors biject with [0,k] at every vertex
/// and that the two arcs of every edge sum to k.
CheckReport verify_arc_factorization(int k, unsigned threads = 1);

}  // namespace oddgraph
