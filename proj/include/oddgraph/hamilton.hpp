#pragma once

#include <optional>
#include <string_view>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "oddgraph/germ.hpp"
#include "oddgraph/report.hpp"
#include "oddgraph/two_factor.hpp"

namespace oddgraph {

enum class SeedName { S1, S2, S3, S4 };

/// Three or four Dyck words of equal length, each with one barred index.
/// Bars count from the right end: index 0 is the last character.
struct FlippableTuple {
  std::vector<DyckWord> words;
  std::vector<int> bars;

  int size() const { return static_cast<int>(words.size()); }
  int length() const { return words.empty() ? 0 : words.front().size(); }
  /// Words separated by spaces with the barred bit in brackets.
  std::string str() const;

  friend bool operator==(const FlippableTuple&, const FlippableTuple&) = default;
};

/// The seed triples S1(w), S2, S3 and the quadruple S4. `w` is used by S1 only.
FlippableTuple seed_tuple(SeedName name, const DyckWord& w = DyckWord{});

/// Complement of the reversed words; bars are mirrored.
FlippableTuple conjugate_tuple(const FlippableTuple& t);

/// prefix . word . suffix for every word; bars shift by |suffix|. Throws
/// ErrorCode::Validation if a resulting word is not a Dyck word.
FlippableTuple affix_tuple(const FlippableTuple& t, std::string_view prefix, std::string_view suffix);

/// A hyperedge of H_k: the germ ranks of 0.word for every word of a tuple.
struct Hyperedge {
  std::vector<Rank> germs;
  std::vector<int> bars;
  FlippableTuple tuple;
};

Hyperedge hyperedge_of(const FlippableTuple& t, int k);

struct SpanningTreeSet {
  int k = 0;
  std::vector<Hyperedge> hyperedges;
};

/// The recursive conflict-free spanning tree of H_k (k >= 3). Every structural
/// invariant is checked; a violation throws ErrorCode::Construction.
SpanningTreeSet spanning_tree(int k);

CheckReport check_spanning_tree(const SpanningTreeSet& tree);

/// All occurrences u.t.v (|u| even) and u.conj(t).v (|u| odd) of the seed
/// tuples among Dyck words of length 2k.
std::vector<FlippableTuple> flippable_tuples(int k);

/// A spanning tree that differs from spanning_tree(k) by one exchanged
/// hyperedge, or nullopt when no exchange keeps it conflict-free.
std::optional<SpanningTreeSet> exchanged_spanning_tree(const SpanningTreeSet& tree);

/// Vertex -> (cycle index, row) lookup over a two-factor.
class CycleIndex {
 public:
  explicit CycleIndex(const TwoFactor& tf);
  /// {cycle index, row}; cycle index == -1 when absent.
  std::pair<int, int> locate(Vertex v) const;

 private:
  std::unordered_map<Mask, std::pair<int, int>> where_;
};

/// Alternating cycle a1 b1 a2 b2 ... at bt: each (a_i, b_i) is an edge of the
/// 2-factor cycle of germs[i]; each (b_i, a_{i+1}) and (b_t, a_1) is not.
struct FlippingCycle {
  std::vector<Rank> germs;
  std::vector<Vertex> vertices;
  bool matches_bars = false;

  int size() const { return static_cast<int>(germs.size()); }
  std::vector<Edge> two_factor_edges() const;
  std::vector<Edge> linking_edges() const;
};

/// Every alternating cycle through the hyperedge's cycles, barred-position
/// matches first, then lexicographic on vertex masks.
std::vector<FlippingCycle> flipping_cycle_candidates(const Hyperedge& e, const TwoFactor& tf, const CycleIndex& index);

/// First candidate sharing no edge with `forbidden`.
std::optional<FlippingCycle> flipping_cycle(const Hyperedge& e, const TwoFactor& tf, const CycleIndex& index,
                                            const std::unordered_set<Edge, EdgeHash>& forbidden);

struct HamiltonAssembly {
  TwoFactor two_factor;
  SpanningTreeSet tree;
  std::vector<FlippingCycle> flips;  // one per hyperedge, same order
  std::vector<Vertex> cycle;
  std::size_t backtracks = 0;
};

/// Merges the 2-factor cycles along the spanning tree's flipping cycles.
HamiltonAssembly assemble_hamilton(int k, unsigned threads = 1);
HamiltonAssembly assemble_hamilton(TwoFactor tf, SpanningTreeSet tree, unsigned threads = 1);

/// Replaces the 2-factor edges of each flipping cycle by its linking edges.
/// `cycles` holds vertex sequences; the result walks the merged graph from
/// its smallest vertex toward its smaller neighbor.
std::vector<Mask> apply_flips(const std::vector<std::vector<Mask>>& cycles,
                              const std::vector<std::vector<Mask>>& flip_cycles);

}  // namespace oddgraph
