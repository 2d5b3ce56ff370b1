#pragma once

#include <unordered_map>
#include <vector>

#include "oddgraph/germ.hpp"
#include "oddgraph/report.hpp"

namespace oddgraph {

/// One line of a vertical list: the vertex plus its rotation class and the
/// rotation index, from which the labeled string is rendered on demand.
struct CycleRow {
  Vertex vertex;
  Rank class_rank = 0;
  int rotation = 0;
};

/// The oriented n-cycle C(alpha). positions[m] is the supplementation position
/// of the edge rows[m] -> rows[m+1]; the last entry (always 0) belongs to the
/// closing edge rows[2k] -> rows[0].
struct CycleList {
  Germ germ;
  Rank rank = 0;
  std::vector<CycleRow> rows;
  std::vector<int> positions;

  LabeledString label(int m) const;
};

struct TwoFactor {
  int k = 0;
  std::vector<CycleList> cycles;  // indexed by germ rank
};

/// Order in which the entries of pi are consumed. Only Descending (j = 2k..1)
/// yields the lists; Ascending exists for the order-pinning regression test.
enum class StepOrder { Descending, Ascending };

/// Map from canonical bitstring to germ rank for one k.
class ClassIndex {
 public:
  explicit ClassIndex(int k);
  int k() const { return k_; }
  Rank rank_of_canonical(Vertex canonical) const;
  CycleRow row_of(Vertex v) const;

 private:
  int k_;
  std::unordered_map<Mask, Rank> ranks_;
};

CycleList build_cycle_list(const Germ& g, StepOrder order = StepOrder::Descending);
CycleList build_cycle_list(const Germ& g, const ClassIndex& classes, StepOrder order = StepOrder::Descending);

std::vector<UnderlinedString> build_underlined_list(const Germ& g);
std::vector<UnderlinedString> build_underlined_list(const CycleList& list);

TwoFactor build_two_factor(int k, unsigned threads = 1);

/// Structural check of a built two-factor: cycle count, per-cycle
/// supplementation positions, and that the closing edge carries colors (k,0).
CheckReport check_two_factor_structure(const TwoFactor& tf);

}  // namespace oddgraph
