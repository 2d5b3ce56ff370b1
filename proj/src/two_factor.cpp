#include "oddgraph/two_factor.hpp"

#include <algorithm>
#include <string>

#include "oddgraph/error.hpp"
#include "oddgraph/odd_graph.hpp"
#include "oddgraph/parallel.hpp"
#include "oddgraph/tpp.hpp"

namespace oddgraph {

ClassIndex::ClassIndex(int k) : k_(k) {
  const auto germs = all_germs(k);
  ranks_.reserve(germs.size());
  for (Rank r = 0; r < germs.size(); ++r) ranks_.emplace(bitstring_of_germ(germs[r]).bits, r);
}

Rank ClassIndex::rank_of_canonical(Vertex canonical) const {
  const auto it = ranks_.find(canonical.bits);
  if (it == ranks_.end()) fail(ErrorCode::CanonicalForm, "not a canonical bitstring of O_" + std::to_string(k_));
  return it->second;
}

CycleRow ClassIndex::row_of(Vertex v) const {
  const int j = canonical_shift(v, k_);
  return CycleRow{v, rank_of_canonical(rotate(v, -j, 2 * k_ + 1)), j};
}

LabeledString CycleList::label(int m) const {
  const CycleRow& row = rows[static_cast<std::size_t>(m)];
  const int k = germ.k();
  return label_bitstring(rotate(row.vertex, -row.rotation, 2 * k + 1), k).rotated(row.rotation);
}

CycleList build_cycle_list(const Germ& g, StepOrder order) { return build_cycle_list(g, ClassIndex(g.k()), order); }

CycleList build_cycle_list(const Germ& g, const ClassIndex& classes, StepOrder order) {
  const int k = g.k();
  const int n = g.n();
  const SupplementationOrder so = pi_of_germ(g);
  CycleList list;
  list.germ = g;
  list.rank = germ_rank(g);
  list.rows.reserve(static_cast<std::size_t>(n));
  list.positions.reserve(static_cast<std::size_t>(n));

  LabeledString current = string_of_germ(g);
  Vertex v = current.support();
  list.rows.push_back(CycleRow{v, list.rank, 0});
  for (int step = 0; step < 2 * k; ++step) {
    const int j = order == StepOrder::Descending ? 2 * k - step : step + 1;
    const int pos = so.pi[static_cast<std::size_t>(j - 1)];
    if (!current[pos].is_number())
      fail(ErrorCode::Generation, "germ " + g.str() + ": position pi(" + std::to_string(j) + ") = " +
                                      std::to_string(pos) + " holds '=' in row " + std::to_string(step));
    const int old_value = current[pos].value;
    const Vertex next{complement(v, n).bits & ~(Mask{1} << pos)};
    const CycleRow row = classes.row_of(next);
    LabeledString relabeled =
        label_bitstring(rotate(next, -row.rotation, n), k).rotated(row.rotation);
    if (!relabeled[pos].is_number() || relabeled[pos].value != k - old_value)
      fail(ErrorCode::Supplementation, "germ " + g.str() + ": relabeled entry at position " + std::to_string(pos) +
                                           " is not the k-supplement of " + std::to_string(old_value));
    list.positions.push_back(pos);
    list.rows.push_back(row);
    current = std::move(relabeled);
    v = next;
  }
  // Closing edge back to F(alpha) at position 0 with colors (k, 0).
  const Vertex top = list.rows.front().vertex;
  if ((v.bits & top.bits) != 0 || shared_position(v, top, k) != 0 || current[0] != Symbol::number(k))
    fail(ErrorCode::Generation, "germ " + g.str() + ": list does not close at position 0 with value k");
  list.positions.push_back(0);
  return list;
}

std::vector<UnderlinedString> build_underlined_list(const CycleList& list) {
  std::vector<UnderlinedString> out;
  out.reserve(list.rows.size());
  const int k = list.germ.k();
  for (const auto& row : list.rows) {
    const Germ cls = germ_unrank(k, row.class_rank);
    out.push_back(underline_string(cls).rotated(row.rotation));
  }
  // First column alternates 0, k_, 1, (k-1)_, ..., 1_, k.
  for (int m = 0; m < static_cast<int>(out.size()); ++m) {
    const Symbol expect = m % 2 == 0 ? Symbol::number(m / 2) : Symbol::under(k - m / 2);
    if (out[static_cast<std::size_t>(m)][0] != expect)
      fail(ErrorCode::Generation, "germ " + list.germ.str() + ": first column of the underlined list breaks at row " +
                                      std::to_string(m));
  }
  return out;
}

std::vector<UnderlinedString> build_underlined_list(const Germ& g) {
  return build_underlined_list(build_cycle_list(g));
}

TwoFactor build_two_factor(int k, unsigned threads) {
  if (k < 1 || k > kMaxOrder) fail(ErrorCode::Range, "k out of range");
  const ClassIndex classes(k);
  const auto germs = all_germs(k);
  TwoFactor tf;
  tf.k = k;
  tf.cycles.resize(germs.size());
  parallel_for(germs.size(), threads, [&](std::size_t r) { tf.cycles[r] = build_cycle_list(germs[r], classes); });

  // Partition: every vertex exactly once.
  std::vector<Mask> seen;
  seen.reserve(static_cast<std::size_t>(binomial(2 * k + 1, k)));
  for (const auto& c : tf.cycles)
    for (const auto& row : c.rows) seen.push_back(row.vertex.bits);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    fail(ErrorCode::Partition, "two cycles of the 2-factor share a vertex");
  if (seen.size() != binomial(2 * k + 1, k)) fail(ErrorCode::Partition, "the 2-factor does not cover V(O_k)");
  return tf;
}

CheckReport check_two_factor_structure(const TwoFactor& tf) {
  CheckReport report("two-factor-structure");
  const int k = tf.k;
  const int n = 2 * k + 1;
  if (tf.cycles.size() != catalan(k)) report.fail("cycle count differs from catalan(k)");
  for (const auto& c : tf.cycles) {
    if (static_cast<int>(c.rows.size()) != n || static_cast<int>(c.positions.size()) != n) {
      report.fail("cycle of germ " + c.germ.str() + " has the wrong length", {c.rank});
      continue;
    }
    Mask pos_seen = 0;
    for (int m = 0; m < n; ++m) {
      const Vertex a = c.rows[static_cast<std::size_t>(m)].vertex;
      const Vertex b = c.rows[static_cast<std::size_t>((m + 1) % n)].vertex;
      const int pos = c.positions[static_cast<std::size_t>(m)];
      pos_seen |= Mask{1} << pos;
      if ((a.bits & b.bits) != 0 || shared_position(a, b, k) != pos) {
        report.fail("edge position mismatch in germ " + c.germ.str(), {a.bits, b.bits});
        continue;
      }
      const ColoredArc fwd = arc_color(a, b, k);
      const ColoredArc back = arc_color(b, a, k);
      if (fwd.color + back.color != k) report.fail("arc colors do not sum to k", {a.bits, b.bits});
      if (m == n - 1 && (fwd.color != k || back.color != 0))
        report.fail("closing edge does not carry colors (k,0)", {a.bits, b.bits});
    }
    if (pos_seen != full_mask(n)) report.fail("supplementation positions of germ " + c.germ.str() + " miss a column", {c.rank});
  }
  report.counts["cycles"] = tf.cycles.size();
  report.counts["length"] = static_cast<std::uint64_t>(n);
  return report;
}

}  // namespace oddgraph
