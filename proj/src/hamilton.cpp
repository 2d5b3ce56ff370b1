#include "oddgraph/hamilton.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "oddgraph/error.hpp"
#include "oddgraph/odd_graph.hpp"
#include "oddgraph/parallel.hpp"
#include "oddgraph/verification.hpp"

namespace oddgraph {

std::string FlippableTuple::str() const {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    const std::string& w = words[i].str();
    const int at = static_cast<int>(w.size()) - 1 - bars[i];
    for (int p = 0; p < static_cast<int>(w.size()); ++p) {
      if (p == at) {
        out += '[';
        out += w[static_cast<std::size_t>(p)];
        out += ']';
      } else {
        out += w[static_cast<std::size_t>(p)];
      }
    }
  }
  return out;
}

namespace {

FlippableTuple make_tuple(std::initializer_list<std::pair<std::string, int>> items) {
  FlippableTuple t;
  for (const auto& [w, b] : items) {
    t.words.emplace_back(w);
    t.bars.push_back(b);
  }
  return t;
}

std::string repeat01(int times) {
  std::string s;
  for (int i = 0; i < times; ++i) s += "01";
  return s;
}

}  // namespace

FlippableTuple seed_tuple(SeedName name, const DyckWord& w) {
  switch (name) {
    case SeedName::S1: {
      const std::string& s = w.str();
      return make_tuple({{"0" + s + "00111", 1}, {"0" + s + "01101", 4}, {"0" + s + "01011", 0}});
    }
    case SeedName::S2:
      return make_tuple({{"00110011", 6}, {"00100111", 0}, {"00010111", 2}});
    case SeedName::S3:
      return make_tuple({{"000111", 0}, {"010011", 1}, {"010101", 5}});
    case SeedName::S4:
      return make_tuple({{"000111", 0}, {"001011", 1}, {"010011", 3}, {"010101", 5}});
  }
  fail(ErrorCode::Validation, "unknown seed");
}

FlippableTuple conjugate_tuple(const FlippableTuple& t) {
  FlippableTuple out;
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    std::string s(t.words[i].str().rbegin(), t.words[i].str().rend());
    for (char& c : s) c = c == '0' ? '1' : '0';
    out.bars.push_back(static_cast<int>(s.size()) - 1 - t.bars[i]);
    out.words.emplace_back(std::move(s));
  }
  return out;
}

FlippableTuple affix_tuple(const FlippableTuple& t, std::string_view prefix, std::string_view suffix) {
  FlippableTuple out;
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    std::string s(prefix);
    s += t.words[i].str();
    s += suffix;
    if (!DyckWord::is_dyck(s)) fail(ErrorCode::Validation, "affixed word " + s + " is not a Dyck word");
    out.words.emplace_back(std::move(s));
    out.bars.push_back(t.bars[i] + static_cast<int>(suffix.size()));
  }
  return out;
}

Hyperedge hyperedge_of(const FlippableTuple& t, int k) {
  Hyperedge h;
  h.tuple = t;
  h.bars = t.bars;
  for (const DyckWord& w : t.words) {
    if (w.size() != 2 * k) fail(ErrorCode::Validation, "word " + w.str() + " has the wrong length");
    h.germs.push_back(germ_rank(germ_of_bitstring(parse_bitstring("0" + w.str()), k)));
  }
  return h;
}

namespace {

// Families T_l, E_l and F_l of flippable tuples over Dyck words of length 2l.
class TreeRecursion {
 public:
  const std::vector<FlippableTuple>& T(int l) {
    if (auto it = t_.find(l); it != t_.end()) return it->second;
    std::vector<FlippableTuple> out;
    if (l == 3) {
      out = {seed_tuple(SeedName::S1), seed_tuple(SeedName::S3)};
    } else {
      out = F(l);
      out.push_back(affix_tuple(seed_tuple(SeedName::S3), "", repeat01(l - 3)));
      for (const auto& x : E(l - 1)) out.push_back(affix_tuple(x, "01", ""));
      for (const auto& x : F(l - 1)) out.push_back(affix_tuple(x, "01", ""));
    }
    return t_[l] = std::move(out);
  }

  const std::vector<FlippableTuple>& E(int l) {
    if (auto it = e_.find(l); it != e_.end()) return it->second;
    std::vector<FlippableTuple> out;
    if (l == 3) {
      out = {seed_tuple(SeedName::S4)};
    } else if (l > 3) {
      for (const auto& x : T(l - 1)) out.push_back(affix_tuple(x, "01", ""));
    }
    return e_[l] = std::move(out);
  }

  const std::vector<FlippableTuple>& F(int l) {
    if (auto it = f_.find(l); it != f_.end()) return it->second;
    std::vector<FlippableTuple> out;
    if (l == 4) {
      out = {seed_tuple(SeedName::S1, DyckWord("01")), seed_tuple(SeedName::S2),
             affix_tuple(conjugate_tuple(seed_tuple(SeedName::S3)), "0", "1"),
             affix_tuple(seed_tuple(SeedName::S1), "", "01")};
    } else if (l > 4) {
      for (const auto& x : T(l - 2)) out.push_back(affix_tuple(x, "0011", ""));
      for (int j = 3; j <= l; ++j) {
        for (const DyckWord& v : dyck_words(l - j)) {
          out.push_back(affix_tuple(seed_tuple(SeedName::S1, DyckWord(repeat01(j - 3))), "", v.str()));
          for (const auto& x : E(j - 1)) out.push_back(affix_tuple(conjugate_tuple(x), "0", "1" + v.str()));
          for (const auto& x : F(j - 1)) out.push_back(affix_tuple(conjugate_tuple(x), "0", "1" + v.str()));
        }
      }
    }
    return f_[l] = std::move(out);
  }

 private:
  std::map<int, std::vector<FlippableTuple>> t_, e_, f_;
};

std::vector<HyperedgeView> views_of(const std::vector<Hyperedge>& edges) {
  std::vector<HyperedgeView> views;
  views.reserve(edges.size());
  for (const auto& h : edges) views.push_back({h.germs, h.bars});
  return views;
}

}  // namespace

CheckReport check_spanning_tree(const SpanningTreeSet& tree) {
  CheckReport report = check_hypertree(views_of(tree.hyperedges), catalan(tree.k));
  report.name = "spanning-tree";
  report.counts["k"] = static_cast<std::uint64_t>(tree.k);
  return report;
}

SpanningTreeSet spanning_tree(int k) {
  if (k < 3) fail(ErrorCode::Unsupported, "the spanning tree is defined for k >= 3");
  if (k > kMaxOrder) fail(ErrorCode::Range, "k = " + std::to_string(k) + " exceeds 30");
  TreeRecursion rec;
  SpanningTreeSet tree;
  tree.k = k;
  for (const auto& t : rec.T(k)) tree.hyperedges.push_back(hyperedge_of(t, k));
  const CheckReport report = check_spanning_tree(tree);
  if (!report.passed) {
    std::string where;
    if (!report.counterexample.empty() && report.counterexample.front() < tree.hyperedges.size())
      where = " (hyperedge " + tree.hyperedges[report.counterexample.front()].tuple.str() + ")";
    fail(ErrorCode::Construction, "spanning tree for k = " + std::to_string(k) + ": " + report.message + where);
  }
  return tree;
}

std::vector<FlippableTuple> flippable_tuples(int k) {
  if (k < 3) return {};
  const int len = 2 * k;
  std::vector<FlippableTuple> seeds = {seed_tuple(SeedName::S2), seed_tuple(SeedName::S3), seed_tuple(SeedName::S4)};
  for (int half = 0; 6 + 2 * half <= len; ++half)
    for (const DyckWord& w : dyck_words(half)) seeds.push_back(seed_tuple(SeedName::S1, w));

  std::map<std::string, FlippableTuple> found;
  for (const FlippableTuple& seed : seeds) {
    const int rest = len - seed.length();
    if (rest < 0) continue;
    const FlippableTuple conj = conjugate_tuple(seed);
    for (int ulen = 0; ulen <= rest; ++ulen) {
      const int vlen = rest - ulen;
      const FlippableTuple& core = ulen % 2 == 0 ? seed : conj;
      for (Mask um = 0; um < (Mask{1} << ulen); ++um) {
        const std::string u = to_bitstring(Vertex{um}, ulen);
        for (Mask vm = 0; vm < (Mask{1} << vlen); ++vm) {
          const std::string v = to_bitstring(Vertex{vm}, vlen);
          bool ok = true;
          for (const DyckWord& w : core.words)
            if (!DyckWord::is_dyck(u + w.str() + v)) {
              ok = false;
              break;
            }
          if (!ok) continue;
          FlippableTuple t = affix_tuple(core, u, v);
          found.emplace(t.str(), std::move(t));
        }
      }
    }
  }
  std::vector<FlippableTuple> out;
  out.reserve(found.size());
  for (auto& [key, t] : found) out.push_back(std::move(t));
  return out;
}

std::optional<SpanningTreeSet> exchanged_spanning_tree(const SpanningTreeSet& tree) {
  const auto pool = flippable_tuples(tree.k);
  std::vector<Hyperedge> candidates;
  candidates.reserve(pool.size());
  for (const auto& t : pool) candidates.push_back(hyperedge_of(t, tree.k));

  for (std::size_t drop = 0; drop < tree.hyperedges.size(); ++drop) {
    std::vector<std::uint64_t> old_set = tree.hyperedges[drop].germs;
    std::sort(old_set.begin(), old_set.end());
    for (const Hyperedge& h : candidates) {
      if (h.germs.size() != old_set.size()) continue;
      std::vector<std::uint64_t> set = h.germs;
      std::sort(set.begin(), set.end());
      if (set == old_set) continue;
      SpanningTreeSet next = tree;
      next.hyperedges[drop] = h;
      if (check_spanning_tree(next).passed) return next;
    }
  }
  return std::nullopt;
}

CycleIndex::CycleIndex(const TwoFactor& tf) {
  std::size_t total = 0;
  for (const auto& c : tf.cycles) total += c.rows.size();
  where_.reserve(total);
  for (std::size_t c = 0; c < tf.cycles.size(); ++c)
    for (std::size_t m = 0; m < tf.cycles[c].rows.size(); ++m)
      where_.emplace(tf.cycles[c].rows[m].vertex.bits, std::pair<int, int>{static_cast<int>(c), static_cast<int>(m)});
}

std::pair<int, int> CycleIndex::locate(Vertex v) const {
  const auto it = where_.find(v.bits);
  return it == where_.end() ? std::pair<int, int>{-1, -1} : it->second;
}

std::vector<Edge> FlippingCycle::two_factor_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); i += 2) out.push_back(Edge::of(vertices[i].bits, vertices[i + 1].bits));
  return out;
}

std::vector<Edge> FlippingCycle::linking_edges() const {
  std::vector<Edge> out;
  const std::size_t len = vertices.size();
  for (std::size_t i = 1; i < len; i += 2) out.push_back(Edge::of(vertices[i].bits, vertices[(i + 1) % len].bits));
  return out;
}

std::vector<FlippingCycle> flipping_cycle_candidates(const Hyperedge& e, const TwoFactor& tf, const CycleIndex& index) {
  const int k = tf.k;
  const int n = 2 * k + 1;
  const std::size_t t = e.germs.size();
  std::vector<FlippingCycle> out;
  if (t < 2) return out;

  auto bar_of = [&](Rank g) {
    for (std::size_t i = 0; i < t; ++i)
      if (e.germs[i] == g) return e.bars[i];
    return -1;
  };
  auto cycle_neighbors = [&](const CycleList& c, int m) {
    const int len = static_cast<int>(c.rows.size());
    return std::array<Vertex, 2>{c.rows[static_cast<std::size_t>((m + 1) % len)].vertex,
                                 c.rows[static_cast<std::size_t>((m + len - 1) % len)].vertex};
  };

  std::vector<Rank> order(e.germs.begin(), e.germs.end());
  std::sort(order.begin() + 1, order.end());
  std::vector<Vertex> path;
  do {
    std::function<void(std::size_t)> extend = [&](std::size_t i) {
      const Vertex last = path.back();
      if (i == t) {
        if ((last.bits & path.front().bits) == 0) {
          FlippingCycle fc;
          fc.germs = order;
          fc.vertices = path;
          fc.matches_bars = true;
          for (std::size_t j = 0; j < t; ++j)
            if (shared_position(path[2 * j], path[2 * j + 1], k) != n - 1 - bar_of(order[j])) fc.matches_bars = false;
          out.push_back(std::move(fc));
        }
        return;
      }
      for (Vertex a : neighbors(last, k)) {
        const auto [c, m] = index.locate(a);
        if (c < 0 || static_cast<Rank>(c) != order[i]) continue;
        for (Vertex b : cycle_neighbors(tf.cycles[static_cast<std::size_t>(c)], m)) {
          path.push_back(a);
          path.push_back(b);
          extend(i + 1);
          path.resize(path.size() - 2);
        }
      }
    };
    const CycleList& first = tf.cycles[static_cast<std::size_t>(order[0])];
    for (int m = 0; m < static_cast<int>(first.rows.size()); ++m) {
      const Vertex a = first.rows[static_cast<std::size_t>(m)].vertex;
      for (Vertex b : cycle_neighbors(first, m)) {
        // Each cycle is found in both orientations; keep the one with a1 < b1.
        if (b.bits < a.bits) continue;
        path = {a, b};
        extend(1);
      }
    }
  } while (std::next_permutation(order.begin() + 1, order.end()));

  std::stable_sort(out.begin(), out.end(), [](const FlippingCycle& x, const FlippingCycle& y) {
    if (x.matches_bars != y.matches_bars) return x.matches_bars;
    return std::lexicographical_compare(x.vertices.begin(), x.vertices.end(), y.vertices.begin(), y.vertices.end());
  });
  return out;
}

namespace {

bool disjoint_from(const FlippingCycle& fc, const std::unordered_set<Edge, EdgeHash>& used) {
  for (const Edge& x : fc.two_factor_edges())
    if (used.count(x)) return false;
  for (const Edge& x : fc.linking_edges())
    if (used.count(x)) return false;
  return true;
}

}  // namespace

std::optional<FlippingCycle> flipping_cycle(const Hyperedge& e, const TwoFactor& tf, const CycleIndex& index,
                                            const std::unordered_set<Edge, EdgeHash>& forbidden) {
  for (auto& fc : flipping_cycle_candidates(e, tf, index))
    if (disjoint_from(fc, forbidden)) return fc;
  return std::nullopt;
}

std::vector<Mask> apply_flips(const std::vector<std::vector<Mask>>& cycles,
                              const std::vector<std::vector<Mask>>& flip_cycles) {
  std::unordered_map<Mask, std::uint32_t> id;
  std::vector<Mask> mask_of;
  for (const auto& c : cycles)
    for (Mask v : c) {
      if (!id.emplace(v, static_cast<std::uint32_t>(mask_of.size())).second)
        fail(ErrorCode::Assembly, "vertex appears in two cycles");
      mask_of.push_back(v);
    }
  const std::size_t total = mask_of.size();
  std::vector<std::array<std::uint32_t, 2>> adj(total);
  for (const auto& c : cycles) {
    const std::size_t len = c.size();
    if (len < 3) fail(ErrorCode::Assembly, "cycle shorter than 3");
    for (std::size_t i = 0; i < len; ++i)
      adj[id.at(c[i])] = {id.at(c[(i + 1) % len]), id.at(c[(i + len - 1) % len])};
  }
  auto lookup = [&](Mask v) {
    const auto it = id.find(v);
    if (it == id.end()) fail(ErrorCode::Assembly, "flipping cycle leaves the vertex set");
    return it->second;
  };
  auto replace = [&](std::uint32_t at, std::uint32_t old_nb, std::uint32_t new_nb) {
    auto& slots = adj[at];
    if (slots[0] == old_nb) {
      slots[0] = new_nb;
    } else if (slots[1] == old_nb) {
      slots[1] = new_nb;
    } else {
      fail(ErrorCode::Assembly, "flipping cycles are not edge-disjoint");
    }
  };
  for (const auto& fc : flip_cycles) {
    const std::size_t len = fc.size();
    if (len < 4 || len % 2) fail(ErrorCode::Assembly, "malformed flipping cycle");
    std::vector<std::uint32_t> x;
    for (Mask v : fc) x.push_back(lookup(v));
    for (std::size_t i = 0; i < len; i += 2) {
      replace(x[i], x[i + 1], x[(i + len - 1) % len]);
      replace(x[i + 1], x[i], x[(i + 2) % len]);
    }
  }

  std::vector<Mask> walk;
  if (total == 0) return walk;
  const std::uint32_t start =
      static_cast<std::uint32_t>(std::min_element(mask_of.begin(), mask_of.end()) - mask_of.begin());
  const auto& s = adj[start];
  std::uint32_t prev = start;
  std::uint32_t cur = mask_of[s[0]] < mask_of[s[1]] ? s[0] : s[1];
  walk.push_back(mask_of[start]);
  while (cur != start && walk.size() <= total) {
    walk.push_back(mask_of[cur]);
    const auto& nb = adj[cur];
    const std::uint32_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return walk;
}

HamiltonAssembly assemble_hamilton(int k, unsigned threads) {
  if (k < 3) fail(ErrorCode::Unsupported, "Hamilton cycle assembly needs k >= 3");
  TwoFactor tf = build_two_factor(k, threads);
  SpanningTreeSet tree = spanning_tree(k);
  return assemble_hamilton(std::move(tf), std::move(tree), threads);
}

HamiltonAssembly assemble_hamilton(TwoFactor tf, SpanningTreeSet tree, unsigned threads) {
  const int k = tf.k;
  if (k < 3) fail(ErrorCode::Unsupported, "Hamilton cycle assembly needs k >= 3");
  if (tree.k != k) fail(ErrorCode::Assembly, "spanning tree and two-factor disagree on k");
  const CycleIndex index(tf);
  const std::size_t h = tree.hyperedges.size();

  std::vector<std::vector<FlippingCycle>> candidates(h);
  parallel_for(h, threads, [&](std::size_t i) {
    candidates[i] = flipping_cycle_candidates(tree.hyperedges[i], tf, index);
  });
  for (std::size_t i = 0; i < h; ++i)
    if (candidates[i].empty())
      fail(ErrorCode::Assembly, "no flipping cycle for hyperedge " + tree.hyperedges[i].tuple.str());

  HamiltonAssembly out;
  std::vector<std::size_t> choice(h, 0);
  std::unordered_set<Edge, EdgeHash> used;
  auto add = [&](const FlippingCycle& fc, bool insert) {
    for (const Edge& x : fc.two_factor_edges()) insert ? void(used.insert(x)) : void(used.erase(x));
    for (const Edge& x : fc.linking_edges()) insert ? void(used.insert(x)) : void(used.erase(x));
  };
  std::size_t level = 0;
  while (level < h) {
    auto& opts = candidates[level];
    while (choice[level] < opts.size() && !disjoint_from(opts[choice[level]], used)) ++choice[level];
    if (choice[level] < opts.size()) {
      add(opts[choice[level]], true);
      ++level;
      continue;
    }
    if (level == 0) fail(ErrorCode::Assembly, "no edge-disjoint choice of flipping cycles");
    choice[level] = 0;
    --level;
    add(candidates[level][choice[level]], false);
    ++choice[level];
    ++out.backtracks;
  }

  std::vector<std::vector<Mask>> cycles;
  cycles.reserve(tf.cycles.size());
  for (const auto& c : tf.cycles) {
    std::vector<Mask> seq;
    for (const auto& r : c.rows) seq.push_back(r.vertex.bits);
    cycles.push_back(std::move(seq));
  }
  std::vector<std::vector<Mask>> flips;
  for (std::size_t i = 0; i < h; ++i) {
    out.flips.push_back(candidates[i][choice[i]]);
    std::vector<Mask> seq;
    for (Vertex v : out.flips.back().vertices) seq.push_back(v.bits);
    flips.push_back(std::move(seq));
  }
  const std::vector<Mask> walk = apply_flips(cycles, flips);
  const CheckReport report = check_hamiltonian(walk, Universe(GraphKind::Odd, k));
  if (!report.passed) fail(ErrorCode::Assembly, "merged cycles are not Hamiltonian: " + report.message);
  out.cycle.reserve(walk.size());
  for (Mask v : walk) out.cycle.push_back(Vertex{v});
  out.two_factor = std::move(tf);
  out.tree = std::move(tree);
  return out;
}

}  // namespace oddgraph
