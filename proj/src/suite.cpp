#include "oddgraph/suite.hpp"

#include <chrono>

#include "oddgraph/error.hpp"
#include "oddgraph/hamilton.hpp"
#include "oddgraph/middle_levels.hpp"
#include "oddgraph/odd_graph.hpp"
#include "oddgraph/two_factor.hpp"
#include "oddgraph/verification.hpp"

namespace oddgraph {

namespace {

CheckReport underlined_lists_report(const TwoFactor& tf) {
  CheckReport report("underlined-lists");
  report.counts["lists"] = tf.cycles.size();
  for (const auto& c : tf.cycles) {
    try {
      build_underlined_list(c);
    } catch (const Error& e) {
      report.fail(e.what(), {c.rank});
      break;
    }
  }
  return report;
}

std::vector<std::vector<Mask>> cycle_masks(const TwoFactor& tf) {
  std::vector<std::vector<Mask>> out;
  for (const auto& c : tf.cycles) {
    std::vector<Mask> seq;
    for (const auto& r : c.rows) seq.push_back(r.vertex.bits);
    out.push_back(std::move(seq));
  }
  return out;
}

// Runs a construction step; a thrown library error becomes a failed report.
template <typename Fn>
CheckReport guarded(const std::string& name, Fn&& fn) {
  try {
    CheckReport r = fn();
    r.name = name;
    return r;
  } catch (const Error& e) {
    CheckReport r(name);
    r.fail(std::string(error_code_name(e.code())) + ": " + e.what());
    return r;
  }
}

}  // namespace

std::vector<CheckReport> run_verification_suite(int k, unsigned threads) {
  if (k < 1 || k > kMaxOrder) fail(ErrorCode::Range, "k = " + std::to_string(k) + " outside [1, 30]");
  std::vector<CheckReport> out;
  out.push_back(check_class_census(k));
  out.push_back(verify_arc_factorization(k, threads));
  out.push_back(verify_modular_factorization(k, threads));

  TwoFactor tf;
  out.push_back(guarded("two-factor", [&] {
    tf = build_two_factor(k, threads);
    return check_two_factor_structure(tf);
  }));
  if (!tf.cycles.empty()) {
    CheckReport cover = check_cycle_cover(cycle_masks(tf), catalan(k), static_cast<std::uint64_t>(2 * k + 1),
                                          Universe(GraphKind::Odd, k));
    cover.name = "two-factor-cover";
    out.push_back(cover);
    out.push_back(underlined_lists_report(tf));
  }
  if (k >= 3) {
    out.push_back(guarded("spanning-tree", [&] { return check_spanning_tree(spanning_tree(k)); }));
    HamiltonAssembly assembly;
    out.push_back(guarded("hamilton-odd", [&] {
      assembly = assemble_hamilton(k, threads);
      std::vector<Mask> cycle;
      for (Vertex v : assembly.cycle) cycle.push_back(v.bits);
      return check_hamiltonian(cycle, Universe(GraphKind::Odd, k));
    }));
    if (!assembly.cycle.empty())
      out.push_back(guarded("hamilton-middle", [&] {
        return check_hamiltonian(lift_hamilton(assembly).cycle, Universe(GraphKind::Middle, k));
      }));
  }
  return out;
}

std::vector<StageTiming> run_benchmark(int k, unsigned threads) {
  using clock = std::chrono::steady_clock;
  std::vector<StageTiming> out;
  auto time = [&](const std::string& stage, auto&& fn) {
    const auto t0 = clock::now();
    fn();
    out.push_back({stage, std::chrono::duration<double>(clock::now() - t0).count()});
  };
  TwoFactor tf;
  time("two-factor", [&] { tf = build_two_factor(k, threads); });
  if (k >= 3) {
    SpanningTreeSet tree;
    time("spanning-tree", [&] { tree = spanning_tree(k); });
    HamiltonAssembly assembly;
    time("hamilton-odd", [&] { assembly = assemble_hamilton(std::move(tf), std::move(tree), threads); });
    time("hamilton-middle", [&] { lift_hamilton(assembly); });
  }
  return out;
}

}  // namespace oddgraph
