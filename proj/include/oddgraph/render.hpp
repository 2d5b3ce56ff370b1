#pragma once

#include <string>
#include <vector>

#include "oddgraph/germ.hpp"
#include "oddgraph/hamilton.hpp"
#include "oddgraph/report.hpp"
#include "oddgraph/two_factor.hpp"
#include "oddgraph/verification.hpp"

namespace oddgraph {

enum class ListVariant { Plain, Underlined, Middle };

/// One line per germ: rank, germ, F(alpha), f(alpha).
std::string render_germs_text(int k);
std::string render_germs_json(int k);
/// Details of one germ: rank, F, f, Dyck word, underlined string, h_0, p, pi.
std::string render_germ_text(const Germ& g);
std::string render_germ_json(const Germ& g);

/// Header "ord:F;pi" then one row per vertex with its supplementation
/// position ("_i") and class tag ("ord.j").
std::string render_list_text(const CycleList& list, ListVariant variant);
std::string render_lists_text(const TwoFactor& tf, ListVariant variant);

std::string render_report_text(const CheckReport& report);

std::string two_factor_json(const TwoFactor& tf, const CheckReport& report);
std::string cycle_json(int k, GraphKind graph, const std::vector<Mask>& cycle, const CheckReport& report);
std::string coloring_json(int k, const std::vector<ColoredEdge>& edges, const CheckReport& report);
std::string arc_factorization_json(int k, const CheckReport& report);
std::string arc_factorization_dot(int k);
std::string hypergraph_json(const SpanningTreeSet& tree, const CheckReport& report);
std::string hypergraph_text(const SpanningTreeSet& tree);
std::string report_json(const CheckReport& report);

/// The seed tuples S1(w), S2, S3, S4 with bracketed barred bits.
std::string seed_tuples_text();

/// Re-checks an exported cycle, two-factor, coloring or hypergraph document
/// with the independent checkers. Throws ErrorCode::Parse on malformed input.
CheckReport verify_document(const std::string& json_text);

}  // namespace oddgraph
