#include "oddgraph/render.hpp"

#include <json.hpp>
#include <sstream>

#include "oddgraph/error.hpp"
#include "oddgraph/odd_graph.hpp"
#include "oddgraph/tpp.hpp"

namespace oddgraph {

using nlohmann::json;

namespace {

std::string digits_of(const std::vector<int>& values) {
  std::string s;
  for (int v : values) s += digit_char(v);
  return s;
}

json report_object(const CheckReport& r) {
  json counts = json::object();
  for (const auto& [key, value] : r.counts) counts[key] = value;
  return json{{"name", r.name},
              {"passed", r.passed},
              {"counts", counts},
              {"message", r.message},
              {"counterexample", r.counterexample}};
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

// '=' entries become the given marker.
std::string marked(const LabeledString& s, char marker) {
  std::string out = s.str();
  for (char& c : out)
    if (c == '=') c = marker;
  return out;
}

}  // namespace

std::string render_germs_text(int k) {
  std::ostringstream out;
  const auto germs = all_germs(k);
  for (Rank r = 0; r < germs.size(); ++r) {
    const Germ& g = germs[r];
    out << r << ' ' << (g.str().empty() ? "-" : g.str()) << ' ' << string_of_germ(g).str() << ' '
        << to_bitstring(bitstring_of_germ(g), g.n()) << '\n';
  }
  return out.str();
}

std::string render_germs_json(int k) {
  json arr = json::array();
  const auto germs = all_germs(k);
  for (Rank r = 0; r < germs.size(); ++r) {
    const Germ& g = germs[r];
    arr.push_back({{"rank", r},
                   {"germ", g.str()},
                   {"string", string_of_germ(g).str()},
                   {"bitstring", to_bitstring(bitstring_of_germ(g), g.n())}});
  }
  return dump(json{{"k", k}, {"count", germs.size()}, {"germs", arr}});
}

namespace {

json germ_object(const Germ& g) {
  const SupplementationOrder so = pi_of_germ(g);
  const auto levels = reversal_levels(parenthesize(g));
  json h = json::array();
  for (const auto& level : levels) h.push_back(level.str());
  return json{{"k", g.k()},
              {"rank", germ_rank(g)},
              {"germ", g.str()},
              {"string", string_of_germ(g).str()},
              {"bitstring", to_bitstring(bitstring_of_germ(g), g.n())},
              {"dyck_word", dyck_word_of_germ(g).str()},
              {"underlined", underline_string(g).str()},
              {"reversals", h},
              {"p", so.p},
              {"pi", so.pi}};
}

}  // namespace

std::string render_germ_text(const Germ& g) {
  const json j = germ_object(g);
  std::ostringstream out;
  out << "k " << g.k() << '\n';
  out << "rank " << j["rank"].get<Rank>() << '\n';
  out << "germ " << g.str() << '\n';
  out << "F " << j["string"].get<std::string>() << '\n';
  out << "f " << j["bitstring"].get<std::string>() << '\n';
  out << "DW " << j["dyck_word"].get<std::string>() << '\n';
  out << "underlined " << j["underlined"].get<std::string>() << '\n';
  int level = 0;
  for (const auto& h : j["reversals"]) out << 'h' << level++ << ' ' << h.get<std::string>() << '\n';
  out << "p " << digits_of(j["p"].get<std::vector<int>>()) << '\n';
  out << "pi " << digits_of(j["pi"].get<std::vector<int>>()) << '\n';
  return out.str();
}

std::string render_germ_json(const Germ& g) { return dump(germ_object(g)); }

std::string render_list_text(const CycleList& list, ListVariant variant) {
  const SupplementationOrder so = pi_of_germ(list.germ);
  std::ostringstream out;
  out << list.rank << ':' << string_of_germ(list.germ).str() << ';' << digits_of(so.pi) << '\n';
  std::vector<UnderlinedString> underlined;
  if (variant == ListVariant::Underlined) underlined = build_underlined_list(list);
  for (std::size_t m = 0; m < list.rows.size(); ++m) {
    const int mi = static_cast<int>(m);
    const CycleRow& row = list.rows[m];
    switch (variant) {
      case ListVariant::Plain:
        out << list.label(mi).str();
        break;
      case ListVariant::Underlined:
        out << underlined[m].str();
        break;
      case ListVariant::Middle: {
        const bool even = m % 2 == 0;
        out << marked(list.label(mi), even ? '>' : '<') << ' ' << marked(list.label(mi), even ? '<' : '>');
        break;
      }
    }
    out << " _" << digit_char(list.positions[m]) << ' ' << row.class_rank << '.' << digit_char(row.rotation) << '\n';
  }
  return out.str();
}

std::string render_lists_text(const TwoFactor& tf, ListVariant variant) {
  std::string out;
  for (const auto& c : tf.cycles) out += render_list_text(c, variant);
  return out;
}

std::string render_report_text(const CheckReport& r) {
  std::ostringstream out;
  out << r.name << ": " << (r.passed ? "PASS" : "FAIL");
  for (const auto& [key, value] : r.counts) out << ' ' << key << '=' << value;
  if (!r.passed) {
    out << " (" << r.message << "; counterexample";
    for (auto x : r.counterexample) out << ' ' << x;
    out << ')';
  }
  out << '\n';
  return out.str();
}

std::string report_json(const CheckReport& report) { return dump(report_object(report)); }

std::string two_factor_json(const TwoFactor& tf, const CheckReport& report) {
  json cycles = json::array();
  for (const auto& c : tf.cycles) {
    std::vector<Mask> vs;
    for (const auto& r : c.rows) vs.push_back(r.vertex.bits);
    cycles.push_back({{"rank", c.rank}, {"germ", c.germ.str()}, {"vertices", vs}, {"positions", c.positions}});
  }
  return dump(json{{"k", tf.k},
                   {"graph", "odd"},
                   {"kind", "two-factor"},
                   {"count", tf.cycles.size()},
                   {"cycles", cycles},
                   {"report", report_object(report)}});
}

std::string cycle_json(int k, GraphKind graph, const std::vector<Mask>& cycle, const CheckReport& report) {
  return dump(json{{"k", k},
                   {"graph", graph_kind_name(graph)},
                   {"kind", "hamilton"},
                   {"length", cycle.size()},
                   {"vertices", cycle},
                   {"report", report_object(report)}});
}

std::string coloring_json(int k, const std::vector<ColoredEdge>& edges, const CheckReport& report) {
  json arr = json::array();
  for (const auto& e : edges) arr.push_back({{"lower", e.lower}, {"upper", e.upper}, {"color", e.color}});
  return dump(json{{"k", k},
                   {"graph", "middle"},
                   {"kind", "coloring"},
                   {"edges", arr},
                   {"report", report_object(report)}});
}

std::string arc_factorization_json(int k, const CheckReport& report) {
  json arcs = json::array();
  for (Vertex u : odd_graph_vertices(k))
    for (Vertex v : neighbors(u, k)) {
      const ColoredArc a = arc_color(u, v, k);
      arcs.push_back({{"tail", u.bits}, {"head", v.bits}, {"color", a.color}, {"position", a.shared_position}});
    }
  return dump(json{{"k", k},
                   {"graph", "odd"},
                   {"kind", "arc-factorization"},
                   {"arcs", arcs},
                   {"report", report_object(report)}});
}

std::string arc_factorization_dot(int k) {
  const int n = 2 * k + 1;
  std::ostringstream out;
  out << "graph O" << k << " {\n";
  for (Vertex u : odd_graph_vertices(k)) out << "  \"" << to_bitstring(u, n) << "\";\n";
  for (Vertex u : odd_graph_vertices(k))
    for (Vertex v : neighbors(u, k)) {
      if (v.bits < u.bits) continue;
      const ColoredArc a = arc_color(u, v, k);
      out << "  \"" << to_bitstring(u, n) << "\" -- \"" << to_bitstring(v, n) << "\" [label=\"" << a.color << '/'
          << k - a.color << " @" << a.shared_position << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

std::string hypergraph_json(const SpanningTreeSet& tree, const CheckReport& report) {
  json edges = json::array();
  for (const auto& h : tree.hyperedges) {
    std::vector<std::string> words;
    for (const auto& w : h.tuple.words) words.push_back(w.str());
    edges.push_back({{"germs", h.germs}, {"bars", h.bars}, {"words", words}});
  }
  return dump(json{{"k", tree.k},
                   {"kind", "hypergraph"},
                   {"germ_count", catalan(tree.k)},
                   {"hyperedges", edges},
                   {"report", report_object(report)}});
}

std::string hypergraph_text(const SpanningTreeSet& tree) {
  std::ostringstream out;
  for (const auto& h : tree.hyperedges) {
    out << '{';
    for (std::size_t i = 0; i < h.germs.size(); ++i) out << (i ? "," : "") << h.germs[i];
    out << "} " << h.tuple.str() << '\n';
  }
  return out.str();
}

std::string seed_tuples_text() {
  std::ostringstream out;
  std::string s1 = seed_tuple(SeedName::S1).str();
  std::string with_w;
  // Insert the symbolic w after the leading 0 of each word.
  bool word_start = true;
  for (char c : s1) {
    with_w += c;
    if (word_start && c == '0') with_w += 'w';
    word_start = c == ' ';
  }
  out << "S1(w) " << with_w << '\n';
  out << "S2 " << seed_tuple(SeedName::S2).str() << '\n';
  out << "S3 " << seed_tuple(SeedName::S3).str() << '\n';
  out << "S4 " << seed_tuple(SeedName::S4).str() << '\n';
  return out.str();
}

CheckReport verify_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  try {
    const int k = doc.at("k").get<int>();
    if (k < 1 || k > kMaxOrder) fail(ErrorCode::Range, "k out of range in document");
    if (doc.contains("edges")) {
      std::vector<ColoredEdge> edges;
      for (const auto& e : doc.at("edges"))
        edges.push_back({e.at("lower").get<Mask>(), e.at("upper").get<Mask>(), e.at("color").get<int>()});
      return check_matching_coloring(edges, k);
    }
    if (doc.contains("hyperedges")) {
      std::vector<HyperedgeView> views;
      for (const auto& h : doc.at("hyperedges"))
        views.push_back({h.at("germs").get<std::vector<std::uint64_t>>(), h.at("bars").get<std::vector<int>>()});
      return check_hypertree(views, catalan(k));
    }
    if (doc.contains("cycles")) {
      std::vector<std::vector<Mask>> cycles;
      for (const auto& c : doc.at("cycles")) cycles.push_back(c.at("vertices").get<std::vector<Mask>>());
      return check_cycle_cover(cycles, catalan(k), static_cast<std::uint64_t>(2 * k + 1), Universe(GraphKind::Odd, k));
    }
    if (doc.contains("vertices")) {
      const std::string graph = doc.value("graph", std::string("odd"));
      if (graph != "odd" && graph != "middle") fail(ErrorCode::Parse, "unknown graph '" + graph + "'");
      const GraphKind kind = graph == "odd" ? GraphKind::Odd : GraphKind::Middle;
      CheckReport r = check_hamiltonian(doc.at("vertices").get<std::vector<Mask>>(), Universe(kind, k));
      if (doc.contains("length") && doc.at("length").get<std::uint64_t>() != r.counts["length"])
        r.fail("declared length differs from the vertex array", {doc.at("length").get<std::uint64_t>()});
      return r;
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed document: ") + e.what());
  }
  fail(ErrorCode::Parse, "document has no cycle, cycles, edges or hyperedges");
}

}  // namespace oddgraph
