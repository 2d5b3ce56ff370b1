#include "oddgraph/oddgraph.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oddgraph/error.hpp"
#include "oddgraph/hamilton.hpp"
#include "oddgraph/middle_levels.hpp"
#include "oddgraph/odd_graph.hpp"
#include "oddgraph/render.hpp"
#include "oddgraph/suite.hpp"
#include "oddgraph/two_factor.hpp"
#include "oddgraph/verification.hpp"

using namespace oddgraph;

struct og_two_factor {
  TwoFactor tf;
};

struct og_cycle {
  int k = 0;
  GraphKind graph = GraphKind::Odd;
  std::vector<Mask> vertices;
  CheckReport report;
};

struct og_report {
  CheckReport report;
};

namespace {

thread_local std::string g_last_error;

og_status status_of(ErrorCode code) { return static_cast<og_status>(static_cast<int>(code) + 1); }

og_status set_error(og_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes and the thread-local message.
template <typename Fn>
og_status guard(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(OG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(OG_ERR_INTERNAL, e.what());
  }
}

og_status null_argument(const char* what) { return set_error(OG_ERR_NULL_ARGUMENT, std::string(what) + " is null"); }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

og_status emit(char** out, const std::string& s) {
  *out = copy_string(s);
  return OG_OK;
}

og_status copy_masks(const std::vector<Mask>& masks, uint64_t* buffer, size_t cap, size_t* len) {
  *len = masks.size();
  if (buffer == nullptr && cap > 0) return null_argument("buffer");
  const size_t m = std::min(cap, masks.size());
  for (size_t i = 0; i < m; ++i) buffer[i] = masks[i];
  if (cap < masks.size() && cap > 0)
    return set_error(OG_ERR_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(cap) + " of " +
                                                  std::to_string(masks.size()) + " vertices");
  return OG_OK;
}

void require_format(og_format format, bool allow_dot) {
  if (format == OG_FORMAT_TEXT || format == OG_FORMAT_JSON) return;
  if (format == OG_FORMAT_DOT && allow_dot) return;
  fail(ErrorCode::Unsupported, "output format not available for this object");
}

std::string cycle_text(int k, const std::vector<Mask>& vertices, const CheckReport& report) {
  std::ostringstream out;
  for (Mask v : vertices) out << to_bitstring(Vertex{v}, 2 * k + 1) << '\n';
  out << render_report_text(report);
  return out.str();
}

}  // namespace

extern "C" {

const char* og_version(void) { return "1.0.0"; }

const char* og_status_name(og_status status) {
  switch (status) {
    case OG_OK: return "ok";
    case OG_ERR_NULL_ARGUMENT: return "null-argument";
    case OG_ERR_BUFFER_TOO_SMALL: return "buffer-too-small";
    case OG_ERR_INTERNAL: return "internal";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(ErrorCode::Parse)) return error_code_name(static_cast<ErrorCode>(code));
  return "unknown";
}

const char* og_last_error_message(void) { return g_last_error.c_str(); }

void og_string_free(char* s) { std::free(s); }

og_status og_catalan(int k, uint64_t* out) {
  if (!out) return null_argument("out");
  return guard([&] {
    *out = catalan(k);
    return OG_OK;
  });
}

og_status og_germ_rank(int k, const char* germ, uint64_t* out) {
  if (!germ) return null_argument("germ");
  if (!out) return null_argument("out");
  return guard([&] {
    *out = germ_rank(Germ::parse(k, germ));
    return OG_OK;
  });
}

og_status og_germ_unrank(int k, uint64_t rank, char** out) {
  if (!out) return null_argument("out");
  return guard([&] { return emit(out, germ_unrank(k, rank).str()); });
}

og_status og_germ_describe(int k, const char* germ, og_format format, char** out) {
  if (!germ) return null_argument("germ");
  if (!out) return null_argument("out");
  return guard([&] {
    require_format(format, false);
    const Germ g = Germ::parse(k, germ);
    return emit(out, format == OG_FORMAT_JSON ? render_germ_json(g) : render_germ_text(g));
  });
}

og_status og_germs_render(int k, og_format format, char** out) {
  if (!out) return null_argument("out");
  return guard([&] {
    require_format(format, false);
    return emit(out, format == OG_FORMAT_JSON ? render_germs_json(k) : render_germs_text(k));
  });
}

og_status og_canonical_rotation(int k, const char* bitstring, char** germ, int* rotation) {
  if (!bitstring) return null_argument("bitstring");
  if (!germ) return null_argument("germ");
  if (!rotation) return null_argument("rotation");
  return guard([&] {
    if (static_cast<int>(std::strlen(bitstring)) != 2 * k + 1)
      fail(ErrorCode::Weight, "bitstring length differs from 2k+1");
    const CanonicalForm cf = canonical_rotation(parse_bitstring(bitstring), k);
    *rotation = cf.rotation;
    return emit(germ, cf.germ.str());
  });
}

og_status og_two_factor_build(int k, unsigned threads, og_two_factor** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] {
    auto* h = new og_two_factor{build_two_factor(k, threads)};
    *out = h;
    return OG_OK;
  });
}

void og_two_factor_free(og_two_factor* tf) { delete tf; }

og_status og_two_factor_cycle_count(const og_two_factor* tf, uint64_t* out) {
  if (!tf) return null_argument("two-factor");
  if (!out) return null_argument("out");
  *out = tf->tf.cycles.size();
  return OG_OK;
}

og_status og_two_factor_cycle(const og_two_factor* tf, uint64_t index, uint64_t* buffer, size_t cap, size_t* len) {
  if (!tf) return null_argument("two-factor");
  if (!len) return null_argument("len");
  return guard([&] {
    if (index >= tf->tf.cycles.size()) fail(ErrorCode::Range, "cycle index out of range");
    std::vector<Mask> masks;
    for (const auto& r : tf->tf.cycles[index].rows) masks.push_back(r.vertex.bits);
    return copy_masks(masks, buffer, cap, len);
  });
}

og_status og_two_factor_render(const og_two_factor* tf, og_format format, char** out) {
  if (!tf) return null_argument("two-factor");
  if (!out) return null_argument("out");
  return guard([&] {
    require_format(format, false);
    const CheckReport report = check_two_factor_structure(tf->tf);
    if (format == OG_FORMAT_JSON) return emit(out, two_factor_json(tf->tf, report));
    return emit(out, render_lists_text(tf->tf, ListVariant::Plain) + render_report_text(report));
  });
}

og_status og_two_factor_render_lists(const og_two_factor* tf, og_list_variant variant, char** out) {
  if (!tf) return null_argument("two-factor");
  if (!out) return null_argument("out");
  return guard([&] {
    const ListVariant v = variant == OG_LIST_UNDERLINED ? ListVariant::Underlined
                          : variant == OG_LIST_MIDDLE   ? ListVariant::Middle
                                                        : ListVariant::Plain;
    return emit(out, render_lists_text(tf->tf, v));
  });
}

og_status og_two_factor_check(const og_two_factor* tf, og_report** out) {
  if (!tf) return null_argument("two-factor");
  if (!out) return null_argument("out");
  return guard([&] {
    *out = new og_report{check_two_factor_structure(tf->tf)};
    return OG_OK;
  });
}

og_status og_hamilton_build(og_graph graph, int k, unsigned threads, og_cycle** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guard([&] {
    if (k == 2) fail(ErrorCode::Unsupported, "O_2 is the hypohamiltonian Petersen graph; the construction needs k >= 3");
    if (k < 3) fail(ErrorCode::Unsupported, "the construction needs k >= 3");
    auto h = std::make_unique<og_cycle>();
    h->k = k;
    const HamiltonAssembly assembly = assemble_hamilton(k, threads);
    if (graph == OG_GRAPH_MIDDLE) {
      h->graph = GraphKind::Middle;
      h->vertices = lift_hamilton(assembly).cycle;
    } else {
      for (Vertex v : assembly.cycle) h->vertices.push_back(v.bits);
    }
    h->report = check_hamiltonian(h->vertices, Universe(h->graph, k));
    *out = h.release();
    return OG_OK;
  });
}

void og_cycle_free(og_cycle* c) { delete c; }

og_status og_cycle_length(const og_cycle* c, uint64_t* out) {
  if (!c) return null_argument("cycle");
  if (!out) return null_argument("out");
  *out = c->vertices.size();
  return OG_OK;
}

og_status og_cycle_vertices(const og_cycle* c, uint64_t* buffer, size_t cap, size_t* len) {
  if (!c) return null_argument("cycle");
  if (!len) return null_argument("len");
  return guard([&] { return copy_masks(c->vertices, buffer, cap, len); });
}

og_status og_cycle_render(const og_cycle* c, og_format format, char** out) {
  if (!c) return null_argument("cycle");
  if (!out) return null_argument("out");
  return guard([&] {
    require_format(format, false);
    if (format == OG_FORMAT_JSON) return emit(out, cycle_json(c->k, c->graph, c->vertices, c->report));
    return emit(out, cycle_text(c->k, c->vertices, c->report));
  });
}

og_status og_cycle_check(const og_cycle* c, og_report** out) {
  if (!c) return null_argument("cycle");
  if (!out) return null_argument("out");
  return guard([&] {
    *out = new og_report{check_hamiltonian(c->vertices, Universe(c->graph, c->k))};
    return OG_OK;
  });
}

og_status og_spanning_tree_render(int k, og_format format, char** out) {
  if (!out) return null_argument("out");
  return guard([&] {
    require_format(format, false);
    const SpanningTreeSet tree = spanning_tree(k);
    const CheckReport report = check_spanning_tree(tree);
    if (format == OG_FORMAT_JSON) return emit(out, hypergraph_json(tree, report));
    return emit(out, hypergraph_text(tree) + render_report_text(report));
  });
}

og_status og_seed_tuples_render(char** out) {
  if (!out) return null_argument("out");
  return guard([&] { return emit(out, seed_tuples_text()); });
}

og_status og_arc_factorization_render(int k, unsigned threads, og_format format, char** out) {
  if (!out) return null_argument("out");
  return guard([&] {
    require_format(format, true);
    if (format == OG_FORMAT_DOT) return emit(out, arc_factorization_dot(k));
    const CheckReport report = verify_arc_factorization(k, threads);
    if (format == OG_FORMAT_JSON) return emit(out, arc_factorization_json(k, report));
    std::ostringstream text;
    const int n = 2 * k + 1;
    for (Vertex u : odd_graph_vertices(k))
      for (Vertex v : neighbors(u, k)) {
        const ColoredArc a = arc_color(u, v, k);
        text << to_bitstring(u, n) << ' ' << to_bitstring(v, n) << ' ' << a.color << ' ' << a.shared_position << '\n';
      }
    text << render_report_text(report);
    return emit(out, text.str());
  });
}

og_status og_modular_coloring_render(int k, unsigned threads, og_format format, char** out) {
  if (!out) return null_argument("out");
  return guard([&] {
    require_format(format, false);
    const auto edges = modular_coloring(k, threads);
    CheckReport report = check_matching_coloring(edges, k);
    report.name = "modular-factorization";
    if (format == OG_FORMAT_JSON) return emit(out, coloring_json(k, edges, report));
    std::ostringstream text;
    const int n = 2 * k + 1;
    for (const auto& e : edges)
      text << to_bitstring(Vertex{e.lower}, n) << ' ' << to_bitstring(Vertex{e.upper}, n) << ' ' << e.color << '\n';
    text << render_report_text(report);
    return emit(out, text.str());
  });
}

og_status og_check_arc_factorization(int k, unsigned threads, og_report** out) {
  if (!out) return null_argument("out");
  return guard([&] {
    *out = new og_report{verify_arc_factorization(k, threads)};
    return OG_OK;
  });
}

og_status og_check_modular_factorization(int k, unsigned threads, og_report** out) {
  if (!out) return null_argument("out");
  return guard([&] {
    *out = new og_report{verify_modular_factorization(k, threads)};
    return OG_OK;
  });
}

og_status og_check_class_census(int k, og_report** out) {
  if (!out) return null_argument("out");
  return guard([&] {
    *out = new og_report{check_class_census(k)};
    return OG_OK;
  });
}

og_status og_verify_document(const char* json, og_report** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guard([&] {
    *out = new og_report{verify_document(json)};
    return OG_OK;
  });
}

void og_report_free(og_report* r) { delete r; }

og_status og_report_passed(const og_report* r, int* passed) {
  if (!r) return null_argument("report");
  if (!passed) return null_argument("passed");
  *passed = r->report.passed ? 1 : 0;
  return OG_OK;
}

og_status og_report_render(const og_report* r, og_format format, char** out) {
  if (!r) return null_argument("report");
  if (!out) return null_argument("out");
  return guard([&] {
    require_format(format, false);
    return emit(out, format == OG_FORMAT_JSON ? report_json(r->report) : render_report_text(r->report));
  });
}

og_status og_verify_suite(int k, unsigned threads, og_format format, char** out, int* all_passed) {
  if (!out) return null_argument("out");
  if (!all_passed) return null_argument("all_passed");
  return guard([&] {
    require_format(format, false);
    const auto reports = run_verification_suite(k, threads);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed;
    *all_passed = ok ? 1 : 0;
    if (format == OG_FORMAT_JSON) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(nlohmann::json::parse(report_json(r)));
      return emit(out, nlohmann::json{{"k", k}, {"passed", ok}, {"reports", arr}}.dump(1) + "\n");
    }
    std::string text;
    for (const auto& r : reports) text += render_report_text(r);
    text += std::string("suite k=") + std::to_string(k) + (ok ? ": PASS\n" : ": FAIL\n");
    return emit(out, text);
  });
}

og_status og_bench(int k, unsigned threads, og_format format, char** out) {
  if (!out) return null_argument("out");
  return guard([&] {
    require_format(format, false);
    const auto timings = run_benchmark(k, threads);
    if (format == OG_FORMAT_JSON) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& t : timings) arr.push_back({{"stage", t.stage}, {"seconds", t.seconds}});
      return emit(out, nlohmann::json{{"k", k}, {"threads", threads}, {"stages", arr}}.dump(1) + "\n");
    }
    std::ostringstream text;
    for (const auto& t : timings) text << t.stage << ' ' << t.seconds << " s\n";
    return emit(out, text.str());
  });
}

}  // extern "C"
