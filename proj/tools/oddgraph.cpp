// Command-line front end. Talks to the library only through oddgraph.h.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oddgraph/oddgraph.h"

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kRefused = 3 };

constexpr int kConstructionCap = 10;
constexpr int kExhaustiveCap = 6;
constexpr int kDotCap = 4;

struct Options {
  int k = 3;
  std::string format = "text";
  std::string output;
  unsigned threads = 1;
  bool verbose = false;
  int max_k = 0;  // 0: use the per-command default cap
};

og_format format_of(const std::string& name) {
  if (name == "json") return OG_FORMAT_JSON;
  if (name == "dot") return OG_FORMAT_DOT;
  return OG_FORMAT_TEXT;
}

class Runner {
 public:
  explicit Runner(const Options& opts) : opts_(opts) {}

  // Refuses k above the cap unless --max-k raises it.
  bool allowed(int cap, const char* what) const {
    const int limit = opts_.max_k > 0 ? opts_.max_k : cap;
    if (opts_.k <= limit) return true;
    std::cerr << "refusing " << what << " for k = " << opts_.k << " (limit " << limit
              << "); pass --max-k to raise it\n";
    return false;
  }

  int library_error(og_status st) const {
    std::cerr << "error [" << og_status_name(st) << "]: " << og_last_error_message() << '\n';
    return st == OG_ERR_UNSUPPORTED ? kRefused : kFailure;
  }

  // Writes text to --output (relative paths resolve under ODDGRAPH_OUTPUT_DIR) or stdout.
  int write(char* text) const {
    std::string s(text);
    og_string_free(text);
    if (opts_.output.empty()) {
      std::cout << s;
      return kOk;
    }
    std::filesystem::path path(opts_.output);
    if (const char* dir = std::getenv("ODDGRAPH_OUTPUT_DIR"); dir && *dir && path.is_relative())
      path = std::filesystem::path(dir) / path;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << '\n';
      return kFailure;
    }
    out << s;
    if (opts_.verbose) std::cerr << "wrote " << path << '\n';
    return kOk;
  }

  // Takes the slot the call filled, so the call is sequenced before the read.
  int emit(og_status st, char** text) const { return st == OG_OK ? write(*text) : library_error(st); }

  const Options& opts() const { return opts_; }

 private:
  const Options& opts_;
};

int report_exit(og_report* report) {
  int passed = 0;
  og_report_passed(report, &passed);
  og_report_free(report);
  return passed ? kOk : kFailure;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odd graphs, middle levels and their Hamilton cycles"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("-f,--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("-o,--output", opts.output, "Output file (relative paths use ODDGRAPH_OUTPUT_DIR)");
  app.add_option("-t,--threads", opts.threads, "Worker threads; output does not depend on it")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_flag("-v,--verbose", opts.verbose, "Progress on stderr");
  app.add_option("--max-k", opts.max_k, "Raise the size limit for the chosen command")->check(CLI::Range(1, 30));

  auto add_k = [&](CLI::App* sub) {
    sub->add_option("-k,--k", opts.k, "Order k of O_k (n = 2k+1)")->check(CLI::Range(1, 30))->capture_default_str();
  };

  auto* germs = app.add_subcommand("germs", "Enumerate, rank or unrank k-germs");
  add_k(germs);
  std::string germ_text;
  std::int64_t unrank = -1;
  std::string canonical;
  germs->add_option("--germ", germ_text, "Describe one germ (digits a_{k-1}..a_1)");
  germs->add_option("--unrank", unrank, "Germ of the given rank");
  germs->add_option("--canonical", canonical, "Germ and rotation of a bitstring");

  auto* lists = app.add_subcommand("lists", "Vertical lists L(alpha) of the 2-factor");
  add_k(lists);
  std::string variant = "plain";
  lists->add_option("--variant", variant, "plain, underlined or middle")
      ->check(CLI::IsMember({"plain", "underlined", "middle"}))
      ->capture_default_str();

  auto* two_factor = app.add_subcommand("two-factor", "Uniform 2-factor of O_k");
  add_k(two_factor);

  auto* ham_odd = app.add_subcommand("hamilton-odd", "Hamilton cycle of O_k (k >= 3)");
  add_k(ham_odd);
  auto* ham_mid = app.add_subcommand("hamilton-middle", "Hamilton cycle of the middle-levels graph M_k (k >= 3)");
  add_k(ham_mid);

  auto* tree = app.add_subcommand("tree", "Spanning tree of the flip hypergraph");
  add_k(tree);
  bool seed_tuples = false;
  tree->add_flag("--seed-tuples", seed_tuples, "Print the seed tuples instead");

  auto* factorization = app.add_subcommand("factorization", "Arc factorization of O_k or modular coloring of M_k");
  add_k(factorization);
  std::string kind = "arc";
  factorization->add_option("--kind", kind, "arc or modular")
      ->check(CLI::IsMember({"arc", "modular"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the verification suite or re-check an exported document");
  add_k(verify);
  std::string from_file;
  verify->add_option("--from-file", from_file, "JSON document written by this tool");

  auto* bench = app.add_subcommand("bench", "Time the construction stages");
  add_k(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Runner run(opts);
  const og_format fmt = format_of(opts.format);
  const int k = opts.k;
  char* text = nullptr;

  if (germs->parsed()) {
    if (!germ_text.empty()) return run.emit(og_germ_describe(k, germ_text.c_str(), fmt, &text), &text);
    if (unrank >= 0) {
      og_status st = og_germ_unrank(k, static_cast<uint64_t>(unrank), &text);
      if (st != OG_OK) return run.library_error(st);
      std::string g(text);
      og_string_free(text);
      return run.emit(og_germ_describe(k, g.c_str(), fmt, &text), &text);
    }
    if (!canonical.empty()) {
      int rotation = 0;
      og_status st = og_canonical_rotation(k, canonical.c_str(), &text, &rotation);
      if (st != OG_OK) return run.library_error(st);
      std::cout << (text[0] ? text : "-") << ' ' << rotation << '\n';
      og_string_free(text);
      return kOk;
    }
    if (!run.allowed(kConstructionCap, "germ enumeration")) return kRefused;
    return run.emit(og_germs_render(k, fmt, &text), &text);
  }

  if (lists->parsed() || two_factor->parsed()) {
    if (!run.allowed(kConstructionCap, "the 2-factor")) return kRefused;
    og_two_factor* tf = nullptr;
    og_status st = og_two_factor_build(k, opts.threads, &tf);
    if (st != OG_OK) return run.library_error(st);
    if (lists->parsed()) {
      const og_list_variant v = variant == "underlined" ? OG_LIST_UNDERLINED
                                : variant == "middle"   ? OG_LIST_MIDDLE
                                                        : OG_LIST_PLAIN;
      st = og_two_factor_render_lists(tf, v, &text);
    } else {
      st = og_two_factor_render(tf, fmt, &text);
    }
    og_two_factor_free(tf);
    return run.emit(st, &text);
  }

  if (ham_odd->parsed() || ham_mid->parsed()) {
    if (!run.allowed(kConstructionCap, "Hamilton cycle construction")) return kRefused;
    og_cycle* cycle = nullptr;
    og_status st = og_hamilton_build(ham_odd->parsed() ? OG_GRAPH_ODD : OG_GRAPH_MIDDLE, k, opts.threads, &cycle);
    if (st != OG_OK) return run.library_error(st);
    og_report* report = nullptr;
    og_cycle_check(cycle, &report);
    st = og_cycle_render(cycle, fmt, &text);
    og_cycle_free(cycle);
    const int written = run.emit(st, &text);
    const int checked = report_exit(report);
    return written != kOk ? written : checked;
  }

  if (tree->parsed()) {
    if (seed_tuples) return run.emit(og_seed_tuples_render(&text), &text);
    if (!run.allowed(kConstructionCap, "the spanning tree")) return kRefused;
    return run.emit(og_spanning_tree_render(k, fmt, &text), &text);
  }

  if (factorization->parsed()) {
    if (fmt == OG_FORMAT_DOT) {
      if (kind != "arc") {
        std::cerr << "DOT export exists for the arc factorization only\n";
        return kUsage;
      }
      if (!run.allowed(kDotCap, "DOT export")) return kRefused;
    } else if (!run.allowed(kExhaustiveCap, "factorization export")) {
      return kRefused;
    }
    og_status st = kind == "arc" ? og_arc_factorization_render(k, opts.threads, fmt, &text)
                                 : og_modular_coloring_render(k, opts.threads, fmt, &text);
    return run.emit(st, &text);
  }

  if (verify->parsed()) {
    if (!from_file.empty()) {
      std::string doc;
      try {
        doc = read_file(from_file);
      } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kFailure;
      }
      og_report* report = nullptr;
      og_status st = og_verify_document(doc.c_str(), &report);
      if (st != OG_OK) return run.library_error(st);
      st = og_report_render(report, fmt == OG_FORMAT_DOT ? OG_FORMAT_TEXT : fmt, &text);
      const int written = run.emit(st, &text);
      const int checked = report_exit(report);
      return written != kOk ? written : checked;
    }
    if (!run.allowed(kExhaustiveCap, "the verification suite")) return kRefused;
    int all_passed = 0;
    og_status st = og_verify_suite(k, opts.threads, fmt, &text, &all_passed);
    if (st != OG_OK) return run.library_error(st);
    const int written = run.write(text);
    return written != kOk ? written : (all_passed ? kOk : kFailure);
  }

  if (bench->parsed()) {
    if (!run.allowed(kConstructionCap, "benchmarking")) return kRefused;
    return run.emit(og_bench(k, opts.threads, fmt, &text), &text);
  }
  return kUsage;
}
