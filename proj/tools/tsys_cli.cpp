#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "tsys/classify.hpp"
#include "tsys/compatibility.hpp"
#include "tsys/enumerate.hpp"
#include "tsys/io.hpp"
#include "tsys/saturation.hpp"
#include "tsys/transfer.hpp"
#include "tsys/verify.hpp"

namespace {

using nlohmann::json;
using namespace tsys;

// Exit codes: 0 success / true verdict; 1 false verdict under --strict;
// 2 input error; 3 resource guard exceeded.
enum ExitCode { kOk = 0, kFalseVerdict = 1, kInputError = 2, kResource = 3 };

json vertex_json(Vertex v) { return json::array({v.i, v.j}); }
json edge_json(const Edge& e) {
  return json::array({vertex_json(e.src), vertex_json(e.dst)});
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct LoadOptions {
  bool swap_pq = false;
};

TsysDocument load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  TsysDocument doc = document_from_json(j);
  doc.name = path;
  return doc;
}

TsysDocument load_document(const std::string& path, const LoadOptions& opts) {
  TsysDocument doc = path.ends_with(".json") ? load_json_file(path)
                                             : load_tsys_file(path);
  for (const std::string& w : doc.warnings)
    std::cerr << "warning: " << path << ": " << w << "\n";
  if (opts.swap_pq) {
    Grid swapped(doc.grid.s(), doc.grid.r());
    std::vector<Edge> edges;
    for (const Edge& e : doc.edges)
      edges.push_back({{e.src.j, e.src.i}, {e.dst.j, e.dst.i}});
    std::sort(edges.begin(), edges.end());
    doc.grid = swapped;
    doc.edges = std::move(edges);
  }
  return doc;
}

TransferSystem load_system(const std::string& path, const LoadOptions& opts) {
  TsysDocument doc = load_document(path, opts);
  try {
    return require_transfer_system(doc.grid, doc.edges);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what() +
                     "; run `tsys close` to complete the edge set");
  }
}

int run_validate(const std::string& path, const LoadOptions& load,
                 bool as_json, bool strict) {
  TsysDocument doc = load_document(path, load);
  ValidationReport report = validate(doc.grid, doc.edges);
  if (as_json) {
    json j;
    j["valid"] = report.valid();
    auto arr = json::array();
    for (const auto& v : report.violations)
      arr.push_back({{"axiom", to_string(v.axiom)},
                     {"missing", edge_json(v.missing)},
                     {"witness", json::array({vertex_json(v.witness_u),
                                              vertex_json(v.witness_v),
                                              vertex_json(v.witness_w)})}});
    j["violations"] = std::move(arr);
    print_json(j);
  } else if (report.valid()) {
    std::cout << "valid transfer system (" << doc.edges.size()
              << " strict edges)\n";
  } else {
    std::cout << "invalid: " << report.violations.size() << " violation(s)\n";
    for (const auto& v : report.violations)
      std::cout << "  " << to_string(v.axiom) << ": missing "
                << to_string(v.missing) << " (from " << to_string(v.witness_u)
                << ", " << to_string(v.witness_v) << ", "
                << to_string(v.witness_w) << ")\n";
  }
  return !report.valid() && strict ? kFalseVerdict : kOk;
}

int run_compat(const std::string& path_t, const std::string& path_tp,
               const LoadOptions& load, bool as_json, bool strict) {
  TransferSystem t = load_system(path_t, load);
  TransferSystem tp = load_system(path_tp, load);
  CompatReport report = is_compatible(t, tp);
  if (as_json) {
    json j;
    j["compatible"] = report.compatible;
    auto missing = json::array();
    for (const Edge& e : report.missing_containment)
      missing.push_back(edge_json(e));
    j["missing_containment"] = std::move(missing);
    auto viol = json::array();
    for (const auto& v : report.violations)
      viol.push_back({{"a", vertex_json(v.a)},
                      {"b", vertex_json(v.b)},
                      {"c", vertex_json(v.c)},
                      {"b_meet_c", vertex_json(v.b_meet_c)}});
    j["violations"] = std::move(viol);
    print_json(j);
  } else if (report.compatible) {
    std::cout << "compatible\n";
  } else {
    std::cout << "incompatible\n";
    for (const Edge& e : report.missing_containment)
      std::cout << "  containment: " << to_string(e)
                << " is in T but not in T'\n";
    for (const auto& v : report.violations) {
      if (v.b == v.c) continue;  // containment cases already shown
      std::cout << "  witness: A=" << to_string(v.a) << " B=" << to_string(v.b)
                << " C=" << to_string(v.c)
                << " B\xE2\x88\xA9\x43=" << to_string(v.b_meet_c)
                << "; missing " << to_string(Edge{v.c, v.a}) << "\n";
    }
  }
  return !report.compatible && strict ? kFalseVerdict : kOk;
}

int run_components(const std::string& path, const LoadOptions& load,
                   bool as_json) {
  TransferSystem t = load_system(path, load);
  ComponentPartition parts = components(t);
  if (as_json) {
    json j;
    j["count"] = parts.count;
    auto arr = json::array();
    for (int c = 0; c < parts.count; ++c) {
      auto members = json::array();
      for (Vertex v : parts.members[c]) members.push_back(vertex_json(v));
      arr.push_back({{"id", c},
                     {"smallest", vertex_json(parts.smallest[c])},
                     {"shape", shape_of(t, parts, c).name()},
                     {"members", std::move(members)}});
    }
    j["components"] = std::move(arr);
    print_json(j);
    return kOk;
  }
  std::cout << "components: " << parts.count << "\n";
  for (int c = 0; c < parts.count; ++c) {
    std::cout << "  [" << c << "] smallest=" << to_string(parts.smallest[c])
              << " shape=" << shape_of(t, parts, c).name() << " members:";
    for (Vertex v : parts.members[c]) std::cout << " " << to_string(v);
    std::cout << "\n";
  }
  return kOk;
}

int run_lsp(const std::string& path, const LoadOptions& load, bool use_oracle,
            bool show_witness, int max_vertices, bool as_json, bool strict) {
  TransferSystem t = load_system(path, load);
  LspVerdict verdict = is_lsp_fast(t);
  ComponentPartition parts = components(t);

  std::optional<bool> oracle_agrees;
  if (use_oracle)
    oracle_agrees = is_lsp_oracle(t, max_vertices).is_lsp == verdict.is_lsp;

  std::string reason = lsp_reason_name(verdict.reason);
  if (parts.count == 2) reason += ", " + shape_of(t, parts, 0).name();

  if (as_json) {
    json j;
    j["lsp"] = verdict.is_lsp;
    j["reason"] = reason;
    j["witness"] =
        verdict.witness ? system_to_json(*verdict.witness) : json(nullptr);
    if (oracle_agrees) j["oracle_agrees"] = *oracle_agrees;
    print_json(j);
  } else {
    std::cout << (verdict.is_lsp ? "LSP (" : "not LSP (") << reason << ")";
    if (oracle_agrees)
      std::cout << (*oracle_agrees ? "; oracle agrees" : "; ORACLE DISAGREES");
    std::cout << "\n";
    if (verdict.witness && show_witness) {
      std::cout << "witness (a compatible superset that is neither the hull "
                   "nor complete):\n"
                << render_tsys(*verdict.witness);
    }
  }
  if (oracle_agrees && !*oracle_agrees) return kFalseVerdict;
  return !verdict.is_lsp && strict ? kFalseVerdict : kOk;
}

int run_enumerate(int r, int s, bool count_only, const std::string& filter,
                  int max_vertices, bool as_json) {
  Grid g(r, s);
  EnumerationLimits limits{.max_vertices = max_vertices};
  if (!filter.empty()) {
    SystemFilter f = filter == "saturated"   ? SystemFilter::Saturated
                     : filter == "connected" ? SystemFilter::Connected
                                             : SystemFilter::Lsp;
    std::uint64_t n = count_filtered(g, f, limits);
    if (as_json)
      print_json(json{{"count", n}, {"filter", filter}});
    else
      std::cout << n << "\n";
    return kOk;
  }
  if (count_only) {
    std::uint64_t n = count_transfer_systems(g, limits);
    if (as_json)
      print_json(json{{"count", n}});
    else
      std::cout << n << "\n";
    return kOk;
  }
  auto systems = enumerate_transfer_systems(g, limits);
  if (as_json) {
    json j;
    j["count"] = systems.size();
    auto arr = json::array();
    for (const TransferSystem& t : systems) arr.push_back(system_to_json(t));
    j["systems"] = std::move(arr);
    print_json(j);
    return kOk;
  }
  for (const TransferSystem& t : systems) {
    auto edges = t.strict_edges();
    if (edges.empty()) {
      std::cout << "(diagonal only)\n";
      continue;
    }
    for (std::size_t k = 0; k < edges.size(); ++k)
      std::cout << (k ? "  " : "") << to_string(edges[k]);
    std::cout << "\n";
  }
  return kOk;
}

int run_count_pairs(int r, int s, int max_vertices, bool as_json) {
  Grid g(r, s);
  std::uint64_t pairs =
      count_compatible_pairs(g, {.max_vertices = max_vertices});
  json j;
  j["pairs"] = pairs;
  std::ostringstream notes;
  if (g.is_chain() && g.vertex_count() >= 2) {
    unsigned n = static_cast<unsigned>(g.r() + g.s());
    BigInt expected = fuss_catalan_A(n + 1);
    BigInt literal = n >= 1 ? fuss_catalan_A(n) : BigInt(0);
    j["fuss_catalan_A_n_plus_1"] = expected.str();
    j["index_shifted_expression"] = literal.str();
    j["expression_mismatch"] = literal != expected;
    notes << "A_" << (n + 1) << "(3,1) = " << expected
          << (BigInt(pairs) == expected ? " (matches)" : " (MISMATCH)")
          << "\n";
    notes << "note: the expression (1/(3n+1))*binom(3n+1,n) at n=" << n
          << " evaluates to " << literal << ", which is A_" << n
          << "(3,1), one index below the exhaustive count\n";
  }
  if (as_json) {
    print_json(j);
  } else {
    std::cout << "compatible pairs on grid(" << r << "," << s
              << "): " << pairs << "\n"
              << notes.str();
  }
  return kOk;
}

int run_verify_cmd(int max_vertices, std::size_t sample_cap, bool as_json) {
  VerifyOptions opts;
  opts.max_vertices = max_vertices;
  opts.sample_cap = sample_cap;
  if (as_json) {
    VerifyResult result = run_verify(opts, nullptr);
    json j;
    j["all_pass"] = result.all_pass();
    auto arr = json::array();
    for (const auto& c : result.checks)
      arr.push_back(
          {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(arr);
    j["notices"] = result.notices;
    print_json(j);
    return result.all_pass() ? kOk : kFalseVerdict;
  }
  VerifyResult result = run_verify(opts, &std::cout);
  std::cout << (result.all_pass() ? "all checks passed"
                                  : "THERE WERE FAILURES")
            << " (" << result.checks.size() << " checks)\n";
  return result.all_pass() ? kOk : kFalseVerdict;
}

Edge parse_edge_arg(const std::string& text) {
  std::istringstream in(text);
  Edge e;
  std::string arrow, extra;
  if (!(in >> e.src.i >> e.src.j >> arrow >> e.dst.i >> e.dst.j) ||
      arrow != "->" || (in >> extra))
    throw InputError("bad edge '" + text + "', expected 'i1 j1 -> i2 j2'");
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "transfer systems on the divisor grid of a cyclic group of order "
      "p^r q^s: validation, closures, saturated hulls, compatible pairs, "
      "minimal compatible extensions, LSP classification and exhaustive "
      "enumeration"};
  app.require_subcommand(1);

  bool as_json = false, strict = false;
  LoadOptions load;
  auto add_common = [&](CLI::App* sub, bool verdict = false) {
    sub->add_flag("--json", as_json, "machine-readable output");
    sub->add_flag("--swap-pq", load.swap_pq,
                  "transpose inputs (swap the two prime directions)");
    if (verdict)
      sub->add_flag("--strict", strict, "exit 1 on a false verdict");
  };

  std::string file_a, file_b;
  int opt_r = 0, opt_s = 0, max_vertices = 12;
  std::size_t sample_cap = 10000;
  bool count_only = false, use_oracle = false, show_witness = false;
  bool color_components = false, no_labels = false, use_fixpoint = false;
  std::string filter;
  std::vector<std::string> edge_args;

  auto* c_validate = app.add_subcommand(
      "validate", "check the axioms for an edge set");
  c_validate->add_option("file", file_a)->required();
  add_common(c_validate, /*verdict=*/true);

  auto* c_close = app.add_subcommand(
      "close", "least transfer system containing the edge set");
  c_close->add_option("file", file_a)->required();
  add_common(c_close);

  auto* c_hull = app.add_subcommand("hull", "saturated hull");
  c_hull->add_option("file", file_a)->required();
  c_hull->add_flag("--fixpoint", use_fixpoint,
                   "use the saturation-rule fixpoint instead of the "
                   "componentwise construction");
  add_common(c_hull);

  auto* c_components =
      app.add_subcommand("components", "connected components and shapes");
  c_components->add_option("file", file_a)->required();
  add_common(c_components);

  auto* c_compat =
      app.add_subcommand("compat", "is (T, T') a compatible pair?");
  c_compat->add_option("t", file_a)->required();
  c_compat->add_option("tp", file_b)->required();
  add_common(c_compat, /*verdict=*/true);

  auto* c_extend = app.add_subcommand(
      "extend", "least compatible extension containing the given edges");
  c_extend->add_option("file", file_a)->required();
  c_extend->add_option("--edge", edge_args, "edge 'i1 j1 -> i2 j2'")
      ->required();
  add_common(c_extend);

  auto* c_lsp = app.add_subcommand(
      "lsp", "is the system lesser simply paired?");
  c_lsp->add_option("file", file_a)->required();
  c_lsp->add_flag("--oracle", use_oracle,
                  "cross-check with the exhaustive oracle");
  c_lsp->add_flag("--witness", show_witness, "print the witness system");
  c_lsp->add_option("--max-vertices", max_vertices, "oracle guard");
  add_common(c_lsp, /*verdict=*/true);

  auto* c_core =
      app.add_subcommand("core", "chain core (unit-edge subsystem)");
  c_core->add_option("file", file_a)->required();
  add_common(c_core);

  auto* c_enum =
      app.add_subcommand("enumerate", "all transfer systems on a grid");
  c_enum->add_option("--r", opt_r)->required();
  c_enum->add_option("--s", opt_s)->required();
  c_enum->add_flag("--count-only", count_only);
  c_enum->add_option("--filter", filter, "saturated | connected | lsp")
      ->check(CLI::IsMember({"saturated", "connected", "lsp"}));
  c_enum->add_option("--max-vertices", max_vertices, "enumeration guard");
  add_common(c_enum);

  auto* c_pairs = app.add_subcommand(
      "count-pairs", "count compatible pairs by exhaustive search");
  c_pairs->add_option("--r", opt_r)->required();
  c_pairs->add_option("--s", opt_s)->required();
  c_pairs->add_option("--max-vertices", max_vertices, "enumeration guard");
  add_common(c_pairs);

  auto* c_dot = app.add_subcommand("export-dot", "Graphviz rendering");
  c_dot->add_option("file", file_a)->required();
  c_dot->add_flag("--color-components", color_components);
  c_dot->add_flag("--no-labels", no_labels);
  c_dot->add_flag("--swap-pq", load.swap_pq, "transpose the input");

  auto* c_verify =
      app.add_subcommand("verify", "run the exhaustive theorem suite");
  c_verify->add_option("--max-vertices", max_vertices)->default_val(9);
  c_verify->add_option("--sample-cap", sample_cap);
  c_verify->add_flag("--json", as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_validate) return run_validate(file_a, load, as_json, strict);
    if (*c_close) {
      TsysDocument doc = load_document(file_a, load);
      TransferSystem t = transfer_closure(doc.grid, doc.edges);
      if (as_json)
        print_json(system_to_json(t));
      else
        std::cout << render_tsys(t);
      return kOk;
    }
    if (*c_hull) {
      TransferSystem t = load_system(file_a, load);
      TransferSystem h = use_fixpoint ? hull_fixpoint(t) : hull(t);
      if (as_json)
        print_json(system_to_json(h));
      else
        std::cout << render_tsys(h);
      return kOk;
    }
    if (*c_components) return run_components(file_a, load, as_json);
    if (*c_compat)
      return run_compat(file_a, file_b, load, as_json, strict);
    if (*c_extend) {
      TransferSystem t = load_system(file_a, load);
      std::vector<Edge> seeds;
      for (const std::string& text : edge_args)
        seeds.push_back(parse_edge_arg(text));
      TransferSystem ext = min_compatible_extension(t, seeds);
      if (as_json)
        print_json(system_to_json(ext));
      else
        std::cout << render_tsys(ext);
      return kOk;
    }
    if (*c_lsp)
      return run_lsp(file_a, load, use_oracle, show_witness, max_vertices,
                     as_json, strict);
    if (*c_core) {
      TransferSystem t = load_system(file_a, load);
      TransferSystem core = core_chain(t);
      if (as_json)
        print_json(system_to_json(core));
      else
        std::cout << render_tsys(core);
      return kOk;
    }
    if (*c_enum) {
      if (load.swap_pq) std::swap(opt_r, opt_s);
      return run_enumerate(opt_r, opt_s, count_only, filter, max_vertices,
                           as_json);
    }
    if (*c_pairs) {
      if (load.swap_pq) std::swap(opt_r, opt_s);
      return run_count_pairs(opt_r, opt_s, max_vertices, as_json);
    }
    if (*c_dot) {
      TransferSystem t = load_system(file_a, load);
      DotOptions opts{.color_components = color_components,
                      .labels = !no_labels};
      std::cout << export_dot(t, opts);
      return kOk;
    }
    if (*c_verify) return run_verify_cmd(max_vertices, sample_cap, as_json);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
