#include "tsys/io.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace tsys {

namespace {

std::string trim(std::string_view sv) {
  auto begin = sv.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return "";
  auto end = sv.find_last_not_of(" \t\r");
  return std::string(sv.substr(begin, end - begin + 1));
}

[[noreturn]] void parse_fail(int line_no, const std::string& message) {
  throw InputError("line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

TsysDocument parse_tsys(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;

  std::optional<Grid> grid;
  std::vector<Edge> edges;
  std::vector<std::string> warnings;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    std::istringstream fields(line);
    if (!grid) {
      std::string keyword;
      int r = -1, s = -1;
      std::string extra;
      if (!(fields >> keyword >> r >> s) || keyword != "grid" ||
          (fields >> extra))
        parse_fail(line_no, "expected header 'grid R S'");
      if (r < 0 || s < 0) parse_fail(line_no, "grid exponents must be >= 0");
      grid.emplace(r, s);
      continue;
    }

    Edge e;
    std::string arrow, extra;
    if (!(fields >> e.src.i >> e.src.j >> arrow >> e.dst.i >> e.dst.j) ||
        arrow != "->" || (fields >> extra))
      parse_fail(line_no, "expected edge 'i1 j1 -> i2 j2'");
    if (!grid->contains(e.src) || !grid->contains(e.dst))
      parse_fail(line_no, "edge " + to_string(e) + " outside grid(" +
                              std::to_string(grid->r()) + "," +
                              std::to_string(grid->s()) + ")");
    if (e.src == e.dst) {
      warnings.push_back("line " + std::to_string(line_no) +
                         ": reflexive edge " + to_string(e) + " ignored");
      continue;
    }
    edges.push_back(e);
  }
  if (!grid) throw InputError("missing 'grid R S' header");

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {.grid = *grid,
          .edges = std::move(edges),
          .name = std::nullopt,
          .warnings = std::move(warnings)};
}

TsysDocument load_tsys_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    TsysDocument doc = parse_tsys(buffer.str());
    doc.name = path;
    return doc;
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string render_tsys(const Grid& g, std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::ostringstream out;
  out << "grid " << g.r() << " " << g.s() << "\n";
  for (const Edge& e : sorted) {
    if (e.src == e.dst) continue;
    out << e.src.i << " " << e.src.j << " -> " << e.dst.i << " " << e.dst.j
        << "\n";
  }
  return out.str();
}

std::string render_tsys(const TransferSystem& t) {
  auto edges = t.strict_edges();
  return render_tsys(t.grid(), edges);
}

nlohmann::json document_to_json(const Grid& g, std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  nlohmann::json j;
  j["r"] = g.r();
  j["s"] = g.s();
  auto arr = nlohmann::json::array();
  for (const Edge& e : sorted)
    arr.push_back({{e.src.i, e.src.j}, {e.dst.i, e.dst.j}});
  j["edges"] = std::move(arr);
  return j;
}

nlohmann::json system_to_json(const TransferSystem& t) {
  auto edges = t.strict_edges();
  return document_to_json(t.grid(), edges);
}

TsysDocument document_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("s") ||
      !j.contains("edges"))
    throw InputError("json document must have keys r, s, edges");
  Grid g(j.at("r").get<int>(), j.at("s").get<int>());
  std::vector<Edge> edges;
  for (const auto& pair : j.at("edges")) {
    if (!pair.is_array() || pair.size() != 2 || pair[0].size() != 2 ||
        pair[1].size() != 2)
      throw InputError("json edge must be [[i1,j1],[i2,j2]]");
    Edge e{{pair[0][0].get<int>(), pair[0][1].get<int>()},
           {pair[1][0].get<int>(), pair[1][1].get<int>()}};
    g.require(e.src);
    g.require(e.dst);
    if (e.src != e.dst) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {.grid = g, .edges = std::move(edges), .name = std::nullopt,
          .warnings = {}};
}

std::string export_dot(const TransferSystem& t, const DotOptions& opts) {
  static constexpr const char* kPalette[] = {
      "lightblue", "lightsalmon", "palegreen",  "plum",
      "khaki",     "lightpink",   "powderblue", "wheat"};

  const Grid& g = t.grid();
  std::ostringstream out;
  out << "digraph transfer_system {\n";
  out << "  node [shape=circle, fontsize=10];\n";

  ComponentPartition parts;
  if (opts.color_components) parts = components(t);

  for (int v = 0; v < g.vertex_count(); ++v) {
    Vertex vert = g.vertex_at(v);
    out << "  v" << vert.i << "_" << vert.j;
    out << " [pos=\"" << vert.i << "," << vert.j << "!\"";
    if (opts.labels)
      out << ", label=\"(" << vert.i << "," << vert.j << ")\"";
    if (opts.color_components) {
      const char* color = kPalette[parts.component_id[v] % 8];
      out << ", style=filled, fillcolor=" << color;
    }
    out << "];\n";
  }
  for (const Edge& e : t.strict_edges())
    out << "  v" << e.src.i << "_" << e.src.j << " -> v" << e.dst.i << "_"
        << e.dst.j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tsys
