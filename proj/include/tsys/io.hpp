#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsys/transfer.hpp"

namespace tsys {

// Parsed .tsys document. Format:
//   # comment
//   grid R S
//   i1 j1 -> i2 j2
// Reflexive edge lines are skipped with a warning.
struct TsysDocument {
  Grid grid{0, 0};
  std::vector<Edge> edges;  // sorted, unique
  std::optional<std::string> name;
  std::vector<std::string> warnings;
};

TsysDocument parse_tsys(std::string_view text);
TsysDocument load_tsys_file(const std::string& path);

// Canonical rendering; parse(render(x)) == x for in-bounds edge sets.
std::string render_tsys(const Grid& g, std::span<const Edge> edges);
std::string render_tsys(const TransferSystem& t);

// {"r": R, "s": S, "edges": [[[i1,j1],[i2,j2]], ...]} in canonical order.
nlohmann::json system_to_json(const TransferSystem& t);
nlohmann::json document_to_json(const Grid& g, std::span<const Edge> edges);
TsysDocument document_from_json(const nlohmann::json& j);

struct DotOptions {
  bool color_components = false;
  bool labels = true;
};

// Graphviz output with grid positions; reflexive edges omitted.
std::string export_dot(const TransferSystem& t, const DotOptions& opts = {});

}  // namespace tsys
