#pragma once

#include <string>
#include <vector>

#include "tsys/io.hpp"
#include "tsys/transfer.hpp"

namespace tsys::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(TSYS_FIXTURE_DIR) + "/" + name;
}

inline TsysDocument fixture_document(const std::string& name) {
  return load_tsys_file(fixture_path(name));
}

inline TransferSystem fixture_system(const std::string& name) {
  TsysDocument doc = fixture_document(name);
  return require_transfer_system(doc.grid, doc.edges);
}

inline TransferSystem make_system(const Grid& g, std::vector<Edge> edges) {
  return require_transfer_system(g, edges);
}

}  // namespace tsys::test
