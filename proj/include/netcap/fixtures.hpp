#pragma once

#include <filesystem>
#include <string>

#include "netcap/matroidal_io.hpp"

#ifndef NETCAP_DATA_DIR
#define NETCAP_DATA_DIR "data"
#endif

namespace netcap {

// A bare name like "butterfly" resolves to data/<kind>/butterfly.json;
// anything that exists as a path is used as is.
inline std::string resolve_data(const std::string& kind, const std::string& name) {
  if (std::filesystem::exists(name)) return name;
  auto p = std::filesystem::path(NETCAP_DATA_DIR) / kind / (name + ".json");
  if (std::filesystem::exists(p)) return p.string();
  throw Error("no such file or " + kind.substr(0, kind.size() - 1) + " fixture: '" + name + "'");
}

inline Network fixture_network(const std::string& name) { return load_network(resolve_data("networks", name)); }
inline RepresentableMatroid fixture_matroid(const std::string& name) {
  return parse_matroid(read_file(resolve_data("matroids", name)));
}
inline ConstructionScript fixture_script(const std::string& name, const RepresentableMatroid& m) {
  return parse_script(read_file(resolve_data("scripts", name)), m);
}

}  // namespace netcap
