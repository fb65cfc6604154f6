#pragma once

#include <cstdlib>
#include <sstream>
#include <string>

#include "netcap/error.hpp"

namespace netcap {

// Enumeration limits. Every exhaustive routine checks one of these before
// starting, so a too-large instance fails fast instead of running forever.
struct Caps {
  std::size_t ground = 20;         // matroid ground set for subset enumeration
  std::size_t tree_edges = 24;     // relevant edges for Steiner tree enumeration
  std::size_t partial_edges = 16;  // edges for partial-solution enumeration
  std::size_t dp_states = 2000000; // live states per DP level
  std::size_t vertex_vars = 14;    // parent polytope variables for vertex enumeration
  std::size_t messages = 16;

  // NETCAP_CAPS="ground=24,tree_edges=30"
  static Caps from_env() {
    Caps c;
    const char* env = std::getenv("NETCAP_CAPS");
    if (!env) return c;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error("NETCAP_CAPS: expected key=value, got '" + item + "'");
      std::string key = item.substr(0, eq);
      std::size_t v = std::stoul(item.substr(eq + 1));
      if (key == "ground") c.ground = v;
      else if (key == "tree_edges") c.tree_edges = v;
      else if (key == "partial_edges") c.partial_edges = v;
      else if (key == "dp_states") c.dp_states = v;
      else if (key == "vertex_vars") c.vertex_vars = v;
      else if (key == "messages") c.messages = v;
      else throw Error("NETCAP_CAPS: unknown cap '" + key + "'");
    }
    return c;
  }
};

inline void check_cap(const char* name, std::size_t value, std::size_t cap) {
  if (value > cap)
    throw CapExceeded(name, std::string("cap '") + name + "' exceeded: " + std::to_string(value) +
                                " > " + std::to_string(cap) + " (raise via NETCAP_CAPS)");
}

}  // namespace netcap
