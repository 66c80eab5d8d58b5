#pragma once

#include <functional>
#include <string>
#include <vector>

#include "transform.hpp"

namespace xmodcat {

/// Graphviz text for a groupoid with one cluster per connected component.
/// Identity arrows are omitted; parallel arrows are kept. `object_label` and
/// `arrow_label` default to the indices.
inline std::string groupoid_to_dot(const FiniteGroupoid& g, const std::string& name,
                                   const std::function<std::string(Index)>& object_label = {},
                                   const std::function<std::string(Index)>& arrow_label = {}) {
  const auto& C = *g.cat;
  const Components comp = connected_components(C);
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string s = "digraph " + quote(name) + " {\n  node [shape=circle];\n";
  for (Index k = 0; k < comp.count; ++k) {
    s += "  subgraph cluster_" + std::to_string(k) + " {\n    label=" + quote("component " + std::to_string(k)) +
         ";\n";
    for (Index x = 0; x < C.objects(); ++x)
      if (comp.label[x] == k)
        s += "    n" + std::to_string(x) + " [label=" + quote(object_label ? object_label(x) : std::to_string(x)) +
             "];\n";
    s += "  }\n";
  }
  for (Index f = 0; f < C.morphisms(); ++f) {
    if (C.is_identity(f)) continue;
    s += "  n" + std::to_string(C.src(f)) + " -> n" + std::to_string(C.tgt(f)) +
         " [label=" + quote(arrow_label ? arrow_label(f) : std::to_string(f)) + "];\n";
  }
  s += "}\n";
  return s;
}

}  // namespace xmodcat
