#include "reslat/dot.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace reslat {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string graph(std::string_view name, std::span<const std::string> labels,
                  const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << "  n" << i << " [label=" << quoted(labels[i]) << "];\n";
  }
  for (const auto& [lo, hi] : edges) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string hasse_dot(const ResiduatedLattice& a) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [lo, hi] : a.lattice().covers()) edges.emplace_back(lo, hi);
  const std::vector<std::string> labels(a.names().begin(), a.names().end());
  return graph(a.name(), labels, edges);
}

std::string specialization_dot(const FiniteSpace& x, std::span<const std::string> labels,
                               std::string_view graph_name) {
  const std::size_t n = x.size();
  auto below = [&](std::size_t p, std::size_t q) {
    return p != q && x.closure(PointSet::singleton(p)).contains(q) &&
           !x.closure(PointSet::singleton(q)).contains(p);
  };
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!below(p, q)) continue;
      bool cover = true;
      for (std::size_t r = 0; r < n && cover; ++r) {
        if (below(p, r) && below(r, q)) cover = false;
      }
      if (cover) edges.emplace_back(p, q);
    }
  }
  return graph(graph_name, labels, edges);
}

std::string spectrum_dot(const FilterLattice& fl) {
  const SpectrumSpace h = spec_h(fl);
  std::vector<std::string> labels;
  for (ElementSet p : h.points) labels.push_back(format_set(fl.algebra(), p));
  return specialization_dot(h.space, labels, "Spec " + fl.algebra().name());
}

}  // namespace reslat
