#include "triadic/io.hpp"

#include <cstdio>
#include <json.hpp>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace triadic {

std::string to_dot(const Presentation& p) {
  std::ostringstream os;
  os << "digraph pathset {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    os << "  n" << v << " [label=\"" << p.label(v) << "\"";
    if (v == p.marked()) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const Edge& e : p.edges())
    os << "  n" << e.from << " -> n" << e.to << " [label=\""
       << static_cast<char>('0' + e.digit) << "\"];\n";
  os << "}\n";
  return os.str();
}

Presentation from_dot(const std::string& text) {
  static const std::regex node_re(
      R"(^\s*n(\d+)\s*\[label="([^"]*)"(,\s*shape=doublecircle)?\];\s*$)");
  static const std::regex edge_re(
      R"(^\s*n(\d+)\s*->\s*n(\d+)\s*\[label="([0-2])"\];\s*$)");

  Presentation p;
  std::vector<std::pair<VertexId, VertexId>> pending_edges;
  std::vector<Digit> pending_digits;
  std::istringstream is(text);
  std::string line;
  VertexId marked = kNoVertex;
  std::unordered_map<unsigned long, VertexId> ids;
  while (std::getline(is, line)) {
    std::smatch m;
    if (std::regex_match(line, m, node_re)) {
      VertexId v = p.add_vertex(m[2].str());
      ids[std::stoul(m[1].str())] = v;
      if (m[3].matched) marked = v;
    } else if (std::regex_match(line, m, edge_re)) {
      pending_edges.push_back({static_cast<VertexId>(std::stoul(m[1].str())),
                               static_cast<VertexId>(std::stoul(m[2].str()))});
      pending_digits.push_back(static_cast<Digit>(m[3].str()[0] - '0'));
    }
  }
  for (std::size_t i = 0; i < pending_edges.size(); ++i) {
    auto [from, to] = pending_edges[i];
    if (!ids.contains(from) || !ids.contains(to))
      throw std::invalid_argument("dot edge references unknown node");
    p.add_edge(ids[from], ids[to], pending_digits[i]);
  }
  if (p.vertex_count() > 0) {
    if (marked == kNoVertex) throw std::invalid_argument("dot graph has no marked vertex");
    p.set_marked(marked);
  }
  return p;
}

std::string to_json(const Presentation& p) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (VertexId v = 0; v < p.vertex_count(); ++v)
    j["vertices"].push_back({{"id", v}, {"label", p.label(v)}});
  if (p.is_empty())
    j["marked"] = nullptr;
  else
    j["marked"] = p.marked();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : p.edges())
    j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"digit", e.digit}});
  return j.dump(2) + "\n";
}

Presentation from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Presentation p;
  std::unordered_map<std::uint64_t, VertexId> ids;
  for (const auto& v : j.at("vertices"))
    ids[v.at("id").get<std::uint64_t>()] = p.add_vertex(v.at("label").get<std::string>());
  for (const auto& e : j.at("edges"))
    p.add_edge(ids.at(e.at("from").get<std::uint64_t>()),
               ids.at(e.at("to").get<std::uint64_t>()),
               static_cast<Digit>(e.at("digit").get<int>()));
  if (!p.is_empty()) p.set_marked(ids.at(j.at("marked").get<std::uint64_t>()));
  return p;
}

std::string dimension_report_json(const DimensionReport& report) {
  nlohmann::json j;
  j["beta"] = report.beta;
  j["dimension"] = report.dimension;
  char display[32];
  std::snprintf(display, sizeof display, "%.6f", report.dimension);
  j["dimension_6dp"] = display;
  std::snprintf(display, sizeof display, "%.6f", report.beta);
  j["beta_6dp"] = display;
  j["vertex_count"] = report.vertex_count;
  j["edge_count"] = report.edge_count;
  j["degenerate"] = report.degenerate;
  j["dominant_component"] = report.dominant_component;
  j["per_scc"] = nlohmann::json::array();
  for (const auto& s : report.per_scc)
    j["per_scc"].push_back({{"component", s.component}, {"size", s.size}, {"beta", s.beta}});
  return j.dump(2) + "\n";
}

}  // namespace triadic
