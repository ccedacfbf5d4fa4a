#include "liebasis/graphs.hpp"

#include <algorithm>
#include <set>

namespace liebasis {

LabeledDigraph::LabeledDigraph(std::vector<GraphVertex> vertices,
                               std::vector<GraphEdge> edges,
                               std::optional<int> anchor)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      anchor_(anchor) {
  std::set<int> ids;
  for (const GraphVertex& v : vertices_)
    if (!ids.insert(v.id).second)
      throw std::invalid_argument("LabeledDigraph: duplicate vertex id");
  for (const GraphEdge& e : edges_) {
    if (!ids.count(e.from) || !ids.count(e.to))
      throw std::invalid_argument("LabeledDigraph: edge endpoint missing");
    if (e.from == e.to)
      throw std::invalid_argument("LabeledDigraph: self-loop");
  }
  if (anchor_ && !ids.count(*anchor_))
    throw std::invalid_argument("LabeledDigraph: anchor vertex missing");
}

int LabeledDigraph::index_of(int id) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return static_cast<int>(i);
  throw std::invalid_argument("LabeledDigraph: unknown vertex id " +
                              std::to_string(id));
}

char LabeledDigraph::label_of(int id) const {
  return vertices_[static_cast<size_t>(index_of(id))].label;
}

Content LabeledDigraph::label_content() const {
  Content c;
  for (const GraphVertex& v : vertices_) ++c[v.label];
  return c;
}

bool LabeledDigraph::is_tree() const {
  if (edges_.size() + 1 != vertices_.size()) return false;
  std::vector<int> all;
  for (const GraphVertex& v : vertices_) all.push_back(v.id);
  return connected(*this, all);
}

namespace {

// (anchor id of the fragment rooted at t)
int build_star(const PartitionTree::Ptr& t, int& next_id,
               std::vector<GraphVertex>& vertices,
               std::vector<GraphEdge>& edges) {
  if (t->is_leaf()) {
    vertices.push_back({next_id, t->letter()});
    return next_id++;
  }
  std::vector<int> base_anchors;
  for (int i = 0; i < t->exponent(); ++i)
    base_anchors.push_back(build_star(t->base(), next_id, vertices, edges));
  int chi_anchor = build_star(t->anchor(), next_id, vertices, edges);
  for (int a : base_anchors) edges.push_back({a, chi_anchor});
  return chi_anchor;
}

}  // namespace

LabeledDigraph star_graph(const PartitionTree::Ptr& t) {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  int next_id = 0;
  int anchor = build_star(t, next_id, vertices, edges);
  return LabeledDigraph(std::move(vertices), std::move(edges), anchor);
}

LabeledDigraph star_graph(const Word& w) {
  return star_graph(full_partition_or_throw(w));
}

bool connected(const LabeledDigraph& g, const std::vector<int>& vertex_ids) {
  if (vertex_ids.size() <= 1) {
    if (!vertex_ids.empty()) g.index_of(vertex_ids[0]);  // validate
    return true;
  }
  std::set<int> subset(vertex_ids.begin(), vertex_ids.end());
  for (int id : subset) g.index_of(id);
  std::set<int> seen;
  std::vector<int> queue{*subset.begin()};
  seen.insert(*subset.begin());
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (const GraphEdge& e : g.edges()) {
      int other = -1;
      if (e.from == v && subset.count(e.to)) other = e.to;
      if (e.to == v && subset.count(e.from)) other = e.from;
      if (other >= 0 && seen.insert(other).second) queue.push_back(other);
    }
  }
  return seen.size() == subset.size();
}

namespace {

LabeledDigraph induced(const LabeledDigraph& g, const std::set<int>& keep) {
  std::vector<GraphVertex> vertices;
  for (const GraphVertex& v : g.vertices())
    if (keep.count(v.id)) vertices.push_back(v);
  std::vector<GraphEdge> edges;
  for (const GraphEdge& e : g.edges())
    if (keep.count(e.from) && keep.count(e.to)) edges.push_back(e);
  std::optional<int> anchor;
  if (g.anchor() && keep.count(*g.anchor())) anchor = g.anchor();
  return LabeledDigraph(std::move(vertices), std::move(edges), anchor);
}

}  // namespace

std::vector<std::pair<GraphEdge, CutResult>> edge_cuts(
    const LabeledDigraph& g) {
  if (!g.is_tree())
    throw NotATreeError("edge_cuts: graph is not a tree");
  std::vector<std::pair<GraphEdge, CutResult>> out;
  for (size_t cut = 0; cut < g.edges().size(); ++cut) {
    const GraphEdge& e = g.edges()[cut];
    // Component of e.from, avoiding the removed edge.
    std::set<int> side1{e.from};
    std::vector<int> queue{e.from};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (size_t i = 0; i < g.edges().size(); ++i) {
        if (i == cut) continue;
        const GraphEdge& f = g.edges()[i];
        int other = -1;
        if (f.from == v) other = f.to;
        if (f.to == v) other = f.from;
        if (other >= 0 && side1.insert(other).second) queue.push_back(other);
      }
    }
    std::set<int> side2;
    for (const GraphVertex& v : g.vertices())
      if (!side1.count(v.id)) side2.insert(v.id);
    out.push_back({e, {induced(g, side1), induced(g, side2)}});
  }
  return out;
}

std::string to_dot(const LabeledDigraph& g) {
  std::string out = "digraph star {\n";
  for (const GraphVertex& v : g.vertices()) {
    out += "  v" + std::to_string(v.id) + " [label=\"" +
           std::string(1, v.label) + "\"";
    if (g.anchor() && *g.anchor() == v.id) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (const GraphEdge& e : g.edges())
    out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) +
           ";\n";
  return out + "}\n";
}

nlohmann::json graph_to_json(const LabeledDigraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const GraphVertex& v : g.vertices())
    vertices.push_back({{"id", v.id}, {"label", std::string(1, v.label)}});
  nlohmann::json edges = nlohmann::json::array();
  for (const GraphEdge& e : g.edges())
    edges.push_back({{"from", e.from}, {"to", e.to}});
  nlohmann::json j{{"format", 1},
                   {"vertices", vertices},
                   {"edges", edges},
                   {"anchor", nullptr}};
  if (g.anchor()) j["anchor"] = *g.anchor();
  return j;
}

LabeledDigraph graph_from_json(const nlohmann::json& j) {
  std::vector<GraphVertex> vertices;
  for (const auto& v : j.at("vertices")) {
    std::string label = v.at("label").get<std::string>();
    if (label.size() != 1)
      throw std::invalid_argument("graph: vertex label must be one letter");
    vertices.push_back({v.at("id").get<int>(), label[0]});
  }
  std::vector<GraphEdge> edges;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges"))
      edges.push_back({e.at("from").get<int>(), e.at("to").get<int>()});
  std::optional<int> anchor;
  if (j.contains("anchor") && !j.at("anchor").is_null())
    anchor = j.at("anchor").get<int>();
  return LabeledDigraph(std::move(vertices), std::move(edges), anchor);
}

}  // namespace liebasis
