#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liebasis/partition.hpp"
#include "liebasis/words.hpp"
#include "json.hpp"

namespace liebasis {

struct GraphVertex {
  int id;
  char label;
  bool operator==(const GraphVertex&) const = default;
};

struct GraphEdge {
  int from;
  int to;
  bool operator==(const GraphEdge&) const = default;
};

struct NotATreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite directed graph with letter-labeled vertices and an optional
// distinguished anchor vertex.  Star graphs are a constructed subclass:
// always trees, always anchored.
class LabeledDigraph {
 public:
  LabeledDigraph(std::vector<GraphVertex> vertices,
                 std::vector<GraphEdge> edges, std::optional<int> anchor);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::optional<int>& anchor() const { return anchor_; }

  int index_of(int id) const;  // throws on unknown id
  char label_of(int id) const;
  Content label_content() const;

  // Tree in the undirected sense: connected with |E| = |V| - 1.
  bool is_tree() const;

 private:
  std::vector<GraphVertex> vertices_;
  std::vector<GraphEdge> edges_;
  std::optional<int> anchor_;
};

// The star graph of a partition tree.  Vertex ids are assigned by a
// left-to-right traversal of the leaves, so output is reproducible.
LabeledDigraph star_graph(const PartitionTree::Ptr& t);
LabeledDigraph star_graph(const Word& w);  // partitions first

// True iff the full induced subgraph on the given vertex ids is connected,
// ignoring edge directions.  Empty and singleton subsets are connected.
bool connected(const LabeledDigraph& g, const std::vector<int>& vertex_ids);

struct CutResult {
  LabeledDigraph g1;  // the removed edge pointed g1 -> g2
  LabeledDigraph g2;
};

// For each edge of a tree, the two components after deleting it.  Each
// component keeps its vertices, labels, internal edges, and inherits the
// anchor when it contains it.
std::vector<std::pair<GraphEdge, CutResult>> edge_cuts(
    const LabeledDigraph& g);

std::string to_dot(const LabeledDigraph& g);
nlohmann::json graph_to_json(const LabeledDigraph& g);
LabeledDigraph graph_from_json(const nlohmann::json& j);

}  // namespace liebasis
