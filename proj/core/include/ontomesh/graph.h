// Copyright 2026 The OntoMesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOMESH_GRAPH_H_
#define ONTOMESH_GRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontomesh/corpus.h"

namespace ontomesh {

enum class NodeKind : std::uint8_t { kDomain, kDataModel, kType, kAttribute };
enum class EdgeKind : std::uint8_t { kAttrAttr, kAttrModel, kAttrDomain, kContainment };

inline constexpr NodeKind kAllNodeKinds[] = {NodeKind::kDomain, NodeKind::kDataModel,
                                             NodeKind::kType, NodeKind::kAttribute};
inline constexpr EdgeKind kAllEdgeKinds[] = {EdgeKind::kAttrAttr, EdgeKind::kAttrModel,
                                             EdgeKind::kAttrDomain,
                                             EdgeKind::kContainment};

// "Domain", "DataModel", "Type", "Attribute".
std::string_view NodeKindName(NodeKind kind);
// "attr_attr", "attr_model", "attr_domain", "containment".
std::string_view EdgeKindName(EdgeKind kind);
std::optional<NodeKind> ParseNodeKind(std::string_view name);
std::optional<EdgeKind> ParseEdgeKind(std::string_view name);

using NodeId = std::uint32_t;

struct GraphNode {
  NodeId id = 0;
  NodeKind kind = NodeKind::kAttribute;
  // domain_id, model_id, type_id or attribute name depending on kind.
  std::string label;
  Metadata metadata;

  bool operator==(const GraphNode&) const = default;
};

// Undirected edge in canonical form (u < v).
struct GraphEdge {
  NodeId u = 0;
  NodeId v = 0;
  EdgeKind kind = EdgeKind::kAttrAttr;
  std::uint64_t weight = 1;

  bool operator==(const GraphEdge&) const = default;
};

struct GraphProvenance {
  std::string snapshot_hash;
  bool containment_edges = false;
  // Set on subgraphs only.
  std::string parent_graph_hash;
  std::string subgraph_domain;

  bool operator==(const GraphProvenance&) const = default;
};

struct Neighbor {
  NodeId node;
  std::uint32_t edge;  // index into edges()
};

// Immutable weighted simple graph over the four node kinds. Construction
// validates every structural invariant and throws Error(kInvariant) on the
// first violation; a constructed graph is always well-formed and safe to
// share across threads.
class OntologyGraph {
 public:
  OntologyGraph() = default;
  // Edges may arrive in any order; they are stored sorted by (u, v, kind).
  OntologyGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges,
                GraphProvenance provenance);

  const std::vector<GraphNode>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphProvenance& provenance() const { return provenance_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Neighbors sorted by node id.
  std::span<const Neighbor> neighbors(NodeId node) const {
    return {adjacency_.data() + offsets_[node], adjacency_.data() + offsets_[node + 1]};
  }

  std::optional<NodeId> FindNode(NodeKind kind, std::string_view label) const;
  std::size_t CountNodes(NodeKind kind) const;

  // Node and edge tables equal; provenance ignored.
  bool StructurallyEqual(const OntologyGraph& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_;
  }
  bool operator==(const OntologyGraph& other) const {
    return StructurallyEqual(other) && provenance_ == other.provenance_;
  }

 private:
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  GraphProvenance provenance_;
  std::vector<std::uint32_t> offsets_ = {0};
  std::vector<Neighbor> adjacency_;
  std::map<std::pair<NodeKind, std::string>, NodeId, std::less<>> index_;
};

struct BuildOptions {
  // Adds Type-DataModel and DataModel-Domain edges.
  bool containment_edges = false;
};

// Node ordinals follow kind order (Domain, DataModel, Type, Attribute) and
// then label order, so identical snapshots give identical graphs.
//
//   attr_attr    one per attribute pair declared together by a type;
//                weight = number of such types
//   attr_model   weight = occurrences of the attribute in the model
//   attr_domain  weight = occurrences of the attribute in the domain
//   containment  weight 1
//
// Model nodes carry metadata "domains" (JSON array of domain ids); type
// nodes carry "model".
OntologyGraph BuildGraph(const CorpusSnapshot& snapshot, const BuildOptions& options = {});

struct KindCensus {
  std::uint64_t count = 0;
  std::uint64_t weight = 0;

  bool operator==(const KindCensus&) const = default;
};

struct EdgeCensus {
  // Always lists the three attribute kinds; containment only when the
  // graph was built with containment edges.
  std::map<EdgeKind, KindCensus> by_kind;
  std::uint64_t total_edges = 0;
  std::uint64_t total_weight = 0;

  bool operator==(const EdgeCensus&) const = default;
};

EdgeCensus ComputeEdgeCensus(const OntologyGraph& graph);

// Induced subgraph on one domain node, the models listing it, their types,
// and the attributes with an occurrence in it. Throws kNotFound for an
// unknown domain.
OntologyGraph DomainSubgraph(const OntologyGraph& graph, std::string_view domain_id);

}  // namespace ontomesh

#endif  // ONTOMESH_GRAPH_H_
