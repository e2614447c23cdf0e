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

#include "ontomesh/graph.h"

#include <algorithm>
#include <limits>
#include <tuple>
#include <unordered_map>

#include "json.hpp"
#include "ontomesh/error.h"
#include "ontomesh/serialize.h"

namespace ontomesh {
namespace {

[[noreturn]] void Invalid(const std::string& what) {
  throw Error(ErrorCode::kInvariant, "invalid graph: " + what);
}

bool EdgeEndpointsMatch(EdgeKind kind, NodeKind a, NodeKind b) {
  if (a > b) std::swap(a, b);
  switch (kind) {
    case EdgeKind::kAttrAttr:
      return a == NodeKind::kAttribute && b == NodeKind::kAttribute;
    case EdgeKind::kAttrModel:
      return a == NodeKind::kDataModel && b == NodeKind::kAttribute;
    case EdgeKind::kAttrDomain:
      return a == NodeKind::kDomain && b == NodeKind::kAttribute;
    case EdgeKind::kContainment:
      return (a == NodeKind::kDomain && b == NodeKind::kDataModel) ||
             (a == NodeKind::kDataModel && b == NodeKind::kType);
  }
  return false;
}

std::uint64_t PairKey(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

void AppendEdges(const std::unordered_map<std::uint64_t, std::uint64_t>& weights,
                 EdgeKind kind, std::vector<GraphEdge>& out) {
  for (const auto& [key, w] : weights) {
    out.push_back(GraphEdge{static_cast<NodeId>(key >> 32),
                            static_cast<NodeId>(key & 0xffffffffu), kind, w});
  }
}

}  // namespace

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kDomain: return "Domain";
    case NodeKind::kDataModel: return "DataModel";
    case NodeKind::kType: return "Type";
    case NodeKind::kAttribute: return "Attribute";
  }
  return "?";
}

std::string_view EdgeKindName(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kAttrAttr: return "attr_attr";
    case EdgeKind::kAttrModel: return "attr_model";
    case EdgeKind::kAttrDomain: return "attr_domain";
    case EdgeKind::kContainment: return "containment";
  }
  return "?";
}

std::optional<NodeKind> ParseNodeKind(std::string_view name) {
  for (NodeKind k : kAllNodeKinds) {
    if (NodeKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<EdgeKind> ParseEdgeKind(std::string_view name) {
  for (EdgeKind k : kAllEdgeKinds) {
    if (EdgeKindName(k) == name) return k;
  }
  return std::nullopt;
}

OntologyGraph::OntologyGraph(std::vector<GraphNode> nodes, std::vector<GraphEdge> edges,
                             GraphProvenance provenance)
    : nodes_(std::move(nodes)), edges_(std::move(edges)),
      provenance_(std::move(provenance)) {
  const std::size_t n = nodes_.size();
  if (n >= std::numeric_limits<NodeId>::max()) Invalid("too many nodes");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = nodes_[i];
    if (node.id != i) Invalid("node ids must be dense ordinals, found " +
                              std::to_string(node.id) + " at " + std::to_string(i));
    if (node.label.empty()) Invalid("node " + std::to_string(i) + " has an empty label");
    if (!index_.emplace(std::make_pair(node.kind, node.label), node.id).second) {
      Invalid("duplicate " + std::string(NodeKindName(node.kind)) + " node '" +
              node.label + "'");
    }
  }

  std::sort(edges_.begin(), edges_.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.u, a.v, a.kind) < std::tie(b.u, b.v, b.kind);
  });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const std::string where = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
    if (e.u == e.v) Invalid(where + " is a self-loop");
    if (e.u > e.v) Invalid(where + " is not in canonical u < v form");
    if (e.v >= n) Invalid(where + " references a missing node");
    if (e.weight == 0) Invalid(where + " has zero weight");
    if (!EdgeEndpointsMatch(e.kind, nodes_[e.u].kind, nodes_[e.v].kind)) {
      Invalid(where + " kind " + std::string(EdgeKindName(e.kind)) +
              " does not match its endpoint kinds");
    }
    if (i > 0 && edges_[i - 1].u == e.u && edges_[i - 1].v == e.v) {
      Invalid(where + " is duplicated");
    }
  }

  std::vector<std::uint32_t> degree(n, 0);
  for (const auto& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    adjacency_[cursor[e.u]++] = Neighbor{e.v, i};
    adjacency_[cursor[e.v]++] = Neighbor{e.u, i};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
}

std::optional<NodeId> OntologyGraph::FindNode(NodeKind kind, std::string_view label) const {
  auto it = index_.find(std::make_pair(kind, std::string(label)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t OntologyGraph::CountNodes(NodeKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [kind](const GraphNode& n) { return n.kind == kind; }));
}

OntologyGraph BuildGraph(const CorpusSnapshot& snapshot, const BuildOptions& options) {
  ValidateSnapshot(snapshot);

  std::vector<GraphNode> nodes;
  std::unordered_map<std::string, NodeId> domain_ids, model_ids, type_ids, attr_ids;
  auto add_node = [&nodes](NodeKind kind, const std::string& label, Metadata meta) {
    const auto id = static_cast<NodeId>(nodes.size());
    nodes.push_back(GraphNode{id, kind, label, std::move(meta)});
    return id;
  };

  // Snapshot collections are already in canonical (sorted) order.
  for (const auto& d : snapshot.domains) {
    domain_ids[d.domain_id] =
        add_node(NodeKind::kDomain, d.domain_id, {{"display_name", d.display_name}});
  }
  for (const auto& m : snapshot.models) {
    const nlohmann::json domains(m.domain_ids);
    model_ids[m.model_id] = add_node(NodeKind::kDataModel, m.model_id,
                                     {{"display_name", m.display_name},
                                      {"domains", domains.dump()}});
  }
  for (const auto& t : snapshot.types) {
    type_ids[t.type_id] = add_node(NodeKind::kType, t.type_id,
                                   {{"display_name", t.display_name}, {"model", t.model_id}});
  }
  std::map<std::string, Metadata> attr_meta;
  for (const auto& o : snapshot.occurrences) {
    auto& meta = attr_meta[o.attribute_name];
    for (const auto& [k, v] : o.metadata) meta.try_emplace(k, v);
  }
  for (auto& [name, meta] : attr_meta) {
    attr_ids[name] = add_node(NodeKind::kAttribute, name, std::move(meta));
  }

  std::unordered_map<std::uint64_t, std::uint64_t> attr_attr, attr_model, attr_domain;
  for (const auto& t : snapshot.types) {
    std::vector<NodeId> ids;
    ids.reserve(t.attribute_names.size());
    for (const auto& a : t.attribute_names) {
      auto it = attr_ids.find(a);
      // Attributes without any occurrence have no node (cannot happen for
      // ingested corpora; guarded for hand-built snapshots).
      if (it == attr_ids.end()) {
        throw Error(ErrorCode::kInvariant, "type " + t.type_id + " declares attribute '" +
                                               a + "' without occurrences");
      }
      ids.push_back(it->second);
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) ++attr_attr[PairKey(ids[i], ids[j])];
    }
  }
  for (const auto& o : snapshot.occurrences) {
    const NodeId a = attr_ids.at(o.attribute_name);
    ++attr_model[PairKey(a, model_ids.at(o.model_id))];
    ++attr_domain[PairKey(a, domain_ids.at(o.domain_id))];
  }

  std::vector<GraphEdge> edges;
  edges.reserve(attr_attr.size() + attr_model.size() + attr_domain.size());
  AppendEdges(attr_attr, EdgeKind::kAttrAttr, edges);
  AppendEdges(attr_model, EdgeKind::kAttrModel, edges);
  AppendEdges(attr_domain, EdgeKind::kAttrDomain, edges);
  if (options.containment_edges) {
    for (const auto& t : snapshot.types) {
      const NodeId a = type_ids.at(t.type_id), b = model_ids.at(t.model_id);
      edges.push_back(GraphEdge{std::min(a, b), std::max(a, b), EdgeKind::kContainment, 1});
    }
    for (const auto& m : snapshot.models) {
      for (const auto& d : m.domain_ids) {
        const NodeId a = model_ids.at(m.model_id), b = domain_ids.at(d);
        edges.push_back(
            GraphEdge{std::min(a, b), std::max(a, b), EdgeKind::kContainment, 1});
      }
    }
  }

  OntologyGraph graph(std::move(nodes), std::move(edges),
                      GraphProvenance{snapshot.content_hash, options.containment_edges, "", ""});
  if (graph.node_count() != snapshot.counts.total()) {
    throw Error(ErrorCode::kInternal, "node census does not match snapshot counts");
  }
  return graph;
}

EdgeCensus ComputeEdgeCensus(const OntologyGraph& graph) {
  EdgeCensus census;
  census.by_kind[EdgeKind::kAttrAttr];
  census.by_kind[EdgeKind::kAttrModel];
  census.by_kind[EdgeKind::kAttrDomain];
  if (graph.provenance().containment_edges) census.by_kind[EdgeKind::kContainment];
  for (const auto& e : graph.edges()) {
    auto& k = census.by_kind[e.kind];
    ++k.count;
    k.weight += e.weight;
    ++census.total_edges;
    census.total_weight += e.weight;
  }
  return census;
}

OntologyGraph DomainSubgraph(const OntologyGraph& graph, std::string_view domain_id) {
  const auto domain = graph.FindNode(NodeKind::kDomain, domain_id);
  if (!domain) {
    throw Error(ErrorCode::kNotFound, "unknown domain '" + std::string(domain_id) + "'");
  }

  std::vector<bool> keep(graph.node_count(), false);
  keep[*domain] = true;
  std::set<std::string> models;
  for (const auto& node : graph.nodes()) {
    if (node.kind != NodeKind::kDataModel) continue;
    auto it = node.metadata.find("domains");
    if (it == node.metadata.end()) continue;
    const auto list = nlohmann::json::parse(it->second, nullptr, false);
    if (!list.is_array()) continue;
    for (const auto& d : list) {
      if (d.is_string() && d.get<std::string>() == domain_id) {
        keep[node.id] = true;
        models.insert(node.label);
      }
    }
  }
  for (const auto& node : graph.nodes()) {
    if (node.kind != NodeKind::kType) continue;
    auto it = node.metadata.find("model");
    if (it != node.metadata.end() && models.contains(it->second)) keep[node.id] = true;
  }
  for (const auto& nb : graph.neighbors(*domain)) {
    if (graph.edges()[nb.edge].kind == EdgeKind::kAttrDomain) keep[nb.node] = true;
  }

  std::vector<NodeId> remap(graph.node_count(), 0);
  std::vector<GraphNode> nodes;
  for (const auto& node : graph.nodes()) {
    if (!keep[node.id]) continue;
    remap[node.id] = static_cast<NodeId>(nodes.size());
    GraphNode copy = node;
    copy.id = remap[node.id];
    nodes.push_back(std::move(copy));
  }
  std::vector<GraphEdge> edges;
  for (const auto& e : graph.edges()) {
    if (keep[e.u] && keep[e.v]) edges.push_back(GraphEdge{remap[e.u], remap[e.v], e.kind, e.weight});
  }

  GraphProvenance prov = graph.provenance();
  prov.parent_graph_hash = GraphHash(graph);
  prov.subgraph_domain = std::string(domain_id);
  return OntologyGraph(std::move(nodes), std::move(edges), std::move(prov));
}

}  // namespace ontomesh
