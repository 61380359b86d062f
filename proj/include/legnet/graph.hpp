#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "legnet/types.hpp"

namespace legnet {

using NodeIndex = std::uint32_t;

enum class Direction { in, out, total };
enum class DegreeScope { typed, projection };

/// Typed directed edge between dense node indices.
struct Edge {
  NodeIndex source;
  NodeIndex target;
  RefType kind;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph over the same node indices: u and v are adjacent
/// iff at least one typed reference joins them in either direction.
class SimpleProjection {
 public:
  SimpleProjection() = default;
  SimpleProjection(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  /// Sorted, duplicate-free neighbor list.
  std::span<const NodeIndex> neighbors(NodeIndex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeIndex v) const { return offsets_[v + 1] - offsets_[v]; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeIndex> adjacency_;
};

/// Temporal multi-relational directed multigraph of legal documents.
///
/// Two phases: documents and references are added while the graph is open;
/// seal() freezes it, builds the adjacency indexes and the simple projection,
/// and from then on the graph is immutable and safe to share across threads.
/// Node indices follow insertion order. After sealing, edges() is sorted by
/// (source, target, kind).
class LegislationGraph {
 public:
  LegislationGraph() = default;

  NodeIndex add_document(LegalDocument doc);
  /// Both endpoints must already exist. Returns false when the typed edge was
  /// already present (the insert is idempotent).
  bool add_reference(const Reference& ref);
  bool add_edge(NodeIndex source, NodeIndex target, RefType kind);
  void seal();

  bool sealed() const noexcept { return sealed_; }
  void require_sealed(std::string_view operation) const;

  std::size_t node_count() const noexcept { return documents_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const LegalDocument& document(NodeIndex v) const { return documents_[v]; }
  std::span<const LegalDocument> documents() const noexcept { return documents_; }
  std::optional<NodeIndex> find(std::string_view id) const;
  NodeIndex index_of(std::string_view id) const;  // throws LookupError

  std::span<const Edge> edges() const noexcept { return edges_; }

  // Sealed-only adjacency; one entry per typed edge.
  std::span<const Edge> out_edges(NodeIndex v) const {
    return {edges_.data() + out_offsets_[v], edges_.data() + out_offsets_[v + 1]};
  }
  std::span<const NodeIndex> out_neighbors(NodeIndex v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const NodeIndex> in_neighbors(NodeIndex v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  std::size_t degree(NodeIndex v, Direction direction) const;

  const SimpleProjection& projection() const;

  /// Induced copy: keeps nodes with keep_node[v] and edges whose endpoints are
  /// both kept and which pass keep_edge. The result is sealed.
  LegislationGraph subgraph(const std::vector<bool>& keep_node,
                            const std::function<bool(const Edge&)>& keep_edge) const;

 private:
  struct IdHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  void require_open(std::string_view operation) const;

  std::vector<LegalDocument> documents_;
  std::unordered_map<std::string, NodeIndex, IdHash, std::equal_to<>> index_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> edge_keys_;
  bool sealed_ = false;

  std::vector<std::size_t> out_offsets_;
  std::vector<NodeIndex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<NodeIndex> in_sources_;
  SimpleProjection projection_;
};

std::size_t degree(const LegislationGraph& g, std::string_view id, Direction direction,
                   DegreeScope scope);

const SimpleProjection& simple_projection(const LegislationGraph& g);

/// Same node ids with identical attributes and identical typed edge sets,
/// independent of insertion order.
bool isomorphic(const LegislationGraph& a, const LegislationGraph& b);

struct EdgeTriple {
  std::string source;
  std::string target;
  RefType kind;
  friend auto operator<=>(const EdgeTriple&, const EdgeTriple&) = default;
};

/// Typed edges as id triples, sorted.
std::vector<EdgeTriple> edge_triples(const LegislationGraph& g);

}  // namespace legnet
