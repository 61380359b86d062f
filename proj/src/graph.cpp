#include "legnet/graph.hpp"

#include <algorithm>
#include <numeric>

#include "legnet/error.hpp"

namespace legnet {
namespace {

constexpr std::size_t kMaxNodes = std::size_t{1} << 29;

std::uint64_t edge_key(NodeIndex s, NodeIndex t, RefType k) {
  return (std::uint64_t{s} << 35) | (std::uint64_t{t} << 3) | static_cast<std::uint64_t>(k);
}

}  // namespace

SimpleProjection::SimpleProjection(std::size_t node_count, std::span<const Edge> edges) {
  std::vector<std::size_t> counts(node_count + 1, 0);
  for (const Edge& e : edges) {
    ++counts[e.source];
    ++counts[e.target];
  }
  offsets_.assign(node_count + 1, 0);
  std::partial_sum(counts.begin(), counts.end() - 1, offsets_.begin() + 1);
  std::vector<NodeIndex> raw(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    raw[cursor[e.source]++] = e.target;
    raw[cursor[e.target]++] = e.source;
  }
  // Sort and dedupe each neighbor list, then compact.
  adjacency_.reserve(raw.size());
  std::vector<std::size_t> compact(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    adjacency_.insert(adjacency_.end(), first, last);
    compact[v + 1] = adjacency_.size();
  }
  offsets_ = std::move(compact);
  adjacency_.shrink_to_fit();
}

void LegislationGraph::require_open(std::string_view operation) const {
  if (sealed_) throw PhaseError(std::string(operation) + " rejected: graph is sealed");
}

void LegislationGraph::require_sealed(std::string_view operation) const {
  if (!sealed_) throw PhaseError(std::string(operation) + " requires a sealed graph");
}

NodeIndex LegislationGraph::add_document(LegalDocument doc) {
  require_open("add_document");
  if (doc.effect > doc.expiry) {
    throw ValidationError("graph-core", "document '" + doc.id.str() + "' has date_of_effect " +
                                            doc.effect.to_string() + " after date_of_expiry " +
                                            doc.expiry.to_string());
  }
  if (documents_.size() >= kMaxNodes) throw ValidationError("graph-core", "node limit exceeded");
  const auto index = static_cast<NodeIndex>(documents_.size());
  auto [it, inserted] = index_.try_emplace(doc.id.str(), index);
  if (!inserted) throw DuplicateIdError(doc.id.str());
  documents_.push_back(std::move(doc));
  return index;
}

bool LegislationGraph::add_reference(const Reference& ref) {
  require_open("add_reference");
  if (ref.source == ref.target) {
    throw ValidationError("graph-core", "self-reference on '" + ref.source.str() + "' rejected");
  }
  return add_edge(index_of(ref.source.str()), index_of(ref.target.str()), ref.kind);
}

bool LegislationGraph::add_edge(NodeIndex source, NodeIndex target, RefType kind) {
  require_open("add_edge");
  if (source == target) {
    throw ValidationError("graph-core",
                          "self-reference on '" + documents_.at(source).id.str() + "' rejected");
  }
  if (source >= documents_.size() || target >= documents_.size()) {
    throw ValidationError("graph-core", "edge endpoint out of range");
  }
  if (!edge_keys_.insert(edge_key(source, target, kind)).second) return false;
  edges_.push_back({source, target, kind});
  return true;
}

void LegislationGraph::seal() {
  if (sealed_) return;
  sealed_ = true;
  edge_keys_ = {};
  std::sort(edges_.begin(), edges_.end());

  const std::size_t n = documents_.size();
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offsets_[e.source + 1];
    ++in_offsets_[e.target + 1];
  }
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
  std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());

  out_targets_.resize(edges_.size());
  in_sources_.resize(edges_.size());
  std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out_targets_[i] = edges_[i].target;
    in_sources_[cursor[edges_[i].target]++] = edges_[i].source;
  }
  projection_ = SimpleProjection(n, edges_);
}

std::optional<NodeIndex> LegislationGraph::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex LegislationGraph::index_of(std::string_view id) const {
  auto found = find(id);
  if (!found) throw LookupError(std::string(id));
  return *found;
}

std::size_t LegislationGraph::degree(NodeIndex v, Direction direction) const {
  require_sealed("degree");
  const std::size_t out = out_offsets_[v + 1] - out_offsets_[v];
  const std::size_t in = in_offsets_[v + 1] - in_offsets_[v];
  switch (direction) {
    case Direction::in:
      return in;
    case Direction::out:
      return out;
    case Direction::total:
      return in + out;
  }
  return 0;
}

const SimpleProjection& LegislationGraph::projection() const {
  require_sealed("projection");
  return projection_;
}

LegislationGraph LegislationGraph::subgraph(
    const std::vector<bool>& keep_node, const std::function<bool(const Edge&)>& keep_edge) const {
  require_sealed("subgraph");
  LegislationGraph out;
  constexpr NodeIndex kDropped = ~NodeIndex{0};
  std::vector<NodeIndex> remap(documents_.size(), kDropped);
  for (NodeIndex v = 0; v < documents_.size(); ++v) {
    if (keep_node[v]) remap[v] = out.add_document(documents_[v]);
  }
  // edges_ is sorted and remap is monotone, so the copy stays sorted and
  // duplicate-free; the key set is not needed.
  for (const Edge& e : edges_) {
    if (remap[e.source] == kDropped || remap[e.target] == kDropped || !keep_edge(e)) continue;
    out.edges_.push_back({remap[e.source], remap[e.target], e.kind});
  }
  out.seal();
  return out;
}

std::size_t degree(const LegislationGraph& g, std::string_view id, Direction direction,
                   DegreeScope scope) {
  const NodeIndex v = g.index_of(id);
  if (scope == DegreeScope::typed) return g.degree(v, direction);
  g.require_sealed("degree");
  return g.projection().degree(v);
}

const SimpleProjection& simple_projection(const LegislationGraph& g) { return g.projection(); }

std::vector<EdgeTriple> edge_triples(const LegislationGraph& g) {
  std::vector<EdgeTriple> triples;
  triples.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    triples.push_back({g.document(e.source).id.str(), g.document(e.target).id.str(), e.kind});
  }
  std::sort(triples.begin(), triples.end());
  return triples;
}

bool isomorphic(const LegislationGraph& a, const LegislationGraph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
  for (const LegalDocument& doc : a.documents()) {
    auto other = b.find(doc.id.str());
    if (!other) return false;
    const LegalDocument& d = b.document(*other);
    if (d.sector != doc.sector || d.effect != doc.effect || d.expiry != doc.expiry) return false;
  }
  return edge_triples(a) == edge_triples(b);
}

}  // namespace legnet
