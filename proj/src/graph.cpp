#include "afcore/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "afcore/error.hpp"
#include "afcore/kernels.hpp"

namespace afcore {

Multiplicity& Multiplicity::operator+=(const Multiplicity& other) {
  if (infinite_ || other.infinite_) {
    *this = infinite();
  } else {
    count_ += other.count_;
  }
  return *this;
}

std::string Multiplicity::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(count_);
}

namespace {

std::unordered_map<VertexId, VertexIndex> build_index(const std::vector<VertexId>& vertices) {
  std::unordered_map<VertexId, VertexIndex> index;
  for (VertexIndex i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], i).second)
      fail(ErrorKind::InvalidInput, "duplicate vertex id '" + vertices[i] + "'");
  }
  return index;
}

// Kahn's algorithm; returns nullopt if a cycle remains. Ties are broken by
// declared order so the result is deterministic.
std::optional<std::vector<VertexIndex>> topological_sort(
    std::size_t n, const std::vector<std::pair<VertexIndex, VertexIndex>>& arcs) {
  std::vector<std::vector<VertexIndex>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [v, w] : arcs) {
    out[v].push_back(w);
    ++indegree[w];
  }
  std::set<VertexIndex> ready;
  for (VertexIndex v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.insert(v);
  std::vector<VertexIndex> order;
  order.reserve(n);
  while (!ready.empty()) {
    const VertexIndex v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (VertexIndex w : out[v])
      if (--indegree[w] == 0) ready.insert(w);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

}  // namespace

// --- MultiGraph -----------------------------------------------------------

MultiGraph::MultiGraph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)), index_(build_index(vertices_)) {
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    edges_.push_back(Edge{index_of(e.src), index_of(e.dst), e.mult});
  }
  normalize();
}

MultiGraph::MultiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), index_(build_index(vertices_)) {
  for (const auto& e : edges_)
    if (e.src >= vertices_.size() || e.dst >= vertices_.size())
      fail(ErrorKind::UnknownVertex, "edge endpoint index out of range");
  normalize();
}

void MultiGraph::normalize() {
  for (const auto& e : edges_)
    if (!e.mult.is_infinite() && e.mult.count() == 0)
      fail(ErrorKind::InvalidInput, "edge multiplicity must be >= 1 or inf");
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  std::vector<Edge> merged;
  for (const auto& e : edges_) {
    if (!merged.empty() && merged.back().src == e.src && merged.back().dst == e.dst) {
      merged.back().mult += e.mult;
    } else {
      merged.push_back(e);
    }
  }
  edges_ = std::move(merged);
}

VertexIndex MultiGraph::index_of(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) fail(ErrorKind::UnknownVertex, "vertex '" + v + "' not in graph");
  return it->second;
}

std::optional<Multiplicity> MultiGraph::multiplicity(VertexIndex src, VertexIndex dst) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{src, dst},
                             [](const Edge& e, const std::pair<VertexIndex, VertexIndex>& key) {
                               return std::pair{e.src, e.dst} < key;
                             });
  if (it != edges_.end() && it->src == src && it->dst == dst) return it->mult;
  return std::nullopt;
}

bool MultiGraph::has_infinite_edges() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.mult.is_infinite(); });
}

// --- DagRelation ----------------------------------------------------------

DagRelation::DagRelation(std::vector<VertexId> vertices, std::vector<Pair> pairs)
    : vertices_(std::move(vertices)), pairs_(std::move(pairs)), index_(build_index(vertices_)) {
  for (const auto& [v, w] : pairs_) {
    if (v >= vertices_.size() || w >= vertices_.size())
      fail(ErrorKind::UnknownVertex, "relation pair index out of range");
    if (v == w) fail(ErrorKind::CyclicInput, "relation contains the loop (" + vertices_[v] + "," + vertices_[v] + ")");
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  auto order = topological_sort(vertices_.size(), pairs_);
  if (!order) fail(ErrorKind::CyclicInput, "relation has a directed cycle");
  topo_ = std::move(*order);
}

DagRelation DagRelation::from_named(std::vector<VertexId> vertices,
                                    const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  const auto index = build_index(vertices);
  std::vector<Pair> indexed;
  indexed.reserve(pairs.size());
  auto lookup = [&](const VertexId& v) {
    auto it = index.find(v);
    if (it == index.end()) fail(ErrorKind::UnknownVertex, "vertex '" + v + "' not in relation");
    return it->second;
  };
  for (const auto& [v, w] : pairs) indexed.emplace_back(lookup(v), lookup(w));
  return DagRelation(std::move(vertices), std::move(indexed));
}

VertexIndex DagRelation::index_of(const VertexId& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) fail(ErrorKind::UnknownVertex, "vertex '" + v + "' not in relation");
  return it->second;
}

bool DagRelation::contains(VertexIndex v, VertexIndex w) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{v, w});
}

IntMatrix DagRelation::adjacency() const {
  IntMatrix m(vertex_count(), vertex_count());
  for (const auto& [v, w] : pairs_) m(v, w) = 1;
  return m;
}

// --- operations -----------------------------------------------------------

bool is_acyclic(const MultiGraph& g) {
  std::vector<std::pair<VertexIndex, VertexIndex>> arcs;
  for (const auto& e : g.edges()) {
    if (e.src == e.dst) return false;
    arcs.emplace_back(e.src, e.dst);
  }
  return topological_sort(g.vertex_count(), arcs).has_value();
}

DagRelation transitive_closure(const DagRelation& r) {
  const IntMatrix reach = kernels::parallel::reachability(r.adjacency());
  std::vector<DagRelation::Pair> pairs;
  for (VertexIndex v = 0; v < r.vertex_count(); ++v)
    for (VertexIndex w = 0; w < r.vertex_count(); ++w)
      if (reach(v, w)) pairs.emplace_back(v, w);
  return DagRelation(r.vertices(), std::move(pairs));
}

DagRelation transitive_reduction(const DagRelation& r) {
  const std::size_t n = r.vertex_count();
  const IntMatrix reach = kernels::parallel::reachability(r.adjacency());
  std::vector<DagRelation::Pair> pairs;
  for (VertexIndex v = 0; v < n; ++v)
    for (VertexIndex w = 0; w < n; ++w) {
      if (!reach(v, w)) continue;
      bool covered = false;
      for (VertexIndex u = 0; u < n && !covered; ++u) covered = reach(v, u) && reach(u, w);
      if (!covered) pairs.emplace_back(v, w);
    }
  return DagRelation(r.vertices(), std::move(pairs));
}

MultiGraph add_loops(const DagRelation& r) {
  std::vector<Edge> edges;
  for (VertexIndex v = 0; v < r.vertex_count(); ++v) edges.push_back(Edge{v, v, Multiplicity(1)});
  for (const auto& [v, w] : r.pairs()) edges.push_back(Edge{v, w, Multiplicity(1)});
  return MultiGraph(r.vertices(), std::move(edges));
}

MultiGraph amplify(const DagRelation& r) {
  std::vector<Edge> edges;
  for (const auto& [v, w] : r.pairs()) edges.push_back(Edge{v, w, Multiplicity::infinite()});
  return MultiGraph(r.vertices(), std::move(edges));
}

IntMatrix adjacency_matrix(const MultiGraph& g) {
  IntMatrix m(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) {
    if (e.mult.is_infinite())
      fail(ErrorKind::InfiniteMultiplicity,
           "edge " + g.vertices()[e.src] + "->" + g.vertices()[e.dst] + " has infinite multiplicity");
    m(e.src, e.dst) = static_cast<IntMatrix::value_type>(e.mult.count());
  }
  return m;
}

std::vector<VertexClass> classify_vertices(const MultiGraph& g) {
  std::vector<VertexClass> classes(g.vertex_count());
  std::vector<bool> emits(g.vertex_count(), false);
  for (const auto& e : g.edges()) {
    emits[e.src] = true;
    if (e.mult.is_infinite()) classes[e.src].is_infinite_emitter = true;
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    classes[v].is_sink = !emits[v];
    classes[v].is_regular = !classes[v].is_sink && !classes[v].is_infinite_emitter;
  }
  return classes;
}

SubsetFlags subset_flags(const MultiGraph& g, const std::vector<VertexId>& subset) {
  std::vector<bool> in(g.vertex_count(), false);
  for (const auto& v : subset) in[g.index_of(v)] = true;

  SubsetFlags flags;
  flags.hereditary = std::all_of(g.edges().begin(), g.edges().end(),
                                 [&](const Edge& e) { return !in[e.src] || in[e.dst]; });

  const auto classes = classify_vertices(g);
  std::vector<bool> all_targets_in(g.vertex_count(), true);
  for (const auto& e : g.edges())
    if (!in[e.dst]) all_targets_in[e.src] = false;
  flags.saturated = true;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (classes[v].is_regular && all_targets_in[v] && !in[v]) flags.saturated = false;
  return flags;
}

MultiGraph quotient_graph(const MultiGraph& g, const std::vector<VertexId>& subset) {
  const auto flags = subset_flags(g, subset);
  if (!flags.hereditary) fail(ErrorKind::NotHereditary, "subset is not hereditary");
  if (!flags.saturated) fail(ErrorKind::NotSaturated, "subset is not saturated");
  std::vector<bool> in(g.vertex_count(), false);
  for (const auto& v : subset) in[g.index_of(v)] = true;

  std::vector<VertexId> kept;
  std::vector<VertexIndex> remap(g.vertex_count(), 0);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (in[v]) continue;
    remap[v] = kept.size();
    kept.push_back(g.vertices()[v]);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (!in[e.src] && !in[e.dst]) edges.push_back(Edge{remap[e.src], remap[e.dst], e.mult});
  return MultiGraph(std::move(kept), std::move(edges));
}

std::size_t depth(const DagRelation& r, const VertexId& v) {
  const VertexIndex target = r.index_of(v);
  std::vector<std::vector<VertexIndex>> out(r.vertex_count());
  for (const auto& [a, b] : r.pairs()) out[a].push_back(b);
  std::vector<std::size_t> d(r.vertex_count(), 0);
  const auto& topo = r.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    for (VertexIndex w : out[*it]) d[*it] = std::max(d[*it], d[w] + 1);
  return d[target];
}

DagRelation relation_of(const MultiGraph& g) {
  std::vector<DagRelation::Pair> pairs;
  for (const auto& e : g.edges())
    if (e.src != e.dst) pairs.emplace_back(e.src, e.dst);
  return DagRelation(g.vertices(), std::move(pairs));
}

DagRelation restrict_relation(const DagRelation& r, const std::vector<VertexId>& keep) {
  std::vector<bool> in(r.vertex_count(), false);
  for (const auto& v : keep) in[r.index_of(v)] = true;
  std::vector<VertexId> kept;
  std::vector<VertexIndex> remap(r.vertex_count(), 0);
  for (VertexIndex v = 0; v < r.vertex_count(); ++v) {
    if (!in[v]) continue;
    remap[v] = kept.size();
    kept.push_back(r.vertices()[v]);
  }
  std::vector<DagRelation::Pair> pairs;
  for (const auto& [a, b] : r.pairs())
    if (in[a] && in[b]) pairs.emplace_back(remap[a], remap[b]);
  return DagRelation(std::move(kept), std::move(pairs));
}

}  // namespace afcore
