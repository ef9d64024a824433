#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "afcore/int_matrix.hpp"

namespace afcore {

using VertexId = std::string;
using VertexIndex = std::size_t;

// Edge multiplicity: a positive count, or countably infinite.
class Multiplicity {
 public:
  constexpr explicit Multiplicity(std::uint64_t count = 1) : count_(count) {}
  static constexpr Multiplicity infinite() {
    Multiplicity m;
    m.infinite_ = true;
    m.count_ = 0;
    return m;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  // Only meaningful when finite.
  constexpr std::uint64_t count() const noexcept { return count_; }

  Multiplicity& operator+=(const Multiplicity& other);
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

  std::string to_string() const;

 private:
  bool infinite_ = false;
  std::uint64_t count_ = 1;
};

struct Edge {
  VertexIndex src;
  VertexIndex dst;
  Multiplicity mult;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeSpec {
  VertexId src;
  VertexId dst;
  Multiplicity mult{1};
};

// Finite directed graph. Parallel edges are folded into one record per
// ordered pair carrying a multiplicity; the declared vertex order fixes
// matrix indexing everywhere else in the library.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::vector<VertexId> vertices, const std::vector<EdgeSpec>& edges);
  MultiGraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  // Sorted by (src, dst).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  VertexIndex index_of(const VertexId& v) const;
  std::optional<Multiplicity> multiplicity(VertexIndex src, VertexIndex dst) const;
  bool has_loop(VertexIndex v) const { return multiplicity(v, v).has_value(); }
  bool has_infinite_edges() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  void normalize();

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<VertexId, VertexIndex> index_;
};

// Loop-free acyclic relation on an ordered vertex set. Construction rejects
// cycles (CyclicInput), so every operation taking a DagRelation can rely on
// acyclicity; the topological order doubles as the certificate.
class DagRelation {
 public:
  using Pair = std::pair<VertexIndex, VertexIndex>;

  DagRelation() = default;
  DagRelation(std::vector<VertexId> vertices, std::vector<Pair> pairs);

  static DagRelation from_named(std::vector<VertexId> vertices,
                                const std::vector<std::pair<VertexId, VertexId>>& pairs);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  // Sorted and duplicate-free.
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  const std::vector<VertexIndex>& topological_order() const noexcept { return topo_; }

  VertexIndex index_of(const VertexId& v) const;
  bool contains(VertexIndex v, VertexIndex w) const;
  // 0/1 adjacency matrix of the relation itself (no diagonal).
  IntMatrix adjacency() const;

  friend bool operator==(const DagRelation& a, const DagRelation& b) {
    return a.vertices_ == b.vertices_ && a.pairs_ == b.pairs_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Pair> pairs_;
  std::vector<VertexIndex> topo_;
  std::unordered_map<VertexId, VertexIndex> index_;
};

struct VertexClass {
  bool is_sink = false;
  bool is_infinite_emitter = false;
  bool is_regular = false;
  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

struct SubsetFlags {
  bool hereditary = false;
  bool saturated = false;
};

// True iff the graph (multiplicities ignored) has no directed cycle; a loop
// is a cycle.
bool is_acyclic(const MultiGraph& g);

DagRelation transitive_closure(const DagRelation& r);
DagRelation transitive_reduction(const DagRelation& r);

// E_R: the relation plus a loop at every vertex, all multiplicities 1.
MultiGraph add_loops(const DagRelation& r);
// F_R: every pair of the relation becomes an edge of infinite multiplicity.
MultiGraph amplify(const DagRelation& r);

// Entry (v,w) is the multiplicity of v -> w. Throws InfiniteMultiplicity.
IntMatrix adjacency_matrix(const MultiGraph& g);

std::vector<VertexClass> classify_vertices(const MultiGraph& g);

// Saturation is tested at regular vertices: a regular vertex all of whose
// edges land in H must itself lie in H.
SubsetFlags subset_flags(const MultiGraph& g, const std::vector<VertexId>& subset);

// E \ H: drop the vertices of H and every edge touching them. H must be
// hereditary and saturated.
MultiGraph quotient_graph(const MultiGraph& g, const std::vector<VertexId>& subset);

// Length of the longest directed walk in r starting at v.
std::size_t depth(const DagRelation& r, const VertexId& v);

// Relation underlying an E_R or F_R style graph: loops dropped,
// multiplicities forgotten. Throws CyclicInput if what remains has a cycle.
DagRelation relation_of(const MultiGraph& g);

// Relation restricted to a subset of its vertices (declared order kept).
DagRelation restrict_relation(const DagRelation& r, const std::vector<VertexId>& keep);

}  // namespace afcore
