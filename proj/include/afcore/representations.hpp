#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "afcore/graded_operator.hpp"
#include "afcore/graph.hpp"
#include "afcore/int_matrix.hpp"
#include "afcore/relations.hpp"

namespace afcore {

// Which basis vectors count as far enough from the truncation boundary.
// On a Toeplitz tensor space every index must satisfy m_i + budget <= N-1
// (the bottom edge m_i = 0 is exact and needs no margin). On a path space
// the walk length must lie in [min_length, N - budget].
struct InteriorSpec {
  std::size_t budget = 0;
  std::size_t min_length = 0;
};

// (l^2 N, truncated at N)^{(x) k}: T|m> = |m+1> for m < N-1 and T|N-1> = 0.
// Factor numbers start at 1, matching the T_1, Q_2, ... notation.
class ToeplitzSpace {
 public:
  ToeplitzSpace(std::size_t factors, std::size_t cutoff);

  std::size_t factors() const noexcept { return factors_; }
  std::size_t cutoff() const noexcept { return cutoff_; }
  std::size_t dim() const noexcept { return dim_; }

  // The first factor is the most significant digit.
  std::size_t index(const std::vector<std::size_t>& m) const;
  std::vector<std::size_t> multi_index(std::size_t idx) const;

  GradedOperator T(std::size_t factor) const;
  GradedOperator Q(std::size_t factor) const;       // 1 - T T*
  GradedOperator Q_perp(std::size_t factor) const;  // T T*
  // |n><m|, degree 0.
  GradedOperator matrix_unit(const std::vector<std::size_t>& n, const std::vector<std::size_t>& m) const;

  std::vector<bool> interior(const InteriorSpec& spec) const;

 private:
  void check_factor(std::size_t factor) const;

  std::size_t factors_;
  std::size_t cutoff_;
  std::size_t dim_;
};

// op (x) z^k: every block moved up by k.
GradedOperator shift_degree(const GradedOperator& op, int k);

// Names one edge of a graph; parallel copies (and the instances of an
// infinite edge) are told apart by `copy`.
struct EdgeKey {
  VertexId src;
  VertexId dst;
  std::size_t copy = 0;
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

std::string to_string(const EdgeKey& e);

// Candidate Cuntz-Krieger family: P_v for each vertex, S_e for each edge
// copy.
struct CkFamily {
  std::size_t dim = 0;
  std::map<VertexId, GradedOperator> projections;
  std::map<EdgeKey, GradedOperator> isometries;

  // Symbols P_v and S_src_dst (S_src_dst_k for copy k > 0).
  OperatorMap symbols() const;
};

// Span of all walks of length <= N, with S_e|alpha> = |e alpha> whenever
// t(e) = s(alpha) and the result still fits. Infinite edges contribute
// `infinite_copies` parallel instances.
class PathSpace {
 public:
  PathSpace(const MultiGraph& g, std::size_t max_length, std::size_t infinite_copies = 0);

  const MultiGraph& graph() const noexcept { return graph_; }
  std::size_t max_length() const noexcept { return max_length_; }
  std::size_t dim() const noexcept { return lengths_.size(); }
  const std::vector<EdgeKey>& edges() const noexcept { return edges_; }

  std::size_t length(std::size_t walk) const { return lengths_.at(walk); }

  GradedOperator P(const VertexId& v) const;
  GradedOperator S(const EdgeKey& e) const;

  std::vector<bool> interior(const InteriorSpec& spec) const;
  CkFamily canonical_family() const;

 private:
  MultiGraph graph_;
  std::size_t max_length_;
  std::vector<EdgeKey> edges_;
  std::vector<std::size_t> lengths_;
  std::vector<VertexIndex> sources_;
  std::vector<SparseMatrix> shifts_;  // one per entry of edges_
};

inline constexpr std::size_t kMaxPathSpaceDim = std::size_t{1} << 20;

PathSpace path_space_rep(const MultiGraph& g, std::size_t max_length, std::size_t infinite_copies = 0);

// The Hasse diagram of the Schubert cells of Gr(2,4) on vertices 1..6, and
// the graph L_{2,4}: its transitive closure with a loop at every vertex.
DagRelation grassmann_hasse_relation();
MultiGraph grassmann_graph();

// Entry (i,j) of the Z-relations: adjacency of L_{2,4}, loops included.
IntMatrix plucker_adjacency();

// Relations Z_i Z_j = 0 (a_ij = 0), Z_i* Z_j = 0 (i != j),
// Z_i* Z_i = sum_j a_ij Z_j Z_j* and sum_j Z_j Z_j* = 1 for the symbols
// prefix1 .. prefix{n}, using the leading n x n block of `a`.
std::vector<Relation> z_relations(const IntMatrix& a, std::size_t n, const std::string& prefix);

// Z_1 .. Z_6 on four Toeplitz factors, each tensored with z.
OperatorMap plucker_rep(std::size_t cutoff);
// Y_1 .. Y_5 on three Toeplitz factors, each tensored with z.
OperatorMap x6_generator_images(std::size_t cutoff);

// P_i -> Z_i Z_i*, S_{i,j} -> Z_i Z_j Z_j*, over the edges of L_{2,4}.
CkFamily grassmann_core_images(std::size_t cutoff);
// The six projections written out in Q/Q-perp form, P_1 = Q_1^perp, ...
std::vector<GradedOperator> grassmann_expected_projections(std::size_t cutoff);

// CK1 (S_e* S_e = P_{t(e)}), CK2 (P_{s(e)} S_e S_e* = S_e S_e*), CK3 at
// regular vertices, P_v projections that are mutually orthogonal, and
// orthogonal ranges S_e* S_f = 0. Infinite edges are checked through the
// copies 0..n_cap-1.
RelationReport check_ck_family(const CkFamily& family, const MultiGraph& target, std::size_t n_cap,
                               const std::vector<bool>& interior);

// Images of the generators of C*(F_1^{1,r}) inside the path-space model
// of L_3^{r;1,r}:  P_j -> P_j and S_{e_{i,n}} -> S_{l_0}^n S_{f_i} (S_{l_i}*)^{n+1}
// for n < n_cap. Vertices are named 0..r.
struct LensImages {
  std::size_t weight;
  std::size_t n_cap;
  MultiGraph lens_graph;      // L_3^{r;1,r}
  MultiGraph teardrop_graph;  // F_1^{1,r}
  PathSpace space;
  CkFamily family;            // keyed by the teardrop graph
};

LensImages lens_iso_images(std::size_t weight, std::size_t n_cap, std::size_t max_length);

// Basis vectors where every lens identity up to telescoping depth k is
// exact: walks of length >= max(n_cap, k).
std::vector<bool> lens_interior(const LensImages& images, std::size_t k);

// phi(P_0) - sum_{n<k} sum_i phi(S_{e_{i,n}}) phi(S_{e_{i,n}})*  against
// S_{l_0}^k (S_{l_0}*)^k.
RelationResult check_lens_telescoping(const LensImages& images, std::size_t k);

using IndexTuple = std::array<std::size_t, 4>;

// V(n) = Z_1^{n1} Z_2^{n2} Z_4^{n3-n2} Z_5^{n4} if n2 <= n3,
//        Z_1^{n1} Z_2^{n3} Z_3^{n2-n3} Z_5^{n4} otherwise.
GradedOperator v_operator(const OperatorMap& z, const IndexTuple& n);
std::size_t tuple_degree(const IndexTuple& n);

// R = V(n) Z_6^{deg m} (Z_6*)^{deg n} V(m)*, which should be |n><m| in
// degree 0. Entries must be < cutoff (TruncationTooSmall).
GradedOperator rank_one_operator(const OperatorMap& z, const IndexTuple& n, const IndexTuple& m);
bool rank_one_check(const IndexTuple& n, const IndexTuple& m, std::size_t cutoff);

struct RankOneSweep {
  std::size_t checked = 0;
  std::vector<std::pair<IndexTuple, IndexTuple>> failures;
  bool zero_case = false;  // R for n = m = 0 equals Z_6 Z_6*
};

// Every pair of tuples with entries <= max_entry.
RankOneSweep rank_one_sweep(std::size_t max_entry, std::size_t cutoff);

}  // namespace afcore
