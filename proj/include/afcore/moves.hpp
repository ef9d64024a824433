#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "afcore/graph.hpp"
#include "afcore/int_matrix.hpp"

namespace afcore {

// Add row `from` to row `to` of the B-matrix (0-based vertex indices).
struct RowAdd {
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const RowAdd&, const RowAdd&) = default;
};

// B_E = A_E^T - I for a graph with finite multiplicities. The graph the
// matrix currently describes is recovered as A = B^T + I.
class BMatrix {
 public:
  BMatrix(IntMatrix matrix, std::vector<VertexId> vertices);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  MultiGraph graph() const;
  // Vertices that receive no edge but emit finitely many; the row-addition
  // calculus is only valid without them.
  std::vector<VertexId> regular_sources() const;

  friend bool operator==(const BMatrix& a, const BMatrix& b) { return a.matrix_ == b.matrix_; }

 private:
  IntMatrix matrix_;
  std::vector<VertexId> vertices_;
};

BMatrix b_matrix(const MultiGraph& g);

// Vertex i supports a loop and a directed path of positive length leads
// from i to j.
bool legal_row_add(const MultiGraph& g, std::size_t i, std::size_t j);

// Legality is judged on the graph described by the current matrix. Throws
// IllegalMove when the move is not allowed or the graph has regular sources.
BMatrix apply_row_add(const BMatrix& b, RowAdd move);

inline constexpr std::size_t kDefaultMoveDepth = 6;

// Iterative-deepening search for legal row additions turning B_from into
// B_to; moves are tried in lexicographic (from, to) order. nullopt means
// nothing was found within the depth bound, not that none exists.
std::optional<std::vector<RowAdd>> find_move_sequence(const MultiGraph& from, const MultiGraph& to,
                                                      std::size_t max_depth = kDefaultMoveDepth);

// Replays a sequence, returning the final matrix.
BMatrix replay(const BMatrix& start, const std::vector<RowAdd>& moves);

// Moves as 1-based pairs [[2,3],[2,4],...].
nlohmann::json moves_to_json(const std::vector<RowAdd>& moves);
std::vector<RowAdd> moves_from_json(const nlohmann::json& j);

}  // namespace afcore
