#include "afcore/moves.hpp"

#include <deque>
#include <functional>
#include <map>

#include "afcore/error.hpp"

namespace afcore {

namespace {

bool reaches(const IntMatrix& adjacency, std::size_t i, std::size_t j) {
  const std::size_t n = adjacency.rows();
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t w = 0; w < n; ++w)
    if (adjacency(i, w) > 0 && !seen[w]) {
      seen[w] = true;
      queue.push_back(w);
    }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (v == j) return true;
    for (std::size_t w = 0; w < n; ++w)
      if (adjacency(v, w) > 0 && !seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  }
  return false;
}

bool legal_on_adjacency(const IntMatrix& adjacency, std::size_t i, std::size_t j) {
  return adjacency(i, i) > 0 && reaches(adjacency, i, j);
}

IntMatrix adjacency_of(const IntMatrix& b) {
  IntMatrix a = b.transpose() + IntMatrix::identity(b.rows());
  return a;
}

}  // namespace

BMatrix::BMatrix(IntMatrix matrix, std::vector<VertexId> vertices)
    : matrix_(std::move(matrix)), vertices_(std::move(vertices)) {
  if (!matrix_.square() || matrix_.rows() != vertices_.size())
    fail(ErrorKind::DimensionMismatch, "B-matrix shape does not match the vertex list");
}

MultiGraph BMatrix::graph() const {
  const IntMatrix a = adjacency_of(matrix_);
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < a.rows(); ++v)
    for (std::size_t w = 0; w < a.cols(); ++w) {
      if (a(v, w) < 0) fail(ErrorKind::IllegalMove, "B-matrix does not describe a graph (negative entry)");
      if (a(v, w) > 0) edges.push_back(Edge{v, w, Multiplicity(static_cast<std::uint64_t>(a(v, w)))});
    }
  return MultiGraph(vertices_, std::move(edges));
}

std::vector<VertexId> BMatrix::regular_sources() const {
  const IntMatrix a = adjacency_of(matrix_);
  std::vector<VertexId> sources;
  for (std::size_t v = 0; v < a.rows(); ++v) {
    bool receives = false, emits = false;
    for (std::size_t u = 0; u < a.rows(); ++u) {
      receives = receives || a(u, v) > 0;
      emits = emits || a(v, u) > 0;
    }
    if (!receives && emits) sources.push_back(vertices_[v]);
  }
  return sources;
}

BMatrix b_matrix(const MultiGraph& g) {
  const IntMatrix a = adjacency_matrix(g);
  return BMatrix(a.transpose() - IntMatrix::identity(a.rows()), g.vertices());
}

bool legal_row_add(const MultiGraph& g, std::size_t i, std::size_t j) {
  const std::size_t n = g.vertex_count();
  if (i >= n || j >= n) fail(ErrorKind::IndexOutOfRange, "row index out of range");
  if (i == j) fail(ErrorKind::InvalidInput, "a row cannot be added to itself");
  return legal_on_adjacency(adjacency_matrix(g), i, j);
}

BMatrix apply_row_add(const BMatrix& b, RowAdd move) {
  const std::size_t n = b.size();
  if (move.from >= n || move.to >= n) fail(ErrorKind::IndexOutOfRange, "row index out of range");
  if (move.from == move.to) fail(ErrorKind::IllegalMove, "a row cannot be added to itself");
  const IntMatrix a = adjacency_of(b.matrix());
  if (!b.regular_sources().empty())
    fail(ErrorKind::IllegalMove, "graph has a regular source; row additions do not apply");
  if (!legal_on_adjacency(a, move.from, move.to))
    fail(ErrorKind::IllegalMove, "row " + std::to_string(move.from + 1) + " cannot be added to row " +
                                     std::to_string(move.to + 1));
  IntMatrix next = b.matrix();
  for (std::size_t c = 0; c < n; ++c) next(move.to, c) += next(move.from, c);
  BMatrix result(std::move(next), b.vertices());
  (void)result.graph();  // validates non-negativity of the new adjacency
  return result;
}

BMatrix replay(const BMatrix& start, const std::vector<RowAdd>& moves) {
  BMatrix current = start;
  for (const auto& m : moves) current = apply_row_add(current, m);
  return current;
}

std::optional<std::vector<RowAdd>> find_move_sequence(const MultiGraph& from, const MultiGraph& to,
                                                      std::size_t max_depth) {
  if (from.vertex_count() != to.vertex_count()) return std::nullopt;
  const BMatrix start = b_matrix(from);
  const IntMatrix target = b_matrix(to).matrix();
  const std::size_t n = start.size();
  if (start.matrix() == target) return std::vector<RowAdd>{};
  if (!start.regular_sources().empty()) return std::nullopt;

  // A legal source row has a loop, so all its entries are >= 0 and entries
  // never decrease; states exceeding the target anywhere are dead.
  auto dominated = [&](const IntMatrix& m) {
    for (std::size_t k = 0; k < m.data().size(); ++k)
      if (m.data()[k] > target.data()[k]) return false;
    return true;
  };

  std::vector<RowAdd> path;
  std::map<std::vector<std::int64_t>, std::size_t> best_remaining;
  std::function<bool(const IntMatrix&, std::size_t)> search = [&](const IntMatrix& m, std::size_t remaining) {
    if (m == target) return true;
    if (remaining == 0) return false;
    auto [it, inserted] = best_remaining.emplace(m.data(), remaining);
    if (!inserted) {
      if (it->second >= remaining) return false;
      it->second = remaining;
    }
    const IntMatrix a = adjacency_of(m);
    for (std::size_t i = 0; i < n; ++i) {
      if (a(i, i) <= 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !reaches(a, i, j)) continue;
        IntMatrix next = m;
        for (std::size_t c = 0; c < n; ++c) next(j, c) += m(i, c);
        if (!dominated(next)) continue;
        path.push_back(RowAdd{i, j});
        if (search(next, remaining - 1)) return true;
        path.pop_back();
      }
    }
    return false;
  };

  for (std::size_t depth = 1; depth <= max_depth; ++depth) {
    best_remaining.clear();
    path.clear();
    if (search(start.matrix(), depth)) return path;
  }
  return std::nullopt;
}

nlohmann::json moves_to_json(const std::vector<RowAdd>& moves) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& m : moves) j.push_back({m.from + 1, m.to + 1});
  return j;
}

std::vector<RowAdd> moves_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "moves must be an array of [i,j] pairs");
  std::vector<RowAdd> moves;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer() ||
        p[0].get<long long>() < 1 || p[1].get<long long>() < 1)
      fail(ErrorKind::InvalidInput, "each move must be a pair of 1-based indices");
    moves.push_back(RowAdd{p[0].get<std::size_t>() - 1, p[1].get<std::size_t>() - 1});
  }
  return moves;
}

}  // namespace afcore
