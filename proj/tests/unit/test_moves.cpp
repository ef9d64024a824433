#include <doctest.h>

#include <map>
#include <queue>
#include <random>

#include "afcore/error.hpp"
#include "afcore/moves.hpp"
#include "support.hpp"

using namespace afcore;

namespace {

DagRelation hasse24() {
  return DagRelation::from_named({"1", "2", "3", "4", "5", "6"},
                                 {{"1", "2"}, {"2", "3"}, {"2", "4"}, {"3", "5"}, {"4", "5"}, {"5", "6"}});
}

MultiGraph l24() { return add_loops(transitive_closure(hasse24())); }
MultiGraph l24_tilde() { return add_loops(hasse24()); }

const IntMatrix kB{{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0},
                   {1, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 0}};
const IntMatrix kBTilde{{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
                        {0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 0}};

// Legality from the matrix alone: A = B^T + I, loop at i, walk i -> j.
bool oracle_legal(const IntMatrix& b, std::size_t i, std::size_t j) {
  const std::size_t n = b.rows();
  auto a = [&](std::size_t v, std::size_t w) { return b(w, v) + (v == w ? 1 : 0); };
  if (a(i, i) <= 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{i};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w)
      if (a(v, w) > 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen[j];
}

// Length of the shortest legal row-add sequence, by breadth-first search.
std::optional<std::size_t> bfs_distance(const IntMatrix& start, const IntMatrix& target, std::size_t max_depth) {
  std::map<std::vector<std::int64_t>, std::size_t> dist;
  std::queue<IntMatrix> q;
  dist[start.data()] = 0;
  q.push(start);
  while (!q.empty()) {
    const IntMatrix m = q.front();
    q.pop();
    const std::size_t d = dist[m.data()];
    if (m == target) return d;
    if (d == max_depth) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.rows(); ++j) {
        if (i == j || !oracle_legal(m, i, j)) continue;
        IntMatrix next = m;
        for (std::size_t c = 0; c < m.cols(); ++c) next(j, c) += m(i, c);
        if (dist.emplace(next.data(), d + 1).second) q.push(next);
      }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("B-matrices of the Grassmann graphs") {
  const BMatrix b = b_matrix(l24());
  const BMatrix bt = b_matrix(l24_tilde());
  CHECK(b.matrix() == kB);
  CHECK(bt.matrix() == kBTilde);
  CHECK(b_matrix(add_loops(DagRelation({"v"}, {}))).matrix() == IntMatrix{{0}});
  CHECK(b.graph() == l24());
  CHECK(b.regular_sources().empty());
  CHECK_THROWS_AS(b_matrix(amplify(hasse24())), Error);
}

TEST_CASE("row-addition legality") {
  const MultiGraph g = l24();
  CHECK(legal_row_add(g, 1, 2));
  CHECK_FALSE(legal_row_add(g, 2, 3));
  CHECK_FALSE(legal_row_add(g, 5, 0));
  CHECK(legal_row_add(g, 0, 5));
  try {
    legal_row_add(g, 0, 6);
    FAIL("index accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IndexOutOfRange);
  }
  CHECK_THROWS_AS(legal_row_add(g, 2, 2), Error);

  // A vertex without a loop never supports a move.
  const MultiGraph bare(std::vector<VertexId>{"a", "b"}, std::vector<EdgeSpec>{{"a", "b"}, {"b", "b"}});
  CHECK_FALSE(legal_row_add(bare, 0, 1));

  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
    const DagRelation r = testsupport::random_dag(rng, n, 0.4);
    const MultiGraph g2 = add_loops(r);
    const IntMatrix b = b_matrix(g2).matrix();
    for (const auto& [v, w] : r.pairs()) CHECK(legal_row_add(g2, v, w));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) CHECK(legal_row_add(g2, i, j) == oracle_legal(b, i, j));
  }
}

TEST_CASE("the Grassmann move sequence") {
  const BMatrix start = b_matrix(l24_tilde());
  const BMatrix step1 = apply_row_add(start, {1, 2});
  CHECK(step1.matrix()(2, 0) == 1);
  CHECK(step1.matrix()(2, 1) == 1);
  for (std::size_t c = 2; c < 6; ++c) CHECK(step1.matrix()(2, c) == 0);
  const std::vector<RowAdd> seq{{1, 2}, {1, 3}, {3, 4}, {4, 5}};
  CHECK(replay(start, seq).matrix() == kB);
  CHECK(moves_to_json(seq).dump() == "[[2,3],[2,4],[4,5],[5,6]]");
  CHECK(moves_from_json(moves_to_json(seq)) == seq);
  CHECK_THROWS_AS(apply_row_add(b_matrix(l24()), {2, 3}), Error);
  CHECK_THROWS_AS(apply_row_add(start, {4, 4}), Error);
}

TEST_CASE("row additions compose one at a time") {
  const BMatrix start = b_matrix(l24_tilde());
  const BMatrix twice = apply_row_add(apply_row_add(start, {1, 2}), {1, 2});
  IntMatrix expected = start.matrix();
  for (std::size_t c = 0; c < 6; ++c) expected(2, c) += 2 * start.matrix()(1, c);
  CHECK(twice.matrix() == expected);
}

TEST_CASE("move search") {
  const auto found = find_move_sequence(l24_tilde(), l24());
  REQUIRE(found);
  CHECK(found->size() <= 4);
  CHECK(replay(b_matrix(l24_tilde()), *found).matrix() == kB);
  CHECK(bfs_distance(kBTilde, kB, 4) == found->size());

  const auto none = find_move_sequence(l24(), l24());
  REQUIRE(none);
  CHECK(none->empty());

  // Chain to total order on three vertices.
  const DagRelation c3 = DagRelation::from_named({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  const MultiGraph from = add_loops(c3), to = add_loops(transitive_closure(c3));
  const auto chain_seq = find_move_sequence(from, to, 4);
  REQUIRE(chain_seq);
  CHECK(chain_seq->size() == bfs_distance(b_matrix(from).matrix(), b_matrix(to).matrix(), 4));
  CHECK(*chain_seq == std::vector<RowAdd>{{1, 2}});

  CHECK_FALSE(find_move_sequence(l24(), l24_tilde(), 3));
  CHECK_FALSE(find_move_sequence(from, l24()));
}

TEST_CASE("regular sources are refused") {
  const MultiGraph g(std::vector<VertexId>{"a", "b"}, std::vector<EdgeSpec>{{"a", "b"}, {"b", "b"}});
  const BMatrix b = b_matrix(g);
  CHECK(b.regular_sources() == std::vector<VertexId>{"a"});
  try {
    apply_row_add(b, {1, 0});
    FAIL("move accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IllegalMove);
  }
  const MultiGraph wider(std::vector<VertexId>{"a", "b"}, std::vector<EdgeSpec>{{"a", "b", Multiplicity(2)}, {"b", "b"}});
  CHECK_FALSE(find_move_sequence(g, wider));
}

TEST_CASE("random legal moves replay, search and preserve legality") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    const MultiGraph g = add_loops(testsupport::random_dag(rng, n, 0.5));
    BMatrix cur = b_matrix(g);
    std::vector<RowAdd> applied;
    for (int step = 0; step < 2; ++step) {
      std::vector<RowAdd> legal;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && legal_row_add(cur.graph(), i, j)) legal.push_back({i, j});
      if (legal.empty()) break;
      const RowAdd mv = legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
      const BMatrix next = apply_row_add(cur, mv);
      // The new graph only gains edges, so every earlier move stays legal.
      for (const auto& m : legal) CHECK(legal_row_add(next.graph(), m.from, m.to));
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) CHECK(next.matrix()(v, w) >= cur.matrix()(v, w));
      applied.push_back(mv);
      cur = next;
    }
    CHECK(replay(b_matrix(g), applied) == cur);
    const auto found = find_move_sequence(g, cur.graph(), applied.size());
    REQUIRE(found);
    CHECK(found->size() <= applied.size());
    CHECK(replay(b_matrix(g), *found) == cur);
    CHECK(bfs_distance(b_matrix(g).matrix(), cur.matrix(), applied.size()) == found->size());
  }
}
