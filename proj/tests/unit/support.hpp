#pragma once

// Generators and brute-force oracles shared by the unit tests. Everything
// here is written directly from definitions, independent of the library
// algorithms it is compared against.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "afcore/graph.hpp"
#include "afcore/int_matrix.hpp"

namespace testsupport {

inline std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(i + 1));
  return v;
}

// Random DAG: pairs (i,j) with i < j in a shuffled order, each with the
// given probability.
inline afcore::DagRelation random_dag(std::mt19937& rng, std::size_t n, double p = 0.35) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<afcore::DagRelation::Pair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(perm[i], perm[j]);
  return afcore::DagRelation(names(n), pairs);
}

// Reachability by depth-first search from every vertex.
inline std::set<std::pair<std::size_t, std::size_t>> reach_pairs(std::size_t n,
                                                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& [a, b] : pairs) out[a].push_back(b);
  std::set<std::pair<std::size_t, std::size_t>> result;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack(out[s].begin(), out[s].end());
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = true;
      result.emplace(s, v);
      for (auto w : out[v]) stack.push_back(w);
    }
  }
  return result;
}

inline std::set<std::pair<std::size_t, std::size_t>> pair_set(const afcore::DagRelation& r) {
  return {r.pairs().begin(), r.pairs().end()};
}

inline afcore::IntMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi,
                                           double density = 1.0) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution keep(density);
  afcore::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m(r, c) = val(rng);
  return m;
}

// Calls f on every vector in [lo, hi]^n.
template <class F>
void for_each_vector(std::size_t n, int lo, int hi, F&& f) {
  std::vector<std::int64_t> x(n, lo);
  for (;;) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == hi) x[i++] = lo;
    if (i == n) return;
    ++x[i];
  }
}

}  // namespace testsupport
