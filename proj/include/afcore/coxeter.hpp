#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "afcore/graph.hpp"
#include "afcore/int_matrix.hpp"

namespace afcore {

// Generalized Cartan matrix of finite type plus the subset S of simple
// roots (1-based node indices) defining the parabolic subgroup W_S.
struct CartanInput {
  IntMatrix cartan;
  std::vector<int> subset;

  std::size_t rank() const noexcept { return cartan.rows(); }
};

// Cartan matrix for the classical series A_n, B_n, C_n, D_n.
IntMatrix cartan_matrix(char type, std::size_t rank);

// Checks the Cartan axioms, the subset range and finite type (all principal
// minors positive). Throws InvalidInput or NotFiniteType.
void validate(const CartanInput& input);

// Generator words are 1-based; "1" denotes the identity, "s1.s2" = s1 s2.
std::string word_to_string(const std::vector<int>& word);
std::vector<int> word_from_string(const std::string& text);

struct WeylElement {
  IntMatrix matrix;       // action on the root lattice, basis of simple roots
  std::size_t length = 0; // Cayley-graph distance from the identity
  std::vector<int> reduced_word;
};

inline constexpr std::size_t kDefaultMaxGroupSize = 40320;

// Finite Weyl group enumerated by breadth-first search from the identity
// under left multiplication by simple reflections; element order is the
// BFS order, so lengths are non-decreasing.
class WeylGroup {
 public:
  WeylGroup(const CartanInput& input, std::size_t max_size = kDefaultMaxGroupSize);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t rank() const noexcept { return generators_.size(); }
  const std::vector<WeylElement>& elements() const noexcept { return elements_; }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  // Matrix of the simple reflection s_i, i 1-based.
  const IntMatrix& generator(int i) const;

  std::optional<std::size_t> find(const IntMatrix& m) const;
  std::size_t index_of(const IntMatrix& m) const;  // throws if absent
  std::size_t multiply(std::size_t a, std::size_t b) const;
  // Index of s_i * w.
  std::size_t left_multiply(int i, std::size_t w) const;
  // Matrix of a generator word, evaluated left to right.
  IntMatrix evaluate(const std::vector<int>& word) const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept;
  };

  std::vector<IntMatrix> generators_;
  std::vector<WeylElement> elements_;
  std::unordered_map<std::vector<std::int64_t>, std::size_t, KeyHash> index_;
};

WeylGroup enumerate_group(const CartanInput& input, std::size_t max_size = kDefaultMaxGroupSize);

// Indices (into the group) of W_S, sorted.
std::vector<std::size_t> parabolic_subgroup(const CartanInput& input, const WeylGroup& group);

// One representative per left coset w W_S, the unique element of minimal
// length; throws NonUniqueMinimum if a coset has two shortest elements.
std::vector<std::size_t> min_coset_reps(const WeylGroup& group, const std::vector<std::size_t>& subgroup);

struct FlagGraph {
  std::vector<WeylElement> reps;
  // Vertex ids are the reduced words of the representatives.
  DagRelation relation;
};

// (v,w) is an arrow iff w = s_i v for some i with l(w) > l(v), both in W^S.
FlagGraph weak_order_graph(const WeylGroup& group, const std::vector<std::size_t>& reps);

FlagGraph flag_graph(const CartanInput& input, std::size_t max_size = kDefaultMaxGroupSize);
MultiGraph flag_amplified(const CartanInput& input, std::size_t max_size = kDefaultMaxGroupSize);

nlohmann::json flag_graph_to_json(const FlagGraph& fg);

}  // namespace afcore
