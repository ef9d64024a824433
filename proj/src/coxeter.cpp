#include "afcore/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "afcore/error.hpp"

namespace afcore {

IntMatrix cartan_matrix(char type, std::size_t rank) {
  if (rank == 0) fail(ErrorKind::InvalidInput, "rank must be positive");
  IntMatrix a(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) a(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { a(i, j) = a(j, i) = -1; };
  switch (type) {
    case 'A':
    case 'a':
      for (std::size_t i = 0; i + 1 < rank; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'b':
    case 'C':
    case 'c':
      if (rank < 2) fail(ErrorKind::InvalidInput, "types B and C need rank >= 2");
      for (std::size_t i = 0; i + 1 < rank; ++i) link(i, i + 1);
      // B_n: the last simple root is short; C_n is the transpose.
      if (type == 'B' || type == 'b') {
        a(rank - 1, rank - 2) = -2;
      } else {
        a(rank - 2, rank - 1) = -2;
      }
      break;
    case 'D':
    case 'd':
      if (rank < 3) fail(ErrorKind::InvalidInput, "type D needs rank >= 3");
      for (std::size_t i = 0; i + 2 < rank; ++i) link(i, i + 1);
      link(rank - 3, rank - 1);
      break;
    default:
      fail(ErrorKind::InvalidInput, std::string("unsupported Dynkin type '") + type + "'");
  }
  return a;
}

void validate(const CartanInput& input) {
  const IntMatrix& a = input.cartan;
  const std::size_t r = a.rows();
  if (r == 0 || !a.square()) fail(ErrorKind::InvalidInput, "Cartan matrix must be square and non-empty");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j && a(i, j) != 2) fail(ErrorKind::InvalidInput, "Cartan diagonal entries must be 2");
      if (i != j && a(i, j) > 0) fail(ErrorKind::InvalidInput, "Cartan off-diagonal entries must be <= 0");
      if (i != j && (a(i, j) == 0) != (a(j, i) == 0))
        fail(ErrorKind::InvalidInput, "Cartan zero pattern must be symmetric");
    }
  for (int s : input.subset)
    if (s < 1 || static_cast<std::size_t>(s) > r)
      fail(ErrorKind::InvalidInput, "subset index " + std::to_string(s) + " out of range");
  if (r > 20) fail(ErrorKind::InvalidInput, "rank too large");
  // Finite type iff every principal minor is positive.
  for (std::uint32_t mask = 1; mask < (1U << r); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (1U << i)) idx.push_back(i);
    IntMatrix minor(idx.size(), idx.size());
    for (std::size_t x = 0; x < idx.size(); ++x)
      for (std::size_t y = 0; y < idx.size(); ++y) minor(x, y) = a(idx[x], idx[y]);
    if (determinant(minor) <= 0) fail(ErrorKind::NotFiniteType, "Cartan matrix is not of finite type");
  }
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) os << (k ? "." : "") << 's' << word[k];
  return os.str();
}

std::vector<int> word_from_string(const std::string& text) {
  std::vector<int> word;
  if (text == "1" || text.empty()) return word;
  const auto bad = [&] { fail(ErrorKind::InvalidInput, "malformed generator word \"" + text + "\""); };
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (pos > 0) {
      if (text[pos] != '.') bad();
      ++pos;
    }
    if (pos >= text.size() || text[pos] != 's') bad();
    ++pos;
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) bad();
    word.push_back(std::stoi(text.substr(pos, end - pos)));
    pos = end;
  }
  return word;
}

std::size_t WeylGroup::KeyHash::operator()(const std::vector<std::int64_t>& key) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : key) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

WeylGroup::WeylGroup(const CartanInput& input, std::size_t max_size) {
  validate(input);
  const std::size_t r = input.rank();
  for (std::size_t i = 0; i < r; ++i) {
    // s_i(alpha_j) = alpha_j - a_ij alpha_i: only row i differs from I.
    IntMatrix s = IntMatrix::identity(r);
    for (std::size_t j = 0; j < r; ++j) s(i, j) -= input.cartan(i, j);
    generators_.push_back(std::move(s));
  }

  elements_.push_back(WeylElement{IntMatrix::identity(r), 0, {}});
  index_.emplace(elements_.back().matrix.data(), 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix next = generators_[i] * elements_[head].matrix;
      if (index_.count(next.data())) continue;
      if (elements_.size() >= max_size)
        fail(ErrorKind::SizeExceeded, "Weyl group has more than " + std::to_string(max_size) + " elements");
      std::vector<int> word{static_cast<int>(i + 1)};
      const auto& tail = elements_[head].reduced_word;
      word.insert(word.end(), tail.begin(), tail.end());
      index_.emplace(next.data(), elements_.size());
      elements_.push_back(WeylElement{std::move(next), elements_[head].length + 1, std::move(word)});
    }
  }
}

const IntMatrix& WeylGroup::generator(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > generators_.size())
    fail(ErrorKind::IndexOutOfRange, "generator index " + std::to_string(i) + " out of range");
  return generators_[static_cast<std::size_t>(i - 1)];
}

std::optional<std::size_t> WeylGroup::find(const IntMatrix& m) const {
  auto it = index_.find(m.data());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeylGroup::index_of(const IntMatrix& m) const {
  auto idx = find(m);
  if (!idx) fail(ErrorKind::InvalidInput, "matrix is not an element of the group");
  return *idx;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(elements_.at(a).matrix * elements_.at(b).matrix);
}

std::size_t WeylGroup::left_multiply(int i, std::size_t w) const {
  return index_of(generator(i) * elements_.at(w).matrix);
}

IntMatrix WeylGroup::evaluate(const std::vector<int>& word) const {
  IntMatrix m = IntMatrix::identity(rank());
  for (int i : word) m = m * generator(i);
  return m;
}

WeylGroup enumerate_group(const CartanInput& input, std::size_t max_size) {
  return WeylGroup(input, max_size);
}

std::vector<std::size_t> parabolic_subgroup(const CartanInput& input, const WeylGroup& group) {
  std::vector<bool> in(group.size(), false);
  std::deque<std::size_t> queue{0};
  in[0] = true;
  while (!queue.empty()) {
    const std::size_t w = queue.front();
    queue.pop_front();
    for (int i : input.subset) {
      const std::size_t next = group.left_multiply(i, w);
      if (!in[next]) {
        in[next] = true;
        queue.push_back(next);
      }
    }
  }
  std::vector<std::size_t> members;
  for (std::size_t k = 0; k < group.size(); ++k)
    if (in[k]) members.push_back(k);
  return members;
}

std::vector<std::size_t> min_coset_reps(const WeylGroup& group, const std::vector<std::size_t>& subgroup) {
  std::vector<bool> assigned(group.size(), false);
  std::vector<std::size_t> reps;
  // Elements are in BFS order, so the first unassigned element of a coset
  // has minimal length within it.
  for (std::size_t w = 0; w < group.size(); ++w) {
    if (assigned[w]) continue;
    std::size_t shortest = 0;
    for (std::size_t u : subgroup) {
      const std::size_t member = group.multiply(w, u);
      if (assigned[member]) fail(ErrorKind::NonUniqueMinimum, "cosets overlap; subgroup is not closed");
      assigned[member] = true;
      if (group[member].length == group[w].length) ++shortest;
      if (group[member].length < group[w].length)
        fail(ErrorKind::NonUniqueMinimum, "coset element shorter than its BFS-first member");
    }
    if (shortest != 1)
      fail(ErrorKind::NonUniqueMinimum,
           "coset of " + word_to_string(group[w].reduced_word) + " has several elements of minimal length");
    reps.push_back(w);
  }
  return reps;
}

FlagGraph weak_order_graph(const WeylGroup& group, const std::vector<std::size_t>& reps) {
  FlagGraph fg;
  std::vector<VertexId> ids;
  std::unordered_map<std::size_t, VertexIndex> position;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    fg.reps.push_back(group[reps[k]]);
    ids.push_back(word_to_string(group[reps[k]].reduced_word));
    position.emplace(reps[k], k);
  }
  std::vector<DagRelation::Pair> pairs;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (int i = 1; i <= static_cast<int>(group.rank()); ++i) {
      const std::size_t w = group.left_multiply(i, reps[k]);
      auto it = position.find(w);
      if (it != position.end() && group[w].length > group[reps[k]].length) pairs.emplace_back(k, it->second);
    }
  }
  fg.relation = DagRelation(std::move(ids), std::move(pairs));
  return fg;
}

FlagGraph flag_graph(const CartanInput& input, std::size_t max_size) {
  const WeylGroup group = enumerate_group(input, max_size);
  return weak_order_graph(group, min_coset_reps(group, parabolic_subgroup(input, group)));
}

MultiGraph flag_amplified(const CartanInput& input, std::size_t max_size) {
  return amplify(flag_graph(input, max_size).relation);
}

nlohmann::json flag_graph_to_json(const FlagGraph& fg) {
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& e : fg.reps) reps.push_back({{"word", word_to_string(e.reduced_word)}, {"length", e.length}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [v, w] : fg.relation.pairs())
    edges.push_back({{"src", fg.relation.vertices()[v]}, {"dst", fg.relation.vertices()[w]}});
  return {{"vertices", fg.relation.vertices()}, {"edges", edges}, {"reps", reps}};
}

}  // namespace afcore
