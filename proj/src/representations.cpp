#include "afcore/representations.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include "afcore/error.hpp"

namespace afcore {

// ---------------------------------------------------------------------------
// Toeplitz tensor space

ToeplitzSpace::ToeplitzSpace(std::size_t factors, std::size_t cutoff)
    : factors_(factors), cutoff_(cutoff), dim_(1) {
  if (factors == 0 || cutoff == 0) fail(ErrorKind::InvalidInput, "Toeplitz space needs factors and a cutoff");
  for (std::size_t i = 0; i < factors; ++i) {
    dim_ *= cutoff;
    if (dim_ > kMaxPathSpaceDim) fail(ErrorKind::SizeExceeded, "truncated Toeplitz space is too large");
  }
}

std::size_t ToeplitzSpace::index(const std::vector<std::size_t>& m) const {
  if (m.size() != factors_) fail(ErrorKind::DimensionMismatch, "multi-index has the wrong length");
  std::size_t idx = 0;
  for (auto mi : m) {
    if (mi >= cutoff_) fail(ErrorKind::IndexOutOfRange, "index beyond the truncation");
    idx = idx * cutoff_ + mi;
  }
  return idx;
}

std::vector<std::size_t> ToeplitzSpace::multi_index(std::size_t idx) const {
  std::vector<std::size_t> m(factors_);
  for (std::size_t i = factors_; i-- > 0;) {
    m[i] = idx % cutoff_;
    idx /= cutoff_;
  }
  return m;
}

void ToeplitzSpace::check_factor(std::size_t factor) const {
  if (factor < 1 || factor > factors_) fail(ErrorKind::IndexOutOfRange, "no tensor factor " + std::to_string(factor));
}

GradedOperator ToeplitzSpace::T(std::size_t factor) const {
  check_factor(factor);
  std::size_t stride = 1;
  for (std::size_t i = factor; i < factors_; ++i) stride *= cutoff_;
  SparseMatrix t(dim_);
  for (std::size_t idx = 0; idx < dim_; ++idx)
    if ((idx / stride) % cutoff_ + 1 < cutoff_) t.add(idx + stride, idx, 1);
  return {std::move(t), 0};
}

GradedOperator ToeplitzSpace::Q(std::size_t factor) const {
  check_factor(factor);
  SparseMatrix q(dim_);
  for (std::size_t idx = 0; idx < dim_; ++idx)
    if (multi_index(idx)[factor - 1] == 0) q.add(idx, idx, 1);
  return {std::move(q), 0};
}

GradedOperator ToeplitzSpace::Q_perp(std::size_t factor) const {
  return GradedOperator::identity(dim_) - Q(factor);
}

GradedOperator ToeplitzSpace::matrix_unit(const std::vector<std::size_t>& n, const std::vector<std::size_t>& m) const {
  SparseMatrix u(dim_);
  u.add(index(n), index(m), 1);
  return {std::move(u), 0};
}

std::vector<bool> ToeplitzSpace::interior(const InteriorSpec& spec) const {
  std::vector<bool> mask(dim_, false);
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    const auto m = multi_index(idx);
    mask[idx] = std::all_of(m.begin(), m.end(), [&](std::size_t mi) { return mi + spec.budget + 1 <= cutoff_; });
  }
  return mask;
}

GradedOperator shift_degree(const GradedOperator& op, int k) {
  GradedOperator out(op.dim());
  for (const auto& [d, m] : op.blocks()) out += GradedOperator(m, d + k);
  return out;
}

// ---------------------------------------------------------------------------
// Path space

std::string to_string(const EdgeKey& e) {
  std::string s = e.src + "->" + e.dst;
  if (e.copy > 0) s += "#" + std::to_string(e.copy);
  return s;
}

OperatorMap CkFamily::symbols() const {
  OperatorMap out;
  for (const auto& [v, p] : projections) out.emplace("P_" + v, p);
  for (const auto& [e, s] : isometries) {
    std::string name = "S_" + e.src + "_" + e.dst;
    if (e.copy > 0) name += "_" + std::to_string(e.copy);
    out.emplace(name, s);
  }
  return out;
}

PathSpace::PathSpace(const MultiGraph& g, std::size_t max_length, std::size_t infinite_copies)
    : graph_(g), max_length_(max_length) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexIndex> edge_src, edge_dst;
  std::vector<std::vector<std::size_t>> incoming(n);
  for (const auto& e : g.edges()) {
    std::size_t copies = 0;
    if (e.mult.is_infinite()) {
      if (infinite_copies == 0)
        fail(ErrorKind::InfiniteMultiplicity, "infinite edges need a positive number of modelled copies");
      copies = infinite_copies;
    } else {
      copies = static_cast<std::size_t>(e.mult.count());
    }
    for (std::size_t c = 0; c < copies; ++c) {
      incoming[e.dst].push_back(edges_.size());
      edges_.push_back(EdgeKey{g.vertices()[e.src], g.vertices()[e.dst], c});
      edge_src.push_back(e.src);
      edge_dst.push_back(e.dst);
    }
  }

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> entries(edges_.size());
  for (VertexIndex v = 0; v < n; ++v) {
    lengths_.push_back(0);
    sources_.push_back(v);
  }
  std::size_t level_begin = 0;
  for (std::size_t len = 0; len < max_length; ++len) {
    const std::size_t level_end = lengths_.size();
    for (std::size_t walk = level_begin; walk < level_end; ++walk)
      for (std::size_t e : incoming[sources_[walk]]) {
        entries[e].emplace_back(lengths_.size(), walk);
        lengths_.push_back(len + 1);
        sources_.push_back(edge_src[e]);
        if (lengths_.size() > kMaxPathSpaceDim) fail(ErrorKind::SizeExceeded, "path space is too large");
      }
    level_begin = level_end;
  }

  shifts_.reserve(edges_.size());
  for (const auto& list : entries) {
    SparseMatrix s(lengths_.size());
    for (const auto& [row, col] : list) s.add(row, col, 1);
    shifts_.push_back(std::move(s));
  }
}

GradedOperator PathSpace::P(const VertexId& v) const {
  const VertexIndex vi = graph_.index_of(v);
  SparseMatrix p(dim());
  for (std::size_t walk = 0; walk < dim(); ++walk)
    if (sources_[walk] == vi) p.add(walk, walk, 1);
  return {std::move(p), 0};
}

GradedOperator PathSpace::S(const EdgeKey& e) const {
  auto it = std::find(edges_.begin(), edges_.end(), e);
  if (it == edges_.end()) fail(ErrorKind::UnboundSymbol, "no edge " + to_string(e) + " in the path space");
  return {shifts_[static_cast<std::size_t>(it - edges_.begin())], 1};
}

std::vector<bool> PathSpace::interior(const InteriorSpec& spec) const {
  std::vector<bool> mask(dim(), false);
  for (std::size_t walk = 0; walk < dim(); ++walk)
    mask[walk] = lengths_[walk] >= spec.min_length && lengths_[walk] + spec.budget <= max_length_;
  return mask;
}

CkFamily PathSpace::canonical_family() const {
  CkFamily family;
  family.dim = dim();
  for (const auto& v : graph_.vertices()) family.projections.emplace(v, P(v));
  for (std::size_t i = 0; i < edges_.size(); ++i) family.isometries.emplace(edges_[i], GradedOperator(shifts_[i], 1));
  return family;
}

PathSpace path_space_rep(const MultiGraph& g, std::size_t max_length, std::size_t infinite_copies) {
  return PathSpace(g, max_length, infinite_copies);
}

// ---------------------------------------------------------------------------
// Gr(2,4): Z-relations and the Plücker images

DagRelation grassmann_hasse_relation() {
  return DagRelation::from_named({"1", "2", "3", "4", "5", "6"},
                                 {{"1", "2"}, {"2", "3"}, {"2", "4"}, {"3", "5"}, {"4", "5"}, {"5", "6"}});
}

MultiGraph grassmann_graph() { return add_loops(transitive_closure(grassmann_hasse_relation())); }

IntMatrix plucker_adjacency() { return adjacency_matrix(grassmann_graph()); }

std::vector<Relation> z_relations(const IntMatrix& a, std::size_t n, const std::string& prefix) {
  if (a.rows() < n || a.cols() < n) fail(ErrorKind::DimensionMismatch, "adjacency smaller than the symbol count");
  auto sym = [&](std::size_t i) { return prefix + std::to_string(i + 1); };
  std::vector<Relation> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) == 0) out.push_back(parse_relation(sym(i) + " " + sym(j) + " = 0"));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.push_back(parse_relation(sym(i) + "* " + sym(j) + " = 0"));
  for (std::size_t i = 0; i < n; ++i) {
    std::string rhs;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) == 0) continue;
      if (!rhs.empty()) rhs += " + ";
      if (a(i, j) != 1) rhs += std::to_string(a(i, j)) + " ";
      rhs += sym(j) + " " + sym(j) + "*";
    }
    out.push_back(parse_relation(sym(i) + "* " + sym(i) + " = " + (rhs.empty() ? "0" : rhs)));
  }
  std::string total;
  for (std::size_t j = 0; j < n; ++j) total += (j ? " + " : "") + sym(j) + " " + sym(j) + "*";
  out.push_back(parse_relation(total + " = 1"));
  return out;
}

OperatorMap plucker_rep(std::size_t cutoff) {
  if (cutoff < 2) fail(ErrorKind::TruncationTooSmall, "Plücker images need a cutoff of at least 2");
  const ToeplitzSpace sp(4, cutoff);
  auto T = [&](std::size_t i) { return sp.T(i); };
  auto Q = [&](std::size_t i) { return sp.Q(i); };
  OperatorMap z;
  z["Z1"] = shift_degree(T(1), 1);
  z["Z2"] = shift_degree(Q(1) * T(2) * T(3), 1);
  z["Z3"] = shift_degree(Q(1) * T(2) * Q(3), 1);
  z["Z4"] = shift_degree(Q(1) * Q(2) * T(3), 1);
  z["Z5"] = shift_degree(Q(1) * Q(2) * Q(3) * T(4), 1);
  z["Z6"] = shift_degree(Q(1) * Q(2) * Q(3) * Q(4), 1);
  return z;
}

OperatorMap x6_generator_images(std::size_t cutoff) {
  if (cutoff < 2) fail(ErrorKind::TruncationTooSmall, "X6 images need a cutoff of at least 2");
  const ToeplitzSpace sp(3, cutoff);
  auto T = [&](std::size_t i) { return sp.T(i); };
  auto Q = [&](std::size_t i) { return sp.Q(i); };
  OperatorMap y;
  y["Y1"] = shift_degree(T(1), 1);
  y["Y2"] = shift_degree(Q(1) * T(2) * T(3), 1);
  y["Y3"] = shift_degree(Q(1) * T(2) * Q(3), 1);
  y["Y4"] = shift_degree(Q(1) * Q(2) * T(3), 1);
  y["Y5"] = shift_degree(Q(1) * Q(2) * Q(3), 1);
  return y;
}

CkFamily grassmann_core_images(std::size_t cutoff) {
  if (cutoff < 3) fail(ErrorKind::TruncationTooSmall, "Grassmann core images need a cutoff of at least 3");
  const OperatorMap z = plucker_rep(cutoff);
  const MultiGraph g = grassmann_graph();
  auto Z = [&](const VertexId& v) { return z.at("Z" + v); };
  CkFamily family;
  family.dim = z.at("Z1").dim();
  for (const auto& v : g.vertices()) family.projections.emplace(v, Z(v) * Z(v).adjoint());
  for (const auto& e : g.edges()) {
    const auto& i = g.vertices()[e.src];
    const auto& j = g.vertices()[e.dst];
    family.isometries.emplace(EdgeKey{i, j, 0}, Z(i) * Z(j) * Z(j).adjoint());
  }
  return family;
}

std::vector<GradedOperator> grassmann_expected_projections(std::size_t cutoff) {
  const ToeplitzSpace sp(4, cutoff);
  auto Q = [&](std::size_t i) { return sp.Q(i); };
  auto Qp = [&](std::size_t i) { return sp.Q_perp(i); };
  return {
      Qp(1),
      Q(1) * Qp(2) * Qp(3),
      Q(1) * Qp(2) * Q(3),
      Q(1) * Q(2) * Qp(3),
      Q(1) * Q(2) * Q(3) * Qp(4),
      Q(1) * Q(2) * Q(3) * Q(4),
  };
}

// ---------------------------------------------------------------------------
// Cuntz-Krieger checks

namespace {

struct PendingCheck {
  std::string name;
  std::function<std::pair<GradedOperator, GradedOperator>()> sides;
};

}  // namespace

RelationReport check_ck_family(const CkFamily& family, const MultiGraph& target, std::size_t n_cap,
                               const std::vector<bool>& interior) {
  const std::size_t dim = family.dim;
  if (interior.size() != dim) fail(ErrorKind::DimensionMismatch, "interior mask does not match the family");

  auto proj = [&](const VertexId& v) -> const GradedOperator& {
    auto it = family.projections.find(v);
    if (it == family.projections.end()) fail(ErrorKind::UnboundSymbol, "no projection for vertex " + v);
    if (it->second.dim() != dim) fail(ErrorKind::DimensionMismatch, "projection for " + v + " has the wrong size");
    return it->second;
  };

  // Edge copies the family has to provide.
  std::vector<EdgeKey> keys;
  std::vector<VertexIndex> key_src;
  for (const auto& e : target.edges()) {
    const std::size_t copies = e.mult.is_infinite() ? n_cap : static_cast<std::size_t>(e.mult.count());
    for (std::size_t c = 0; c < copies; ++c) {
      keys.push_back(EdgeKey{target.vertices()[e.src], target.vertices()[e.dst], c});
      key_src.push_back(e.src);
    }
  }
  std::vector<const GradedOperator*> iso;
  for (const auto& k : keys) {
    auto it = family.isometries.find(k);
    if (it == family.isometries.end()) fail(ErrorKind::UnboundSymbol, "no partial isometry for edge " + to_string(k));
    if (it->second.dim() != dim) fail(ErrorKind::DimensionMismatch, "edge " + to_string(k) + " has the wrong size");
    iso.push_back(&it->second);
  }
  for (const auto& v : target.vertices()) (void)proj(v);

  // Range projections S_e S_e*, shared by several checks.
  std::vector<GradedOperator> ranges(keys.size());
  const auto nk = static_cast<std::ptrdiff_t>(keys.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < nk; ++i) ranges[i] = *iso[i] * iso[i]->adjoint();

  std::vector<PendingCheck> checks;
  const auto& vs = target.vertices();
  for (const auto& v : vs) {
    checks.push_back({"P_" + v + " P_" + v + " = P_" + v, [&, v] {
                        return std::pair{proj(v) * proj(v), proj(v)};
                      }});
    checks.push_back({"P_" + v + "* = P_" + v, [&, v] { return std::pair{proj(v).adjoint(), proj(v)}; }});
  }
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const VertexId v = vs[a], w = vs[b];
      checks.push_back({"P_" + v + " P_" + w + " = 0", [&, v, w] {
                          return std::pair{proj(v) * proj(w), GradedOperator(dim)};
                        }});
    }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::string s = "S[" + to_string(keys[i]) + "]";
    checks.push_back({"CK1 " + s + "* " + s + " = P_" + keys[i].dst, [&, i] {
                        return std::pair{iso[i]->adjoint() * *iso[i], proj(keys[i].dst)};
                      }});
    checks.push_back({"CK2 P_" + keys[i].src + " " + s + " " + s + "* = " + s + " " + s + "*", [&, i] {
                        return std::pair{proj(keys[i].src) * ranges[i], ranges[i]};
                      }});
  }
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = 0; j < keys.size(); ++j) {
      if (i == j) continue;
      checks.push_back({"S[" + to_string(keys[i]) + "]* S[" + to_string(keys[j]) + "] = 0", [&, i, j] {
                          return std::pair{iso[i]->adjoint() * *iso[j], GradedOperator(dim)};
                        }});
    }
  const auto classes = classify_vertices(target);
  for (VertexIndex v = 0; v < vs.size(); ++v) {
    if (!classes[v].is_regular) continue;
    checks.push_back({"CK3 P_" + vs[v] + " = sum of ranges", [&, v] {
                        GradedOperator sum(dim);
                        for (std::size_t i = 0; i < keys.size(); ++i)
                          if (key_src[i] == v) sum += ranges[i];
                        return std::pair{proj(vs[v]), sum};
                      }});
  }

  RelationReport report;
  report.entries.resize(checks.size());
  std::vector<std::exception_ptr> errors(checks.size());
  const auto nc = static_cast<std::ptrdiff_t>(checks.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t c = 0; c < nc; ++c) {
    try {
      const auto [lhs, rhs] = checks[c].sides();
      report.entries[c] = check_identity(checks[c].name, lhs, rhs, interior);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return report;
}

// ---------------------------------------------------------------------------
// Lens spaces and teardrops

namespace {

DagRelation teardrop_relation(std::size_t weight) {
  std::vector<VertexId> vertices;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t j = 0; j <= weight; ++j) vertices.push_back(std::to_string(j));
  for (std::size_t i = 1; i <= weight; ++i) pairs.emplace_back("0", std::to_string(i));
  return DagRelation::from_named(vertices, pairs);
}

}  // namespace

LensImages lens_iso_images(std::size_t weight, std::size_t n_cap, std::size_t max_length) {
  if (weight < 1) fail(ErrorKind::InvalidInput, "lens weight must be at least 1");
  if (n_cap < 1) fail(ErrorKind::InvalidInput, "need at least one instance per infinite edge");
  if (max_length < n_cap + 2)
    fail(ErrorKind::TruncationTooSmall, "walk length " + std::to_string(max_length) + " is below n_cap + 2 = " +
                                            std::to_string(n_cap + 2));
  const DagRelation r = teardrop_relation(weight);
  LensImages out{weight, n_cap, add_loops(r), amplify(r), PathSpace(add_loops(r), max_length), {}};

  const PathSpace& sp = out.space;
  auto loop = [&](std::size_t j) { return sp.S(EdgeKey{std::to_string(j), std::to_string(j), 0}); };
  const GradedOperator l0 = loop(0);
  out.family.dim = sp.dim();
  for (std::size_t j = 0; j <= weight; ++j) out.family.projections.emplace(std::to_string(j), sp.P(std::to_string(j)));
  for (std::size_t i = 1; i <= weight; ++i) {
    const GradedOperator f = sp.S(EdgeKey{"0", std::to_string(i), 0});
    const GradedOperator li_star = loop(i).adjoint();
    GradedOperator l0_pow = GradedOperator::identity(sp.dim());
    GradedOperator li_star_pow = li_star;
    for (std::size_t n = 0; n < n_cap; ++n) {
      out.family.isometries.emplace(EdgeKey{"0", std::to_string(i), n}, l0_pow * f * li_star_pow);
      l0_pow = l0_pow * l0;
      li_star_pow = li_star_pow * li_star;
    }
  }
  return out;
}

std::vector<bool> lens_interior(const LensImages& images, std::size_t k) {
  return images.space.interior(InteriorSpec{0, std::max(images.n_cap, k)});
}

RelationResult check_lens_telescoping(const LensImages& images, std::size_t k) {
  if (k > images.n_cap) fail(ErrorKind::IndexOutOfRange, "telescoping depth exceeds the modelled instances");
  const auto& fam = images.family;
  GradedOperator lhs = fam.projections.at("0");
  for (std::size_t n = 0; n < k; ++n)
    for (std::size_t i = 1; i <= images.weight; ++i) {
      const auto& s = fam.isometries.at(EdgeKey{"0", std::to_string(i), n});
      lhs -= s * s.adjoint();
    }
  const GradedOperator l0 = images.space.S(EdgeKey{"0", "0", 0});
  const GradedOperator rhs = power(l0, static_cast<unsigned>(k)) * power(l0.adjoint(), static_cast<unsigned>(k));
  return check_identity("telescoping k=" + std::to_string(k), lhs, rhs, lens_interior(images, k));
}

// ---------------------------------------------------------------------------
// Rank-one operators

std::size_t tuple_degree(const IndexTuple& n) { return n[0] + std::max(n[1], n[2]) + n[3]; }

GradedOperator v_operator(const OperatorMap& z, const IndexTuple& n) {
  auto pw = [&](const char* sym, std::size_t k) { return power(z.at(sym), static_cast<unsigned>(k)); };
  if (n[1] <= n[2]) return pw("Z1", n[0]) * pw("Z2", n[1]) * pw("Z4", n[2] - n[1]) * pw("Z5", n[3]);
  return pw("Z1", n[0]) * pw("Z2", n[2]) * pw("Z3", n[1] - n[2]) * pw("Z5", n[3]);
}

namespace {

bool is_zero_tuple(const IndexTuple& n) { return n == IndexTuple{0, 0, 0, 0}; }

// Z_6^{deg m} (Z_6*)^{deg n}.
GradedOperator z6_middle(const GradedOperator& z6, std::size_t deg_m, std::size_t deg_n) {
  return power(z6, static_cast<unsigned>(deg_m)) * power(z6.adjoint(), static_cast<unsigned>(deg_n));
}

GradedOperator rank_one_from(const GradedOperator& vn, const GradedOperator& middle, const GradedOperator& vm_star,
                             const GradedOperator& z6, const IndexTuple& n, const IndexTuple& m) {
  if (is_zero_tuple(n) && is_zero_tuple(m)) return z6 * z6.adjoint();
  return vn * middle * vm_star;
}

void check_tuple(const IndexTuple& n, std::size_t cutoff) {
  for (auto x : n)
    if (x >= cutoff)
      fail(ErrorKind::TruncationTooSmall, "index " + std::to_string(x) + " does not fit below cutoff " +
                                              std::to_string(cutoff));
}

std::vector<std::size_t> as_vector(const IndexTuple& n) { return {n.begin(), n.end()}; }

}  // namespace

GradedOperator rank_one_operator(const OperatorMap& z, const IndexTuple& n, const IndexTuple& m) {
  const GradedOperator& z6 = z.at("Z6");
  return rank_one_from(v_operator(z, n), z6_middle(z6, tuple_degree(m), tuple_degree(n)), v_operator(z, m).adjoint(),
                       z6, n, m);
}

bool rank_one_check(const IndexTuple& n, const IndexTuple& m, std::size_t cutoff) {
  check_tuple(n, cutoff);
  check_tuple(m, cutoff);
  const OperatorMap z = plucker_rep(cutoff);
  const ToeplitzSpace sp(4, cutoff);
  return rank_one_operator(z, n, m) == sp.matrix_unit(as_vector(n), as_vector(m));
}

RankOneSweep rank_one_sweep(std::size_t max_entry, std::size_t cutoff) {
  if (max_entry >= cutoff) fail(ErrorKind::TruncationTooSmall, "entries must stay below the cutoff");
  const OperatorMap z = plucker_rep(cutoff);
  const ToeplitzSpace sp(4, cutoff);
  const GradedOperator& z6 = z.at("Z6");

  std::vector<IndexTuple> tuples;
  const std::size_t b = max_entry + 1;
  for (std::size_t t = 0; t < b * b * b * b; ++t)
    tuples.push_back({t / (b * b * b), (t / (b * b)) % b, (t / b) % b, t % b});

  std::vector<GradedOperator> v(tuples.size()), v_star(tuples.size());
  const auto nt = static_cast<std::ptrdiff_t>(tuples.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < nt; ++i) {
    v[i] = v_operator(z, tuples[i]);
    v_star[i] = v[i].adjoint();
  }

  const std::size_t max_deg = tuple_degree({max_entry, max_entry, max_entry, max_entry});
  std::vector<std::vector<GradedOperator>> middle(max_deg + 1);
  for (std::size_t dm = 0; dm <= max_deg; ++dm)
    for (std::size_t dn = 0; dn <= max_deg; ++dn) middle[dm].push_back(z6_middle(z6, dm, dn));

  RankOneSweep out;
  out.checked = tuples.size() * tuples.size();
  const auto total = static_cast<std::ptrdiff_t>(out.checked);
  std::vector<char> ok(out.checked, 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t p = 0; p < total; ++p) {
    const std::size_t i = static_cast<std::size_t>(p) / tuples.size();
    const std::size_t j = static_cast<std::size_t>(p) % tuples.size();
    const GradedOperator r = rank_one_from(v[i], middle[tuple_degree(tuples[j])][tuple_degree(tuples[i])], v_star[j], z6,
                                             tuples[i], tuples[j]);
    ok[p] = r == sp.matrix_unit(as_vector(tuples[i]), as_vector(tuples[j]));
  }
  for (std::size_t p = 0; p < out.checked; ++p)
    if (!ok[p]) out.failures.emplace_back(tuples[p / tuples.size()], tuples[p % tuples.size()]);
  const std::vector<std::size_t> zero(4, 0);
  out.zero_case = z6 * z6.adjoint() == sp.matrix_unit(zero, zero);
  return out;
}

}  // namespace afcore
