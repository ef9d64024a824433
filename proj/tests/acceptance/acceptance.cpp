// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "afcore/coxeter.hpp"
#include "afcore/dimension_group.hpp"
#include "afcore/error.hpp"
#include "afcore/graph.hpp"
#include "afcore/moves.hpp"
#include "afcore/projective_ring.hpp"
#include "afcore/relations.hpp"
#include "afcore/representations.hpp"

using namespace afcore;

namespace {

// Accumulates reasons for failure; an empty log means the criterion holds.
struct Log {
  std::vector<std::string> problems;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

template <class... Args>
std::string str(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

DagRelation chain(std::size_t n) {
  std::vector<VertexId> vs;
  std::vector<DagRelation::Pair> ps;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
  for (std::size_t i = 0; i + 1 < n; ++i) ps.emplace_back(i, i + 1);
  return DagRelation(vs, ps);
}

DagRelation random_dag(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(0.35);
  std::vector<VertexId> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<DagRelation::Pair> ps;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) ps.emplace_back(perm[i], perm[j]);
  return DagRelation(vs, ps);
}

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

void criterion1(Log& log) {
  const CartanInput in{cartan_matrix('A', 3), {1, 3}};
  const WeylGroup g = enumerate_group(in);
  log.require(g.size() == 24, str("|W(A3)| = ", g.size()));
  const FlagGraph fg = flag_graph(in);
  log.require(fg.reps.size() == 6, str(fg.reps.size(), " coset representatives"));

  const std::vector<std::string> words{"1", "s2", "s1.s2", "s3.s2", "s1.s3.s2", "s2.s3.s1.s2"};
  std::vector<std::size_t> label(words.size(), fg.reps.size());
  for (std::size_t w = 0; w < words.size(); ++w) {
    const IntMatrix m = g.evaluate(word_from_string(words[w]));
    for (std::size_t r = 0; r < fg.reps.size(); ++r)
      if (fg.reps[r].matrix == m) label[w] = r;
    log.require(label[w] < fg.reps.size(), "listed representative " + words[w] + " missing");
  }
  if (!log.problems.empty()) return;
  const std::vector<std::pair<int, int>> arrows{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}};
  std::set<DagRelation::Pair> expected;
  for (const auto& [a, b] : arrows) expected.emplace(label[a], label[b]);
  const std::set<DagRelation::Pair> got(fg.relation.pairs().begin(), fg.relation.pairs().end());
  log.require(got == expected, str("flag graph has ", got.size(), " arrows not matching the 6-arrow diagram"));
}

void criterion2(Log& log) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const DagRelation r = random_dag(rng, size(rng));
    const std::size_t n = r.vertex_count();
    const CoreResult res = k0_core(r, 20);
    const IntMatrix gamma = IntMatrix::identity(n) + r.adjacency();
    log.require(res.certificate.gamma == gamma, str("trial ", trial, ": Gamma differs"));
    log.require(power(gamma - IntMatrix::identity(n), static_cast<unsigned>(n)).is_zero(),
                str("trial ", trial, ": Gamma~^n != 0"));
    log.require(gamma * res.certificate.gamma_inverse == IntMatrix::identity(n),
                str("trial ", trial, ": Gamma Gamma^-1 != I"));
    IntMatrix gk = IntMatrix::identity(n);
    for (unsigned k = 1; k <= 20; ++k) {
      gk = gk * gamma;
      for (const auto& [v, w] : r.pairs())
        log.require(gk(v, w) >= static_cast<std::int64_t>(k), str("trial ", trial, ": (Gamma^", k, ") too small"));
    }
    log.require(res.certificate.checked_inequalities.size() == 20 * r.pairs().size(),
                str("trial ", trial, ": certificate records the wrong number of inequalities"));
    log.require(res.group == k0_amplified(r), str("trial ", trial, ": core and amplified groups differ"));
  }
}

void criterion3(Log& log) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const DimensionGroup dg = k0_amplified(chain(n));
    std::size_t checked = 0;
    for_each_vector(n, -2, 2, [&](const std::vector<std::int64_t>& x) {
      bool rule = true;
      for (auto c : x)
        if (c != 0) {
          rule = c > 0;
          break;
        }
      ++checked;
      if (cone_contains(dg, K0Element{x}) != rule) log.require(false, str("n = ", n, ": disagreement"));
    });
    std::size_t expected = 1;
    for (std::size_t i = 0; i < n; ++i) expected *= 5;
    log.require(checked == expected, str("n = ", n, ": only ", checked, " vectors"));
  }
}

void criterion4(Log& log) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) slots.emplace_back(i, j);
    // Every relation on n labeled points that is acyclic, reduced to its closure.
    std::set<std::vector<DagRelation::Pair>> closures;
    std::vector<VertexId> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
      std::vector<DagRelation::Pair> ps;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1) ps.push_back(slots[s]);
      try {
        closures.insert(transitive_closure(DagRelation(vs, ps)).pairs());
      } catch (const Error&) {
      }
    }
    std::vector<DimensionGroup> groups;
    for (const auto& ps : closures) groups.push_back(k0_amplified(DagRelation(vs, ps)));
    for (std::size_t a = 0; a < groups.size(); ++a)
      for (std::size_t b = a + 1; b < groups.size(); ++b) {
        bool separated = false;
        for_each_vector(n, -1, 1, [&](const std::vector<std::int64_t>& x) {
          separated = separated || cone_contains(groups[a], K0Element{x}) != cone_contains(groups[b], K0Element{x});
        });
        log.require(separated, str("n = ", n, ": closures ", a, " and ", b, " not separated"));
      }
    static const std::size_t posets[] = {0, 1, 3, 19, 219};
    log.require(closures.size() == posets[n], str("n = ", n, ": ", closures.size(), " closures"));
  }
}

void criterion5(Log& log) {
  const DagRelation hasse = grassmann_hasse_relation();
  const IntMatrix b{{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0},
                    {1, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 0}};
  const IntMatrix bt{{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
                     {0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 0}};
  const BMatrix start = b_matrix(add_loops(hasse));
  log.require(start.matrix() == bt, "B of the tilde graph differs from the displayed matrix");
  log.require(b_matrix(grassmann_graph()).matrix() == b, "B of L_{2,4} differs from the displayed matrix");
  const BMatrix end = replay(start, moves_from_json(nlohmann::json::parse("[[2,3],[2,4],[4,5],[5,6]]")));
  log.require(end.matrix() == b, "the move sequence does not reach B_{L_{2,4}}");
  log.require(!legal_row_add(grassmann_graph(), 2, 3), "row 3 -> row 4 reported legal");
}

void criterion6(Log& log) {
  const std::size_t n = 6;
  const RelationReport z = check_relations(plucker_rep(n), z_relations(plucker_adjacency(), 6, "Z"),
                                           ToeplitzSpace(4, n).interior(InteriorSpec{3}));
  const RelationReport y = check_relations(x6_generator_images(n), z_relations(plucker_adjacency(), 5, "Y"),
                                           ToeplitzSpace(3, n).interior(InteriorSpec{3}));
  for (const auto* rep : {&z, &y})
    for (const auto& e : rep->entries) {
      log.require(e.pass && e.residual == 0.0, "residual of " + e.name + " is not 0");
      log.require(e.interior_dim > 0, "empty interior for " + e.name);
    }
  log.require(z.entries.size() == 53 && y.entries.size() == 37, "unexpected number of relations");
}

void criterion7(Log& log) {
  const std::size_t n = 5;
  const CkFamily fam = grassmann_core_images(n);
  const RelationReport report = check_ck_family(fam, grassmann_graph(), 0, ToeplitzSpace(4, n).interior(InteriorSpec{2}));
  for (const auto& e : report.entries) log.require(e.pass, "CK check failed: " + e.name);
  const auto listed = grassmann_expected_projections(n);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& p = fam.projections.at(std::to_string(i + 1));
    log.require(p == listed[i], str("projection ", i + 1, " differs from the explicit list"));
    log.require(!p.is_zero(), str("projection ", i + 1, " is zero"));
    for (std::size_t j = 0; j < 6; ++j)
      if (j != i) log.require((p * fam.projections.at(std::to_string(j + 1))).is_zero(), str("P", i + 1, " P", j + 1, " != 0"));
  }
}

void criterion8(Log& log) {
  for (std::size_t r = 1; r <= 4; ++r) {
    const LensImages li = lens_iso_images(r, 4, 8);
    const RelationReport report = check_ck_family(li.family, li.teardrop_graph, 4, lens_interior(li, 4));
    for (const auto& e : report.entries) log.require(e.pass, str("r = ", r, ": ", e.name));
    for (std::size_t k = 1; k <= 3; ++k) {
      const RelationResult t = check_lens_telescoping(li, k);
      log.require(t.pass && t.interior_dim > 0, str("r = ", r, ": telescoping fails at k = ", k));
    }
  }
}

void criterion9(Log& log) {
  const RankOneSweep sweep = rank_one_sweep(2, 6);
  log.require(sweep.checked == 6561, str(sweep.checked, " pairs checked"));
  log.require(sweep.failures.empty(), str(sweep.failures.size(), " pairs differ from the matrix unit"));
  log.require(sweep.zero_case, "R for the zero tuples is not Z6 Z6*");
}

void criterion10(Log& log) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::int64_t k = -8; k <= 8; ++k)
      for (std::int64_t m = -8; m <= 8; ++m)
        log.require(line_bundle_class(k, n) * line_bundle_class(m, n) == line_bundle_class(k + m, n),
                    str("[L_", k, "][L_", m, "] != [L_", k + m, "] for n = ", n));
  for (std::int64_t a0 = 1; a0 <= 5; ++a0)
    for (std::int64_t a1 = -10; a1 <= 10; ++a1) {
      const PolyModX p(std::vector<std::int64_t>{a0, a1});
      const auto cert = cone_certificate_search(p, 10);
      log.require(cert && expand(*cert, 2) == p, str("no certificate for ", p.to_string()));
    }
  const PolyModX one_plus_x(std::vector<std::int64_t>{1, 1, 0});
  log.require(!cone_certificate_search(one_plus_x, 10), "1 + x has a certificate");
  const auto proof = nonmembership_proof(one_plus_x, 10);
  log.require(proof && proof->argument == "x2-product" && proof->product && proof->multiplier &&
                  *proof->product == one_plus_x * line_bundle_class(*proof->multiplier, 3) && (*proof->product)[2] < 0,
              "no x^2 non-membership proof for 1 + x");
  for (std::size_t n = 2; n <= 6; ++n) {
    const EmbeddingRefutation r = refute_unital_order_embedding(n);
    const DimensionGroup dg = k0_amplified(chain(n));
    log.require(r.projection_positive && cone_contains(dg, K0Element{r.witness_projection}), "[P_n] not positive");
    log.require(r.difference_positive && cone_contains(dg, K0Element{r.witness_difference}), "1 - 2[P_n] not positive");
    log.require(r.first_failure == 2, str("n = ", n, ": constant-term failure not at k = 2"));
    log.require(r.kernel_consistent, "kernel branch inconsistent");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria{
      {"Gr(2,4) flag relation and |W(A3)| = 24", criterion1},
      {"core certificates on 200 random relations", criterion2},
      {"cone predicate on total orders", criterion3},
      {"cone separates closures on <= 4 vertices", criterion4},
      {"Grassmann B-matrix move sequence", criterion5},
      {"Plucker and X6 relations at N = 6", criterion6},
      {"Grassmann core images form a CK family", criterion7},
      {"lens isomorphism images and telescoping", criterion8},
      {"rank-one operators at N = 6", criterion9},
      {"projective ring cone analysis", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Log log;
    try {
      criteria[i].second(log);
    } catch (const std::exception& e) {
      log.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = log.problems.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!ok) std::cout << " (" << log.problems.front() << (log.problems.size() > 1 ? ", ..." : "") << ")";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
