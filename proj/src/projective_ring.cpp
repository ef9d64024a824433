#include "afcore/projective_ring.hpp"

#include <algorithm>
#include <cstdlib>

#include "afcore/dimension_group.hpp"
#include "afcore/error.hpp"
#include "afcore/graph.hpp"

namespace afcore {

PolyModX::PolyModX(std::size_t n) : coeffs_(n, 0) {
  if (n == 0) fail(ErrorKind::InvalidInput, "truncation order must be positive");
}

PolyModX::PolyModX(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(ErrorKind::InvalidInput, "truncation order must be positive");
}

bool PolyModX::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

PolyModX& PolyModX::operator+=(const PolyModX& other) {
  if (n() != other.n()) fail(ErrorKind::DimensionMismatch, "polynomials live in different rings");
  for (std::size_t i = 0; i < n(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PolyModX& PolyModX::operator-=(const PolyModX& other) {
  if (n() != other.n()) fail(ErrorKind::DimensionMismatch, "polynomials live in different rings");
  for (std::size_t i = 0; i < n(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PolyModX operator*(const PolyModX& a, const PolyModX& b) {
  if (a.n() != b.n()) fail(ErrorKind::DimensionMismatch, "polynomials live in different rings");
  PolyModX c(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; i + j < a.n(); ++j) c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return c;
}

PolyModX operator*(std::int64_t c, PolyModX a) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

std::string PolyModX::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const std::int64_t mag = std::llabs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (i == 0 || mag != 1) out += std::to_string(mag);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

PolyModX parse_poly(const std::string& text, std::size_t n) {
  const K0Element parsed = parse_k0_element(text);
  if (n != 0 && parsed.size() != n)
    fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(n) + " coefficients, got " +
                                           std::to_string(parsed.size()));
  return PolyModX(parsed.coeffs);
}

std::int64_t binomial(std::int64_t k, std::size_t i) {
  // Product form keeps every intermediate value an integer:
  // binom(k, j+1) = binom(k, j) * (k - j) / (j + 1).
  std::int64_t b = 1;
  for (std::size_t j = 0; j < i; ++j) b = b * (k - static_cast<std::int64_t>(j)) / static_cast<std::int64_t>(j + 1);
  return b;
}

PolyModX line_bundle_class(std::int64_t k, std::size_t n) {
  std::vector<std::int64_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = (i % 2 == 0 ? 1 : -1) * binomial(k, i);
  return PolyModX(std::move(c));
}

bool classical_cone_necessary(const PolyModX& p) { return p.is_zero() || p[0] >= 1; }

PolyModX expand(const ConeCertificate& cert, std::size_t n) {
  PolyModX sum(n);
  for (const auto& [k, c] : cert) {
    if (c < 0) fail(ErrorKind::InvalidInput, "certificate multiplicities must be non-negative");
    sum += c * line_bundle_class(k, n);
  }
  return sum;
}

namespace {

std::vector<std::int64_t> search_order(std::int64_t bound) {
  std::vector<std::int64_t> ks{0};
  for (std::int64_t k = 1; k <= bound; ++k) {
    ks.push_back(k);
    ks.push_back(-k);
  }
  return ks;
}

// Picks `remaining` classes from positions >= start of `ks` (with
// repetition, non-decreasing positions) adding up to `target`.
bool complete(const std::vector<PolyModX>& classes, const std::vector<std::int64_t>& ks, std::size_t start,
              std::int64_t remaining, const PolyModX& target, std::int64_t bound, std::vector<std::size_t>& chosen) {
  if (remaining == 0) return target.is_zero();
  // sum of k over the remaining classes equals -a_1 and lies in [-r K, r K];
  // for n >= 3 the remaining x^2 coefficient is a sum of k(k-1)/2 >= 0.
  if (target.n() >= 2 && std::llabs(target[1]) > remaining * bound) return false;
  for (std::size_t pos = start; pos < ks.size(); ++pos) {
    // Classes from here on have |k| >= |ks[pos]| and so x^2 coefficient at
    // least t(t-1)/2 each.
    const std::int64_t t = std::llabs(ks[pos]);
    if (target.n() >= 3 && target[2] < remaining * (t * (t - 1) / 2)) break;
    chosen.push_back(pos);
    if (complete(classes, ks, pos, remaining - 1, target - classes[pos], bound, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<ConeCertificate> cone_certificate_search(const PolyModX& p, std::int64_t bound) {
  if (bound < 1) fail(ErrorKind::InvalidInput, "search bound must be at least 1");
  if (p.is_zero()) return ConeCertificate{};
  const std::int64_t rank = p[0];
  if (rank <= 0) return std::nullopt;

  const std::vector<std::int64_t> ks = search_order(bound);
  std::vector<PolyModX> classes;
  for (auto k : ks) classes.push_back(line_bundle_class(k, p.n()));

  // One independent search per first class; the earliest success wins so
  // the answer does not depend on scheduling.
  std::vector<std::optional<std::vector<std::size_t>>> found(ks.size());
  const auto first_count = static_cast<std::ptrdiff_t>(ks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t first = 0; first < first_count; ++first) {
    std::vector<std::size_t> chosen{static_cast<std::size_t>(first)};
    if (complete(classes, ks, static_cast<std::size_t>(first), rank - 1, p - classes[first], bound, chosen))
      found[first] = std::move(chosen);
  }
  for (const auto& f : found) {
    if (!f) continue;
    ConeCertificate cert;
    for (auto pos : *f) ++cert[ks[pos]];
    return cert;
  }
  return std::nullopt;
}

std::optional<NonmembershipProof> nonmembership_proof(const PolyModX& p, std::int64_t bound) {
  if (p.is_zero()) return std::nullopt;
  if (p[0] <= 0)
    return NonmembershipProof{"rank", std::nullopt, std::nullopt,
                              "a non-zero positive class has constant term (rank) at least 1"};
  if (p.n() < 3) return std::nullopt;
  // Try m = 0 first so that a plain negative x^2 coefficient is reported as such.
  for (std::int64_t m : search_order(bound)) {
    const PolyModX product = p * line_bundle_class(m, p.n());
    if (product[2] < 0)
      return NonmembershipProof{"x2-product", m, product,
                                "p [L_" + std::to_string(m) + "] = " + product.to_string() +
                                    " has negative x^2 coefficient, but positive classes are closed under "
                                    "products with line bundles and have non-negative x^2 coefficient"};
  }
  if (p[2] == 0) {
    // Only [L_0] and [L_1] have zero x^2 coefficient, so p = c_0 + c_1 (1 - x).
    const std::int64_t c1 = -p[1];
    bool representable = c1 >= 0 && p[0] - c1 >= 0;
    for (std::size_t i = 2; i < p.n(); ++i) representable = representable && p[i] == 0;
    if (!representable)
      return NonmembershipProof{"x2-zero", std::nullopt, std::nullopt,
                                "x^2 coefficient 0 forces p = c_0 + c_1 (1 - x) with c_0, c_1 >= 0, which p is not"};
  }
  return std::nullopt;
}

ConeAnalysis analyze_cone(const PolyModX& p, std::int64_t bound) {
  ConeAnalysis a{p, classical_cone_necessary(p), cone_certificate_search(p, bound), std::nullopt};
  if (!a.certificate) a.proof = nonmembership_proof(p, bound);
  if (a.certificate && expand(*a.certificate, p.n()) != p)
    fail(ErrorKind::CertificateFailure, "cone certificate does not expand to the element");
  return a;
}

nlohmann::json cone_analysis_to_json(const ConeAnalysis& a) {
  nlohmann::json j;
  j["element"] = a.element.coeffs();
  j["polynomial"] = a.element.to_string();
  j["necessary"] = a.necessary;
  if (a.certificate) {
    nlohmann::json cert = nlohmann::json::array();
    for (const auto& [k, c] : *a.certificate) cert.push_back({{"k", k}, {"multiplicity", c}});
    j["certificate"] = cert;
  } else {
    j["certificate"] = nullptr;
  }
  if (a.proof) {
    nlohmann::json proof{{"argument", a.proof->argument}, {"explanation", a.proof->explanation}};
    if (a.proof->multiplier) proof["multiplier"] = *a.proof->multiplier;
    if (a.proof->product) proof["product"] = a.proof->product->coeffs();
    j["proof_of_nonmembership"] = proof;
  } else {
    j["proof_of_nonmembership"] = nullptr;
  }
  if (!a.certificate && !a.proof) j["status"] = "no certificate within bound";
  else j["status"] = a.certificate ? "member" : "not a member";
  return j;
}

EmbeddingRefutation refute_unital_order_embedding(std::size_t n) {
  if (n < 2) fail(ErrorKind::InvalidInput, "n must be at least 2");
  std::vector<VertexId> vs;
  std::vector<DagRelation::Pair> chain;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back(std::to_string(i + 1));
    if (i + 1 < n) chain.emplace_back(i, i + 1);
  }
  const DimensionGroup dg = k0_amplified(DagRelation(vs, chain));

  EmbeddingRefutation r;
  r.n = n;
  r.witness_projection.assign(n, 0);
  r.witness_projection[n - 1] = 1;
  r.projection_positive = cone_contains(dg, K0Element{r.witness_projection});
  r.witness_difference.assign(n, 1);
  r.witness_difference[n - 1] = -1;
  r.difference_positive = cone_contains(dg, K0Element{r.witness_difference});

  for (std::int64_t k = 0; k <= 2; ++k) {
    // 1 - k[P_n] is itself positive on the quantum side for every k.
    std::vector<std::int64_t> w(n, 1);
    w[n - 1] = 1 - k;
    if (!cone_contains(dg, K0Element{w})) fail(ErrorKind::CertificateFailure, "1 - k[P_n] should be positive");
    const std::int64_t ct1 = 1 - k;
    r.table.push_back({k, 1, ct1, ct1 >= 0});
    if (ct1 < 0 && !r.first_failure) r.first_failure = k;
    r.kernel_branch.push_back({k, 0, 1, true});
  }
  r.kernel_consistent = std::all_of(r.kernel_branch.begin(), r.kernel_branch.end(),
                                    [](const ConstantTermRow& row) { return row.admissible; });
  r.conclusion = "any dimension-group homomorphism kills [P_" + std::to_string(n) + "]";
  return r;
}

nlohmann::json refutation_to_json(const EmbeddingRefutation& r) {
  auto rows = [](const std::vector<ConstantTermRow>& t) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : t)
      out.push_back({{"k", row.k}, {"a0", row.a0}, {"constant_term", row.constant_term}, {"admissible", row.admissible}});
    return out;
  };
  return {{"n", r.n},
          {"witness_projection", {{"element", r.witness_projection}, {"positive", r.projection_positive}}},
          {"witness_difference", {{"element", r.witness_difference}, {"positive", r.difference_positive}}},
          {"constant_terms", rows(r.table)},
          {"first_failure_k", r.first_failure ? nlohmann::json(*r.first_failure) : nlohmann::json(nullptr)},
          {"kernel_branch", rows(r.kernel_branch)},
          {"kernel_consistent", r.kernel_consistent},
          {"conclusion", r.conclusion}};
}

}  // namespace afcore
