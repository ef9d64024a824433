#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace afcore {

// Element a_0 + a_1 x + ... + a_{n-1} x^{n-1} of Z[x]/(x^n).
class PolyModX {
 public:
  explicit PolyModX(std::size_t n);
  explicit PolyModX(std::vector<std::int64_t> coeffs);

  std::size_t n() const noexcept { return coeffs_.size(); }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  bool is_zero() const;

  PolyModX& operator+=(const PolyModX& other);
  PolyModX& operator-=(const PolyModX& other);
  friend PolyModX operator+(PolyModX a, const PolyModX& b) { return a += b; }
  friend PolyModX operator-(PolyModX a, const PolyModX& b) { return a -= b; }
  friend PolyModX operator*(const PolyModX& a, const PolyModX& b);
  friend PolyModX operator*(std::int64_t c, PolyModX a);
  friend bool operator==(const PolyModX&, const PolyModX&) = default;

  std::string to_string() const;  // "1 + x - 3x^2"

 private:
  std::vector<std::int64_t> coeffs_;
};

// "1,1,0" with n = 3 (n = 0 takes the length of the list).
PolyModX parse_poly(const std::string& text, std::size_t n = 0);

// Generalized binomial coefficient k(k-1)...(k-i+1)/i!, any integer k.
std::int64_t binomial(std::int64_t k, std::size_t i);

// [L_k] = sum_i binom(k,i) (-x)^i.
PolyModX line_bundle_class(std::int64_t k, std::size_t n);

// p = 0 or a_0 >= 1.
bool classical_cone_necessary(const PolyModX& p);

// Non-negative multiplicities c_k of [L_k].
using ConeCertificate = std::map<std::int64_t, std::int64_t>;

PolyModX expand(const ConeCertificate& cert, std::size_t n);

// Searches sum_k c_k [L_k] = p over |k| <= bound with sum c_k = a_0. Line
// bundles are tried in the order 0, 1, -1, 2, -2, ... so the simplest
// certificate is returned first.
std::optional<ConeCertificate> cone_certificate_search(const PolyModX& p, std::int64_t bound);

// A reason why p cannot be positive. "rank": p != 0 with a_0 <= 0.
// "x2-product": p [L_m] has negative x^2 coefficient, impossible since
// positive classes are closed under products with line bundles and have
// a_2 >= 0. "x2-zero": a_2 = 0 forces p = c_0 + c_1 [L_1] with c_i >= 0.
struct NonmembershipProof {
  std::string argument;
  std::optional<std::int64_t> multiplier;  // m for "x2-product"
  std::optional<PolyModX> product;         // p [L_m]
  std::string explanation;
};

std::optional<NonmembershipProof> nonmembership_proof(const PolyModX& p, std::int64_t bound);

struct ConeAnalysis {
  PolyModX element;
  bool necessary = false;
  std::optional<ConeCertificate> certificate;
  std::optional<NonmembershipProof> proof;
};

ConeAnalysis analyze_cone(const PolyModX& p, std::int64_t bound);
nlohmann::json cone_analysis_to_json(const ConeAnalysis& a);

// A positive unital map K_0(C(CP^{n-1}_q)) -> K^0(CP^{n-1}) sends [P_n] to
// a_0 + O(x). The elements 1 - k[P_n] are positive for every k >= 0, so
// their images have constant term 1 - k a_0 >= 0, which forces a_0 = 0.
struct ConstantTermRow {
  std::int64_t k = 0;
  std::int64_t a0 = 0;
  std::int64_t constant_term = 0;  // 1 - k a_0
  bool admissible = false;         // constant term >= 0
};

struct EmbeddingRefutation {
  std::size_t n = 0;
  std::vector<std::int64_t> witness_projection;  // [P_n]
  bool projection_positive = false;
  std::vector<std::int64_t> witness_difference;   // 1 - 2[P_n]
  bool difference_positive = false;
  std::vector<ConstantTermRow> table;             // a_0 = 1, k = 0, 1, 2
  std::optional<std::int64_t> first_failure;      // smallest failing k
  std::vector<ConstantTermRow> kernel_branch;     // a_0 = 0
  bool kernel_consistent = false;
  std::string conclusion;
};

EmbeddingRefutation refute_unital_order_embedding(std::size_t n);
nlohmann::json refutation_to_json(const EmbeddingRefutation& r);

}  // namespace afcore
