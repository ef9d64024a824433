#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "afcore/graph.hpp"
#include "afcore/int_matrix.hpp"

namespace afcore {

// x = sum_v k_v [P_v], coefficients in declared vertex order.
struct K0Element {
  std::vector<std::int64_t> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
  bool is_zero() const;
  friend bool operator==(const K0Element&, const K0Element&) = default;
};

K0Element operator-(const K0Element& a, const K0Element& b);
K0Element basis_element(std::size_t n, std::size_t v, std::int64_t k = 1);

// "1,-7,4" <-> K0Element. Parsing checks the length when expected > 0.
K0Element parse_k0_element(const std::string& text, std::size_t expected = 0);
std::string format_k0_element(const K0Element& x);

// Ordered group Z^V with positive cone given intensionally by the strict
// order (the transitive closure of the relation) and order unit (1,...,1).
class DimensionGroup {
 public:
  DimensionGroup() = default;
  DimensionGroup(std::vector<VertexId> vertices, IntMatrix closure);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  std::size_t rank() const noexcept { return vertices_.size(); }
  // 0/1 matrix of the strict order: closure(v,w) == 1 iff v < w.
  const IntMatrix& closure() const noexcept { return closure_; }
  bool precedes(VertexIndex v, VertexIndex w) const { return closure_(v, w) != 0; }
  const K0Element& order_unit() const noexcept { return unit_; }

  friend bool operator==(const DimensionGroup&, const DimensionGroup&) = default;

 private:
  std::vector<VertexId> vertices_;
  IntMatrix closure_;
  K0Element unit_;
};

struct CheckedInequality {
  VertexIndex v = 0;
  VertexIndex w = 0;
  unsigned k = 0;
  std::int64_t value = 0;  // (Gamma^k)_{v,w}
};

// Matrix identities behind the identification of the two dimension groups,
// each verified when the certificate is built.
struct CoreCertificate {
  std::size_t n = 0;
  IntMatrix gamma;          // adjacency of E_R = I + adjacency of R
  std::size_t gamma_tilde_nilpotency_order = 0;
  IntMatrix gamma_inverse;  // sum_{k<n} (-Gamma~)^k
  std::vector<CheckedInequality> checked_inequalities;
};

struct CoreResult {
  DimensionGroup group;
  CoreCertificate certificate;
};

inline constexpr unsigned kDefaultInequalityCheck = 20;

// Dimension group of the amplified graph F_R.
DimensionGroup k0_amplified(const DagRelation& r);

// Dimension group of the gauge core of E_R with its certificate. The order
// is read off independently from the positive entries of Gamma^(n-1) and
// must coincide with the closure used by k0_amplified; any mismatch or
// failed identity raises CertificateFailure.
CoreResult k0_core(const DagRelation& r, unsigned k_check = kDefaultInequalityCheck);

// x is positive iff k_v > 0 at every minimal element of Supp(x).
bool cone_contains(const DimensionGroup& dg, const K0Element& x);
bool leq(const DimensionGroup& dg, const K0Element& x, const K0Element& y);

// [Q_{v,k}] = sum_w (Gamma^-k)_{v,w} [P_w].
K0Element q_class(const DagRelation& r, const VertexId& v, unsigned k);

// Gamma^-k for k >= 0.
IntMatrix gamma_inverse_power(const DagRelation& r, unsigned k);

// Vertex bijection a -> b (indexed by a's vertices) carrying the strict
// order of a exactly onto that of b, found by backtracking.
std::optional<std::vector<VertexIndex>> find_order_isomorphism(const DimensionGroup& a,
                                                               const DimensionGroup& b);

nlohmann::json dimension_group_to_json(const DimensionGroup& dg);
nlohmann::json certificate_to_json(const CoreCertificate& cert, const std::vector<VertexId>& vertices);

}  // namespace afcore
