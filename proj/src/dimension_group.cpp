#include "afcore/dimension_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>
#include <tuple>

#include "afcore/error.hpp"
#include "afcore/kernels.hpp"

namespace afcore {

bool K0Element::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::int64_t c) { return c == 0; });
}

K0Element operator-(const K0Element& a, const K0Element& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "K0 elements of different rank");
  K0Element d{a.coeffs};
  for (std::size_t i = 0; i < d.size(); ++i) d.coeffs[i] -= b.coeffs[i];
  return d;
}

K0Element basis_element(std::size_t n, std::size_t v, std::int64_t k) {
  K0Element x{std::vector<std::int64_t>(n, 0)};
  x.coeffs.at(v) = k;
  return x;
}

K0Element parse_k0_element(const std::string& text, std::size_t expected) {
  K0Element x;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(start, end - start);
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    std::int64_t value = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      fail(ErrorKind::InvalidInput, "cannot parse integer '" + token + "' in element \"" + text + "\"");
    x.coeffs.push_back(value);
    start = end + 1;
  }
  if (expected > 0 && x.size() != expected)
    fail(ErrorKind::DimensionMismatch,
         "element has " + std::to_string(x.size()) + " coefficients, expected " + std::to_string(expected));
  return x;
}

std::string format_k0_element(const K0Element& x) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x.coeffs[i];
  return os.str();
}

DimensionGroup::DimensionGroup(std::vector<VertexId> vertices, IntMatrix closure)
    : vertices_(std::move(vertices)), closure_(std::move(closure)) {
  const std::size_t n = vertices_.size();
  if (closure_.rows() != n || closure_.cols() != n)
    fail(ErrorKind::DimensionMismatch, "closure matrix does not match the vertex count");
  for (std::size_t v = 0; v < n; ++v) {
    if (closure_(v, v) != 0) fail(ErrorKind::CyclicInput, "order is not irreflexive");
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t u = 0; u < n; ++u)
        if (closure_(v, w) && closure_(w, u) && !closure_(v, u))
          fail(ErrorKind::InvalidInput, "order matrix is not transitive");
  }
  unit_.coeffs.assign(n, 1);
}

DimensionGroup k0_amplified(const DagRelation& r) {
  return DimensionGroup(r.vertices(), kernels::parallel::reachability(r.adjacency()));
}

IntMatrix gamma_inverse_power(const DagRelation& r, unsigned k) {
  const std::size_t n = r.vertex_count();
  const IntMatrix neg_tilde = -r.adjacency();
  IntMatrix inverse = IntMatrix::identity(n);
  IntMatrix term = IntMatrix::identity(n);
  for (std::size_t j = 1; j < n; ++j) {
    term = term * neg_tilde;
    inverse += term;
  }
  return power(inverse, k);
}

CoreResult k0_core(const DagRelation& r, unsigned k_check) {
  const std::size_t n = r.vertex_count();
  const IntMatrix identity = IntMatrix::identity(n);
  const IntMatrix tilde = r.adjacency();

  CoreCertificate cert;
  cert.n = n;
  cert.gamma = adjacency_matrix(add_loops(r));
  if (cert.gamma != identity + tilde) fail(ErrorKind::CertificateFailure, "Gamma != I + Gamma~");

  // Nilpotency: smallest m with Gamma~^m = 0, which must not exceed n.
  IntMatrix tilde_power = identity;
  std::size_t order = 0;
  while (!tilde_power.is_zero()) {
    if (order == n) fail(ErrorKind::CertificateFailure, "Gamma~^n != 0");
    tilde_power = tilde_power * tilde;
    ++order;
  }
  cert.gamma_tilde_nilpotency_order = order;

  cert.gamma_inverse = gamma_inverse_power(r, 1);
  if (cert.gamma * cert.gamma_inverse != identity || cert.gamma_inverse * cert.gamma != identity)
    fail(ErrorKind::CertificateFailure, "Gamma * Gamma^-1 != I");

  IntMatrix gamma_k = identity;
  for (unsigned k = 1; k <= k_check; ++k) {
    gamma_k = gamma_k * cert.gamma;
    for (const auto& [v, w] : r.pairs()) {
      const auto value = gamma_k(v, w);
      if (value < static_cast<std::int64_t>(k))
        fail(ErrorKind::CertificateFailure, "(Gamma^k)_{v,w} < k for a pair of R");
      cert.checked_inequalities.push_back(CheckedInequality{v, w, k, value});
    }
  }

  // v < w iff some walk of positive length joins them; padding with loops
  // makes every such walk visible in Gamma^(n-1).
  const IntMatrix walks = power(cert.gamma, static_cast<unsigned>(n > 1 ? n - 1 : 1));
  IntMatrix order_from_walks(n, n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (v != w && walks(v, w) > 0) order_from_walks(v, w) = 1;

  DimensionGroup amplified = k0_amplified(r);
  if (order_from_walks != amplified.closure())
    fail(ErrorKind::CertificateFailure, "order read from Gamma disagrees with the transitive closure");
  return CoreResult{DimensionGroup(r.vertices(), std::move(order_from_walks)), std::move(cert)};
}

bool cone_contains(const DimensionGroup& dg, const K0Element& x) {
  const std::size_t n = dg.rank();
  if (x.size() != n) fail(ErrorKind::DimensionMismatch, "element rank does not match the group");
  for (std::size_t v = 0; v < n; ++v) {
    if (x.coeffs[v] == 0) continue;
    bool minimal = true;
    for (std::size_t u = 0; u < n && minimal; ++u) minimal = !(x.coeffs[u] != 0 && dg.precedes(u, v));
    if (minimal && x.coeffs[v] < 0) return false;
  }
  return true;
}

bool leq(const DimensionGroup& dg, const K0Element& x, const K0Element& y) {
  return cone_contains(dg, y - x);
}

K0Element q_class(const DagRelation& r, const VertexId& v, unsigned k) {
  if (k == 0) fail(ErrorKind::InvalidInput, "q_class needs k >= 1");
  const VertexIndex row = r.index_of(v);
  const IntMatrix m = gamma_inverse_power(r, k);
  auto span = m.row(row);
  return K0Element{std::vector<std::int64_t>(span.begin(), span.end())};
}

namespace {

struct VertexSignature {
  std::size_t below = 0;  // strict predecessors
  std::size_t above = 0;  // strict successors
  std::size_t height = 0; // longest chain starting here
  friend auto operator<=>(const VertexSignature&, const VertexSignature&) = default;
};

std::vector<VertexSignature> signatures(const DimensionGroup& dg) {
  const std::size_t n = dg.rank();
  std::vector<VertexSignature> sig(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      if (dg.precedes(v, w)) ++sig[v].above;
      if (dg.precedes(w, v)) ++sig[v].below;
    }
  // Longest chain: process vertices by increasing number of successors, so
  // every successor of v is handled before v.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return sig[a].above < sig[b].above; });
  for (std::size_t v : order)
    for (std::size_t w = 0; w < n; ++w)
      if (dg.precedes(v, w)) sig[v].height = std::max(sig[v].height, sig[w].height + 1);
  return sig;
}

}  // namespace

std::optional<std::vector<VertexIndex>> find_order_isomorphism(const DimensionGroup& a,
                                                               const DimensionGroup& b) {
  const std::size_t n = a.rank();
  if (b.rank() != n) return std::nullopt;
  const auto sig_a = signatures(a);
  const auto sig_b = signatures(b);
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<VertexIndex> image(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || sig_a[v] != sig_b[cand]) continue;
      bool consistent = true;
      for (std::size_t u = 0; u < v && consistent; ++u) {
        consistent = a.precedes(u, v) == b.precedes(image[u], cand) &&
                     a.precedes(v, u) == b.precedes(cand, image[u]);
      }
      if (!consistent) continue;
      image[v] = cand;
      used[cand] = true;
      if (extend(v + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

nlohmann::json dimension_group_to_json(const DimensionGroup& dg) {
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t v = 0; v < dg.rank(); ++v)
    for (std::size_t w = 0; w < dg.rank(); ++w)
      if (dg.precedes(v, w)) pairs.push_back({dg.vertices()[v], dg.vertices()[w]});
  return {{"vertices", dg.vertices()}, {"closure_pairs", pairs}, {"unit", dg.order_unit().coeffs}};
}

namespace {

nlohmann::json matrix_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto span = m.row(r);
    rows.push_back(std::vector<std::int64_t>(span.begin(), span.end()));
  }
  return rows;
}

}  // namespace

nlohmann::json certificate_to_json(const CoreCertificate& cert, const std::vector<VertexId>& vertices) {
  nlohmann::json checked = nlohmann::json::array();
  for (const auto& c : cert.checked_inequalities)
    checked.push_back({{"pair", {vertices[c.v], vertices[c.w]}}, {"k", c.k}, {"value", c.value}});
  return {{"n", cert.n},
          {"gamma", matrix_json(cert.gamma)},
          {"gamma_tilde_nilpotency_order", cert.gamma_tilde_nilpotency_order},
          {"gamma_inverse", matrix_json(cert.gamma_inverse)},
          {"checked_inequalities", checked}};
}

}  // namespace afcore
