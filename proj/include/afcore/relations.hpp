#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "afcore/graded_operator.hpp"

namespace afcore {

using OperatorMap = std::map<std::string, GradedOperator>;

// A letter of a monomial: a bound symbol, possibly starred, raised to a
// power.
struct Factor {
  std::string symbol;
  bool adjoint = false;
  unsigned power = 1;
};

struct Term {
  Rational coeff{1};
  std::vector<Factor> factors;  // empty means the identity
};

// Formal *-polynomial. Products are written by juxtaposition, a trailing
// `*` takes the adjoint, `^k` a power: "Z1* Z1 - 2 Z2 Z2* + 1".
struct Polynomial {
  std::vector<Term> terms;  // empty means 0
};

struct Relation {
  std::string name;
  Polynomial lhs;
  Polynomial rhs;
};

Polynomial parse_polynomial(const std::string& text);
// "lhs = rhs"; the text doubles as the relation name.
Relation parse_relation(const std::string& text);
std::string to_string(const Polynomial& p);

// Evaluates a polynomial; every term must have a single gauge degree
// (UnboundSymbol, DegreeMismatch otherwise). Returns the operator and its
// common degree (unset when every term vanishes identically).
struct Evaluation {
  GradedOperator value;
  std::optional<int> degree;
};
Evaluation evaluate(const Polynomial& p, const OperatorMap& ops, std::size_t dim);

struct RelationResult {
  std::string name;
  std::optional<int> degree;
  std::size_t interior_dim = 0;
  double residual = 0.0;
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationResult> entries;
  bool all_pass() const;
  void append(const RelationReport& other);
};

// Residual of a relation is the norm of (lhs - rhs) on the basis vectors
// selected by `interior`; it passes iff that restriction is exactly zero.
RelationResult check_relation(const Relation& rel, const OperatorMap& ops, const std::vector<bool>& interior);
RelationReport check_relations(const OperatorMap& ops, const std::vector<Relation>& relations,
                               const std::vector<bool>& interior);

// Same check for an identity already evaluated to operators.
RelationResult check_identity(const std::string& name, const GradedOperator& lhs, const GradedOperator& rhs,
                              const std::vector<bool>& interior);

nlohmann::json report_to_json(const RelationReport& report);

}  // namespace afcore
