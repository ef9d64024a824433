#include "afcore/relations.hpp"

#include <cctype>
#include <sstream>

#include "afcore/error.hpp"

namespace afcore {

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& text) : text_(text) {}

  Polynomial parse() {
    Polynomial p;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      Term t = parse_term();
      t.coeff *= sign;
      if (!is_zero(t.coeff)) p.terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == text_.size()) break;
      const char c = text_[pos_++];
      if (c == '+') sign = 1;
      else if (c == '-') sign = -1;
      else error("unexpected '" + std::string(1, c) + "'");
    }
    return p;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::InvalidInput, "cannot parse polynomial \"" + text_ + "\": " + what);
  }

  unsigned parse_uint() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected a number");
    if (pos_ - start > 9) error("number too large");
    return static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
  }

  Term parse_term() {
    Term t;
    bool any = false;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= Rational(parse_uint());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        Factor f;
        const std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        f.symbol = text_.substr(start, pos_ - start);
        for (;;) {
          if (peek() == '*') {
            f.adjoint = !f.adjoint;
            ++pos_;
          } else if (peek() == '^') {
            ++pos_;
            f.power *= parse_uint();
          } else {
            break;
          }
        }
        t.factors.push_back(std::move(f));
      } else {
        break;
      }
      any = true;
    }
    if (!any) error("empty term");
    return t;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

}  // namespace

Polynomial parse_polynomial(const std::string& text) { return PolyParser(text).parse(); }

Relation parse_relation(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos)
    fail(ErrorKind::InvalidInput, "relation must contain exactly one '=': " + text);
  return Relation{text, parse_polynomial(text.substr(0, eq)), parse_polynomial(text.substr(eq + 1))};
}

std::string to_string(const Polynomial& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const Term& t = p.terms[i];
    Rational c = t.coeff;
    if (is_negative(c)) {
      out += i == 0 ? "-" : " - ";
      c = -c;
    } else if (i > 0) {
      out += " + ";
    }
    std::string body;
    for (const auto& f : t.factors) {
      if (!body.empty()) body += ' ';
      body += f.symbol;
      if (f.adjoint) body += '*';
      if (f.power != 1) body += '^' + std::to_string(f.power);
    }
    if (body.empty()) out += format_rational(c);
    else if (is_one(c)) out += body;
    else out += format_rational(c) + ' ' + body;
  }
  return out;
}

Evaluation evaluate(const Polynomial& p, const OperatorMap& ops, std::size_t dim) {
  Evaluation ev{GradedOperator(dim), std::nullopt};
  for (const Term& t : p.terms) {
    GradedOperator value = GradedOperator::identity(dim);
    int degree = 0;
    bool vanishes = false;
    for (const Factor& f : t.factors) {
      auto it = ops.find(f.symbol);
      if (it == ops.end()) fail(ErrorKind::UnboundSymbol, "symbol '" + f.symbol + "' is not bound");
      if (it->second.dim() != dim) fail(ErrorKind::DimensionMismatch, "symbol '" + f.symbol + "' has the wrong size");
      if (it->second.is_zero()) {
        vanishes = true;
        continue;
      }
      const auto d = it->second.degree();
      if (!d) fail(ErrorKind::DegreeMismatch, "symbol '" + f.symbol + "' is not homogeneous");
      const GradedOperator letter = f.adjoint ? it->second.adjoint() : it->second;
      degree += (f.adjoint ? -*d : *d) * static_cast<int>(f.power);
      if (!vanishes) value = value * power(letter, f.power);
    }
    if (vanishes) continue;
    if (ev.degree && *ev.degree != degree)
      fail(ErrorKind::DegreeMismatch, "terms of degree " + std::to_string(*ev.degree) + " and " +
                                          std::to_string(degree) + " are summed");
    ev.degree = degree;
    ev.value += value.scaled(t.coeff);
  }
  return ev;
}

bool RelationReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

void RelationReport::append(const RelationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

RelationResult check_identity(const std::string& name, const GradedOperator& lhs, const GradedOperator& rhs,
                              const std::vector<bool>& interior) {
  if (lhs.dim() != rhs.dim() || interior.size() != lhs.dim())
    fail(ErrorKind::DimensionMismatch, "relation sides or interior mask differ in size");
  RelationResult r;
  r.name = name;
  r.degree = lhs.is_zero() ? rhs.degree() : lhs.degree();
  for (bool b : interior) r.interior_dim += b ? 1 : 0;
  const GradedOperator diff = (lhs - rhs).restrict_columns(interior);
  r.pass = diff.is_zero();
  r.residual = r.pass ? 0.0 : diff.operator_norm();
  return r;
}

RelationResult check_relation(const Relation& rel, const OperatorMap& ops, const std::vector<bool>& interior) {
  const std::size_t dim = interior.size();
  const Evaluation lhs = evaluate(rel.lhs, ops, dim);
  const Evaluation rhs = evaluate(rel.rhs, ops, dim);
  if (lhs.degree && rhs.degree && *lhs.degree != *rhs.degree)
    fail(ErrorKind::DegreeMismatch, "sides of '" + rel.name + "' have different degrees");
  RelationResult r = check_identity(rel.name, lhs.value, rhs.value, interior);
  r.degree = lhs.degree ? lhs.degree : rhs.degree;
  return r;
}

RelationReport check_relations(const OperatorMap& ops, const std::vector<Relation>& relations,
                               const std::vector<bool>& interior) {
  RelationReport report;
  report.entries.resize(relations.size());
  // Relations are independent; errors are rethrown in order after the loop.
  std::vector<std::exception_ptr> errors(relations.size());
  const auto n = static_cast<std::ptrdiff_t>(relations.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      report.entries[i] = check_relation(relations[i], ops, interior);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return report;
}

nlohmann::json report_to_json(const RelationReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"name", e.name},
                       {"degree", e.degree ? nlohmann::json(*e.degree) : nlohmann::json(nullptr)},
                       {"interior_dim", e.interior_dim},
                       {"residual", e.residual},
                       {"pass", e.pass}});
  }
  return {{"relations", entries}, {"all_pass", report.all_pass()}};
}

}  // namespace afcore
