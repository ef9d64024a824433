#include "afcore/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "afcore/coxeter.hpp"
#include "afcore/dimension_group.hpp"
#include "afcore/error.hpp"
#include "afcore/graph.hpp"
#include "afcore/graph_json.hpp"
#include "afcore/moves.hpp"
#include "afcore/projective_ring.hpp"
#include "afcore/representations.hpp"

namespace afcore::cli {

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

bool looks_like_graph(const json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) return false;
  for (const auto& e : j["edges"])
    if (e.is_object() && (e.contains("mult") || (e.contains("src") && e.contains("dst") && e["src"] == e["dst"])))
      return true;
  return false;
}

// Relation files are used as they are; graph files (loops or
// multiplicities present) contribute their underlying relation.
DagRelation load_relation(const std::string& path) {
  const json j = read_json_file(path);
  return looks_like_graph(j) ? relation_of(graph_from_json(j)) : relation_from_json(j);
}

std::size_t max_group_size() {
  const char* env = std::getenv("AFCORE_MAX_GROUP");
  if (env == nullptr || *env == '\0') return kDefaultMaxGroupSize;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) fail(ErrorKind::InvalidInput, "AFCORE_MAX_GROUP must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::vector<int> parse_subset(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (auto v : parse_k0_element(text).coeffs) out.push_back(static_cast<int>(v));
  return out;
}

CartanInput cartan_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::InvalidInput, "Cartan input must be a JSON object");
  CartanInput input;
  if (j.contains("cartan")) {
    const auto& rows = j["cartan"];
    if (!rows.is_array() || rows.empty()) fail(ErrorKind::InvalidInput, "\"cartan\" must be a square integer matrix");
    input.cartan = IntMatrix(rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != rows.size())
        fail(ErrorKind::InvalidInput, "\"cartan\" must be a square integer matrix");
      for (std::size_t c = 0; c < rows.size(); ++c) {
        if (!rows[r][c].is_number_integer()) fail(ErrorKind::InvalidInput, "Cartan entries must be integers");
        input.cartan(r, c) = rows[r][c].get<std::int64_t>();
      }
    }
  } else if (j.contains("type") && j.contains("rank")) {
    const auto type = j["type"].get<std::string>();
    if (type.size() != 1) fail(ErrorKind::InvalidInput, "type must be one of A, B, C, D");
    input.cartan = cartan_matrix(type[0], j["rank"].get<std::size_t>());
  } else {
    fail(ErrorKind::InvalidInput, "Cartan input needs \"cartan\" or \"type\" and \"rank\"");
  }
  if (j.contains("subset")) {
    if (!j["subset"].is_array()) fail(ErrorKind::InvalidInput, "\"subset\" must be an array of node numbers");
    for (const auto& s : j["subset"]) {
      if (!s.is_number_integer()) fail(ErrorKind::InvalidInput, "subset entries must be integers");
      input.subset.push_back(s.get<int>());
    }
  }
  return input;
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<std::int64_t>(m.row(r).begin(), m.row(r).end()));
  return rows;
}

RelationResult flag_result(const std::string& name, bool pass) {
  RelationResult r;
  r.name = name;
  r.pass = pass;
  r.residual = pass ? 0.0 : 1.0;
  return r;
}

struct VerifyOptions {
  std::string target;
  std::size_t truncation = 0;
  std::size_t interior = 2;
  std::size_t ncap = 4;
  std::size_t weight = 1;
  std::size_t max_entry = 2;
  std::string format = "json";
};

json verify(const VerifyOptions& o, bool& pass) {
  auto cutoff = [&](std::size_t fallback) { return o.truncation ? o.truncation : fallback; };
  json out{{"target", o.target}};
  RelationReport report;

  if (o.target == "plucker" || o.target == "x6") {
    const bool plucker = o.target == "plucker";
    const std::size_t n = cutoff(6);
    const OperatorMap ops = plucker ? plucker_rep(n) : x6_generator_images(n);
    const ToeplitzSpace space(plucker ? 4 : 3, n);
    report = check_relations(ops, z_relations(plucker_adjacency(), plucker ? 6 : 5, plucker ? "Z" : "Y"),
                             space.interior(InteriorSpec{o.interior, 0}));
    out["truncation"] = n;
    out["interior_budget"] = o.interior;
  } else if (o.target == "grassmann-core") {
    const std::size_t n = cutoff(6);
    const CkFamily family = grassmann_core_images(n);
    const ToeplitzSpace space(4, n);
    report = check_ck_family(family, grassmann_graph(), 1, space.interior(InteriorSpec{o.interior, 0}));
    const auto expected = grassmann_expected_projections(n);
    const std::vector<bool> everywhere(space.dim(), true);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const std::string v = std::to_string(i + 1);
      const auto& p = family.projections.at(v);
      report.entries.push_back(check_identity("P_" + v + " equals its Q-form", p, expected[i], everywhere));
      report.entries.push_back(flag_result("P_" + v + " is non-zero", !p.is_zero()));
    }
    out["truncation"] = n;
    out["interior_budget"] = o.interior;
  } else if (o.target == "lens") {
    const std::size_t n = cutoff(8);
    const LensImages images = lens_iso_images(o.weight, o.ncap, n);
    report = check_ck_family(images.family, images.teardrop_graph, o.ncap, lens_interior(images, o.ncap));
    for (const auto& [key, s] : images.family.isometries)
      report.entries.push_back(flag_result("phi(S[" + to_string(key) + "]) has degree 0", s.degree() == 0));
    for (std::size_t k = 1; k <= o.ncap; ++k) report.entries.push_back(check_lens_telescoping(images, k));
    out["truncation"] = n;
    out["weight"] = o.weight;
    out["ncap"] = o.ncap;
  } else if (o.target == "rank-one") {
    const std::size_t n = cutoff(6);
    const RankOneSweep sweep = rank_one_sweep(o.max_entry, n);
    json failures = json::array();
    for (const auto& [a, b] : sweep.failures) failures.push_back({{"n", a}, {"m", b}});
    pass = sweep.failures.empty() && sweep.zero_case;
    out["truncation"] = n;
    out["max_entry"] = o.max_entry;
    out["checked"] = sweep.checked;
    out["failures"] = failures;
    out["zero_case"] = sweep.zero_case;
    out["all_pass"] = pass;
    return out;
  } else {
    fail(ErrorKind::InvalidInput, "unknown verify target " + o.target);
  }
  out.update(report_to_json(report));
  pass = report.all_pass();
  return out;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CertificateFailure:
    case ErrorKind::NonUniqueMinimum:
      return kExitVerificationFailed;
    default:
      return kExitInputError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and explicit formulas for amplified graph C*-algebras", "afcore"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::string relation_path, graph_path, element, a_path, b_path, from_path, to_path, input_path, type, subset;
  std::size_t rank = 0, max_depth = kDefaultMoveDepth, cp_n = 0;
  unsigned kcheck = kDefaultInequalityCheck;
  std::int64_t search_bound = 10;
  bool core = false, amplified = false, refute = false;
  VerifyOptions vo;

  auto* closure = app.add_subcommand("closure", "Transitive closure of a relation");
  auto* reduce = app.add_subcommand("reduce", "Transitive reduction of a relation");
  auto* loops = app.add_subcommand("loops", "E_R: add a loop at every vertex");
  auto* amplify_cmd = app.add_subcommand("amplify", "F_R: make every arrow infinite");
  for (auto* sc : {closure, reduce, loops, amplify_cmd})
    sc->add_option("--relation", relation_path, "Relation or graph JSON")->required();

  auto* k0 = app.add_subcommand("k0", "Dimension group of F_R, optionally with the core certificate");
  k0->add_option("--relation", relation_path, "Relation or graph JSON")->required();
  k0->add_flag("--core", core, "Also build and verify the certificate for the core of E_R");
  k0->add_option("--kcheck", kcheck, "Largest k in the (Gamma^k)_{v,w} >= k checks");

  auto* cone = app.add_subcommand("cone", "Positive-cone membership");
  auto* cone_graph = cone->add_option("--graph", graph_path, "Graph JSON");
  auto* cone_rel = cone->add_option("--relation", relation_path, "Relation JSON");
  cone_graph->excludes(cone_rel);
  cone->add_option("--element", element, "Comma-separated coefficients")->required();

  auto* iso = app.add_subcommand("iso", "Order isomorphism between two dimension groups");
  iso->add_option("--a", a_path, "Relation or graph JSON")->required();
  iso->add_option("--b", b_path, "Relation or graph JSON")->required();

  auto* flag = app.add_subcommand("flag", "Flag-manifold relation from Cartan data");
  auto* flag_type = flag->add_option("--type", type, "Dynkin type A, B, C or D");
  flag->add_option("--rank", rank, "Rank");
  flag->add_option("--subset", subset, "Comma-separated node numbers of S");
  auto* flag_input = flag->add_option("--input", input_path, "Cartan JSON");
  flag_type->excludes(flag_input);
  flag->add_flag("--amplified", amplified, "Emit the amplified graph instead");

  auto* moves = app.add_subcommand("moves", "Search for B-matrix row additions between two graphs");
  moves->add_option("--from", from_path, "Graph JSON")->required();
  moves->add_option("--to", to_path, "Graph JSON")->required();
  moves->add_option("--max-depth", max_depth, "Largest sequence length tried");

  auto* verify_cmd = app.add_subcommand("verify", "Check explicit operator formulas in truncated representations");
  verify_cmd->add_option("--target", vo.target, "Which formulas")
      ->required()
      ->check(CLI::IsMember({"plucker", "x6", "lens", "grassmann-core", "rank-one"}));
  verify_cmd->add_option("--truncation", vo.truncation, "Cutoff N (per factor, or walk length for lens)");
  verify_cmd->add_option("--interior", vo.interior, "Interior budget d (Toeplitz targets)");
  verify_cmd->add_option("--ncap", vo.ncap, "Modelled copies of each infinite edge (lens)");
  verify_cmd->add_option("--weight", vo.weight, "Weight r of the lens space");
  verify_cmd->add_option("--max-entry", vo.max_entry, "Largest tuple entry (rank-one)");
  verify_cmd->add_option("--format", vo.format, "Output format")->check(CLI::IsMember({"json"}));

  auto* cp = app.add_subcommand("cp", "Positive cone of K^0(CP^{n-1})");
  cp->add_option("--n", cp_n, "Truncation order n")->required();
  cp->add_option("--element", element, "Comma-separated coefficients a_0,...,a_{n-1}");
  cp->add_option("--search-bound", search_bound, "Largest |k| of the line bundles tried");
  cp->add_flag("--refute", refute, "Emit the witness against a unital order embedding");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "afcore: " << e.what() << "\n";
    return kExitInputError;
  }

  json result;
  int code = kExitOk;
  try {
    if (closure->parsed()) {
      result = relation_to_json(transitive_closure(load_relation(relation_path)));
    } else if (reduce->parsed()) {
      result = relation_to_json(transitive_reduction(load_relation(relation_path)));
    } else if (loops->parsed()) {
      result = graph_to_json(add_loops(load_relation(relation_path)));
    } else if (amplify_cmd->parsed()) {
      result = graph_to_json(amplify(load_relation(relation_path)));
    } else if (k0->parsed()) {
      const DagRelation r = load_relation(relation_path);
      if (core) {
        const CoreResult cr = k0_core(r, kcheck);
        if (!(cr.group == k0_amplified(r))) fail(ErrorKind::CertificateFailure, "core and amplified groups differ");
        result = {{"group", dimension_group_to_json(cr.group)},
                  {"certificate", certificate_to_json(cr.certificate, r.vertices())}};
      } else {
        result = {{"group", dimension_group_to_json(k0_amplified(r))}};
      }
    } else if (cone->parsed()) {
      if (graph_path.empty() && relation_path.empty())
        fail(ErrorKind::InvalidInput, "cone needs --graph or --relation");
      const DagRelation r = graph_path.empty() ? load_relation(relation_path)
                                               : relation_of(graph_from_json(read_json_file(graph_path)));
      const DimensionGroup dg = k0_amplified(r);
      result = {{"member", cone_contains(dg, parse_k0_element(element, dg.rank()))}};
    } else if (iso->parsed()) {
      const DimensionGroup a = k0_amplified(load_relation(a_path));
      const DimensionGroup b = k0_amplified(load_relation(b_path));
      const auto bij = find_order_isomorphism(a, b);
      result = {{"isomorphic", bij.has_value()}};
      if (bij) {
        json map = json::object();
        for (std::size_t i = 0; i < bij->size(); ++i) map[a.vertices()[i]] = b.vertices()[(*bij)[i]];
        result["bijection"] = map;
      } else {
        result["bijection"] = nullptr;
      }
    } else if (flag->parsed()) {
      CartanInput input;
      if (!input_path.empty()) {
        input = cartan_from_json(read_json_file(input_path));
      } else {
        if (type.size() != 1 || rank == 0) fail(ErrorKind::InvalidInput, "flag needs --type and --rank, or --input");
        input.cartan = cartan_matrix(type[0], rank);
        input.subset = parse_subset(subset);
      }
      result = amplified ? graph_to_json(flag_amplified(input, max_group_size()))
                         : flag_graph_to_json(flag_graph(input, max_group_size()));
    } else if (moves->parsed()) {
      const MultiGraph from = graph_from_json(read_json_file(from_path));
      const MultiGraph to = graph_from_json(read_json_file(to_path));
      const BMatrix before = b_matrix(from);
      const BMatrix target = b_matrix(to);
      result = {{"before", matrix_to_json(before.matrix())}, {"target", matrix_to_json(target.matrix())}};
      if (const auto seq = find_move_sequence(from, to, max_depth)) {
        result["moves"] = moves_to_json(*seq);
        result["after"] = matrix_to_json(replay(before, *seq).matrix());
      } else {
        result["moves"] = nullptr;
        result["after"] = nullptr;
        err << "afcore: no move sequence within depth " << max_depth << "\n";
        code = kExitVerificationFailed;
      }
    } else if (verify_cmd->parsed()) {
      bool pass = false;
      result = verify(vo, pass);
      if (!pass) {
        err << "afcore: some checks failed\n";
        code = kExitVerificationFailed;
      }
    } else if (cp->parsed()) {
      if (refute) {
        result = refutation_to_json(refute_unital_order_embedding(cp_n));
      } else {
        if (element.empty()) fail(ErrorKind::InvalidInput, "cp needs --element or --refute");
        result = cone_analysis_to_json(analyze_cone(parse_poly(element, cp_n), search_bound));
      }
    }
  } catch (const Error& e) {
    err << "afcore: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const json::exception& e) {
    err << "afcore: invalid JSON input: " << e.what() << "\n";
    return kExitInputError;
  }

  out << result.dump(pretty ? 2 : -1) << "\n";
  return code;
}

}  // namespace afcore::cli
