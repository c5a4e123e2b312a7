#include "forge/cli.hpp"

#include <algorithm>
#include <set>

#include "forge/analysis.hpp"
#include "forge/graded.hpp"
#include "forge/groebner.hpp"
#include "forge/morphism.hpp"
#include "forge/poly_text.hpp"

namespace forge {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  raise(Errc::bad_input, path + ": " + msg);
}

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) schema_error(path, "unknown field \"" + key + "\"");
}

const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) schema_error(path, "missing field \"" + key + "\"");
  return j.at(key);
}

int require_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

std::string require_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

Scalar scalar_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(Rat(static_cast<long>(j.get<std::int64_t>())));
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  schema_error(path, "expected an integer or a scalar string like \"2/3\" or \"q\"");
}

Rat rational_from_json(const Json& j, const std::string& path) {
  Scalar s = scalar_from_json(j, path);
  if (!s.is_rational()) schema_error(path, "expected a rational value");
  return s.rational();
}

SkewParamMatrix lambda_from_json(const Json& j, int n, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    schema_error(path, "expected an " + std::to_string(n) + "-row matrix");
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < n; ++i) {
    const Json& row = j.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      schema_error(path, "row " + std::to_string(i) + " must have " + std::to_string(n) +
                             " entries");
    std::vector<Scalar> out;
    for (int k = 0; k < n; ++k)
      out.push_back(scalar_from_json(row.at(static_cast<size_t>(k)),
                                     path + "[" + std::to_string(i) + "][" + std::to_string(k) +
                                         "]"));
    rows.push_back(std::move(out));
  }
  return SkewParamMatrix::from_entries(rows);
}

IntMatrix int_matrix_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a nonempty matrix");
  std::vector<std::vector<std::int64_t>> rows;
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& row = j.at(i);
    if (!row.is_array()) schema_error(path, "expected matrix rows");
    std::vector<std::int64_t> out;
    for (size_t k = 0; k < row.size(); ++k) {
      if (!row.at(k).is_number_integer())
        schema_error(path, "matrix entries must be integers");
      out.push_back(row.at(k).get<std::int64_t>());
    }
    rows.push_back(std::move(out));
  }
  return IntMatrix::from_rows(rows);
}

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

}  // namespace

PoissonStructure parse_structure(const Json& j, const std::string& path) {
  std::string kind = require_string(require(j, "kind", path), path + ".kind");
  if (kind == "torus" || kind == "skewpoly") {
    check_keys(j, {"kind", "n", "lambda"}, path);
    int n = require_int(require(j, "n", path), path + ".n");
    if (n < 1 || n > kMaxArity) schema_error(path + ".n", "rank out of range");
    auto lambda = lambda_from_json(require(j, "lambda", path), n, path + ".lambda");
    return kind == "torus" ? PoissonStructure::torus(std::move(lambda))
                           : PoissonStructure::skew_poly(std::move(lambda));
  }
  if (kind == "potential") {
    check_keys(j, {"kind", "omega"}, path);
    LaurentPoly omega = parse_poly(require_string(require(j, "omega", path), path + ".omega"), 3);
    return PoissonStructure::potential_affine(std::move(omega));
  }
  if (kind == "potential-quotient") {
    check_keys(j, {"kind", "omega", "xi", "order"}, path);
    LaurentPoly omega = parse_poly(require_string(require(j, "omega", path), path + ".omega"), 3);
    Rat xi = rational_from_json(require(j, "xi", path), path + ".xi");
    MonomialOrder order;
    if (j.contains("order"))
      order = order_from_name(require_string(j.at("order"), path + ".order"));
    return PoissonStructure::potential_quotient(std::move(omega), std::move(xi), order);
  }
  if (kind == "weyl") {
    check_keys(j, {"kind", "pairs", "laurent_x"}, path);
    int pairs = require_int(require(j, "pairs", path), path + ".pairs");
    bool laurent_x = false;
    if (j.contains("laurent_x")) {
      if (!j.at("laurent_x").is_boolean()) schema_error(path + ".laurent_x", "expected a boolean");
      laurent_x = j.at("laurent_x").get<bool>();
    }
    return PoissonStructure::weyl(pairs, laurent_x);
  }
  if (kind == "tensor") {
    check_keys(j, {"kind", "factors"}, path);
    const Json& factors = require(j, "factors", path);
    if (!factors.is_array() || factors.empty())
      schema_error(path + ".factors", "expected a nonempty array");
    std::vector<PoissonStructure> out;
    for (size_t i = 0; i < factors.size(); ++i)
      out.push_back(parse_structure(factors.at(i), path + ".factors[" + std::to_string(i) + "]"));
    return PoissonStructure::tensor(std::move(out));
  }
  schema_error(path + ".kind", "unknown structure kind \"" + kind + "\"");
}

namespace {

struct CommandResult {
  std::string status;  // pass | fail | not-applicable | value
  Json payload = Json::object();
  int exit_code = 0;
};

CliOptions parse_options(const Json& descriptor, const Json& overrides) {
  CliOptions opts;
  Json merged = Json::object();
  if (descriptor.contains("options")) {
    const Json& o = descriptor.at("options");
    check_keys(o, {"degree_bound", "trials", "seed", "order"}, "options");
    merged.update(o);
  }
  merged.update(overrides);
  if (merged.contains("degree_bound"))
    opts.degree_bound = require_int(merged.at("degree_bound"), "options.degree_bound");
  if (merged.contains("trials")) opts.trials = require_int(merged.at("trials"), "options.trials");
  if (merged.contains("seed")) {
    if (!merged.at("seed").is_number_integer()) schema_error("options.seed", "expected an integer");
    opts.seed = merged.at("seed").get<std::uint64_t>();
  }
  if (merged.contains("order"))
    opts.order = require_string(merged.at("order"), "options.order");
  return opts;
}

const SkewParamMatrix& torus_lambda(const PoissonStructure& s) {
  if (const auto* t = std::get_if<TorusStructure>(&s.v())) return t->lambda;
  raise(Errc::context_mismatch, "this command needs a torus structure");
}

LaurentPoly operand_poly(const Json& operands, const std::string& key, int arity,
                         const std::string& path) {
  return parse_poly(require_string(require(operands, key, path), path + "." + key), arity);
}

CommandResult cmd_bracket(const PoissonStructure& s, const Json& operands) {
  check_keys(operands, {"f", "g"}, "operands");
  LaurentPoly f = operand_poly(operands, "f", s.arity(), "operands");
  LaurentPoly g = operand_poly(operands, "g", s.arity(), "operands");
  CommandResult res;
  res.status = "value";
  res.payload["result"] = to_string(bracket(s, f, g));
  return res;
}

CommandResult cmd_simple(const PoissonStructure& s) {
  auto rep = is_poisson_simple_torus(torus_lambda(s));
  CommandResult res;
  res.status = rep.simple ? "pass" : "fail";
  res.exit_code = rep.simple ? 0 : 1;
  res.payload["simple"] = rep.simple;
  res.payload["method"] = rep.method;
  if (rep.witness) res.payload["witness"] = monomial_to_string(*rep.witness);
  return res;
}

CommandResult cmd_center(const PoissonStructure& s, const CliOptions& opts) {
  CommandResult res;
  res.status = "value";
  if (std::holds_alternative<TorusStructure>(s.v())) {
    Json basis = Json::array();
    for (const auto& e : monomial_center_basis(torus_lambda(s)))
      basis.push_back(monomial_to_string(e));
    res.payload["basis"] = std::move(basis);
  } else {
    Json basis = Json::array();
    for (const auto& p : truncated_center(s, opts.degree_bound)) basis.push_back(to_string(p));
    res.payload["basis"] = std::move(basis);
    res.payload["degree_bound"] = opts.degree_bound;
  }
  return res;
}

CommandResult cmd_morphism_check(const PoissonStructure& s, const Json& operands) {
  check_keys(operands, {"images", "target"}, "operands");
  PoissonStructure tgt =
      operands.contains("target") ? parse_structure(operands.at("target"), "operands.target") : s;
  const Json& images_json = require(operands, "images", "operands");
  if (!images_json.is_array()) schema_error("operands.images", "expected an array");
  PolyMap map;
  for (size_t i = 0; i < images_json.size(); ++i)
    map.images.push_back(parse_poly(
        require_string(images_json.at(i), "operands.images[" + std::to_string(i) + "]"),
        tgt.arity()));
  auto rep = check_poisson_morphism(s, tgt, map);
  CommandResult res;
  res.status = rep.pass ? "pass" : "fail";
  res.exit_code = rep.pass ? 0 : 1;
  Json ids = Json::array();
  for (const auto& id : rep.identities) {
    Json entry;
    entry["pair"] = Json::array({id.i, id.j});
    entry["lhs"] = to_string(id.lhs);
    entry["rhs"] = to_string(id.rhs);
    entry["ok"] = id.ok;
    ids.push_back(std::move(entry));
  }
  res.payload["identities"] = std::move(ids);
  return res;
}

CommandResult cmd_classify(const PoissonStructure& s, const Json& operands) {
  check_keys(operands, {"images"}, "operands");
  const Json& images_json = require(operands, "images", "operands");
  if (!images_json.is_array()) schema_error("operands.images", "expected an array");
  std::vector<LaurentPoly> images;
  for (size_t i = 0; i < images_json.size(); ++i)
    images.push_back(parse_poly(
        require_string(images_json.at(i), "operands.images[" + std::to_string(i) + "]"),
        s.arity()));
  MonomialMap map = monomial_map_from_images(images);
  auto cls = classify_torus_endo(torus_lambda(s), map);
  CommandResult res;
  res.status = "value";
  switch (cls.kind) {
    case EndoClassification::Kind::not_poisson:
      res.payload["class"] = "not_poisson";
      res.payload["pair"] = Json::array({cls.fail_i, cls.fail_j});
      res.payload["lhs"] = to_string(cls.lhs);
      res.payload["rhs"] = to_string(cls.rhs);
      break;
    case EndoClassification::Kind::not_injective:
      res.payload["class"] = "not_injective";
      break;
    case EndoClassification::Kind::automorphism: {
      res.payload["class"] = "automorphism";
      Json inv = Json::array();
      for (const auto& im : cls.inverse->images()) inv.push_back(to_string(im));
      res.payload["inverse"] = std::move(inv);
      break;
    }
    case EndoClassification::Kind::injective_not_surjective:
      res.payload["class"] = "injective_not_surjective";
      res.payload["index"] = int_to_json(cls.lattice_index);
      res.payload["missing"] = monomial_to_string(*cls.missing_generator);
      break;
  }
  return res;
}

CommandResult cmd_dixmier_assert(const PoissonStructure& s, const Json& operands) {
  check_keys(operands, {"matrix"}, "operands");
  IntMatrix b = int_matrix_from_json(require(operands, "matrix", "operands"), "operands.matrix");
  CommandResult res;
  try {
    auto rep = simple_torus_dixmier_assert(torus_lambda(s), b);
    if (rep.status == DixmierAssertReport::Status::holds) {
      res.status = "pass";
      res.payload["holds"] = true;
      res.payload["det"] = int_to_json(rep.det);
    } else {
      res.status = "not-applicable";
      res.payload["holds"] = Json();
    }
    res.payload["reason"] = rep.reason;
  } catch (const ForgeError& e) {
    if (e.code() != Errc::internal_assertion) throw;
    res.status = "fail";
    res.exit_code = 1;
    res.payload["holds"] = false;
    res.payload["reason"] = e.what();
  }
  return res;
}

CommandResult cmd_singular(const Json& descriptor, const Json& operands, const CliOptions& opts) {
  LaurentPoly omega(3);
  if (operands.contains("omega")) {
    check_keys(operands, {"omega"}, "operands");
    omega = parse_poly(require_string(operands.at("omega"), "operands.omega"), 3);
  } else if (descriptor.contains("structure")) {
    const Json& st = descriptor.at("structure");
    omega = parse_poly(require_string(require(st, "omega", "structure"), "structure.omega"), 3);
  } else {
    schema_error("operands", "singular needs operands.omega or a potential structure");
  }
  auto rep = is_isolated_singularity(omega, order_from_name(opts.order));
  CommandResult res;
  res.status = rep.isolated ? "pass" : "fail";
  res.exit_code = rep.isolated ? 0 : 1;
  res.payload["isolated"] = rep.isolated;
  if (rep.dimension) res.payload["dimension"] = int_to_json(*rep.dimension);
  return res;
}

CommandResult cmd_grading(const PoissonStructure& s, const CliOptions& opts) {
  auto rep = bracket_degree_shift(s, opts.degree_bound);
  CommandResult res;
  res.status = "value";
  res.payload["max_shift"] = rep.max_shift ? Json(*rep.max_shift) : Json();
  res.payload["homogeneous"] = rep.homogeneous;
  return res;
}

CommandResult cmd_valuation(const PoissonStructure& s, const Json& operands,
                            const CliOptions& opts) {
  check_keys(operands, {"weights", "w"}, "operands");
  const Json& wj = require(operands, "weights", "operands");
  if (!wj.is_array() || static_cast<int>(wj.size()) != s.arity())
    schema_error("operands.weights", "expected one weight per variable");
  WeightValuation nu;
  for (size_t i = 0; i < wj.size(); ++i)
    nu.weights.push_back(require_int(wj.at(i), "operands.weights"));
  std::int64_t w = require_int(require(operands, "w", "operands"), "operands.w");
  auto rep = check_w_valuation(nu, s, w, opts.degree_bound, opts.trials, opts.seed);
  CommandResult res;
  res.status = rep.pass ? "pass" : "fail";
  res.exit_code = rep.pass ? 0 : 1;
  if (!rep.pass) {
    res.payload["axiom"] = rep.axiom;
    res.payload["witness"] = Json::array({rep.witness_a, rep.witness_b});
    res.payload["detail"] = rep.detail;
  }
  return res;
}

CommandResult cmd_ad_closure(const PoissonStructure& s, const Json& operands,
                             const CliOptions& opts) {
  check_keys(operands, {"d", "zeta"}, "operands");
  int d = require_int(require(operands, "d", "operands"), "operands.d");
  CommandResult res;
  if (operands.contains("zeta")) {
    LaurentPoly zeta =
        parse_poly(require_string(operands.at("zeta"), "operands.zeta"), s.arity());
    try {
      construct_Adzeta(s, d, zeta);
      res.status = "pass";
      res.payload["accepted"] = true;
    } catch (const ForgeError& e) {
      if (e.code() != Errc::zeta_square_escapes) throw;
      res.status = "fail";
      res.exit_code = 1;
      res.payload["accepted"] = false;
      res.payload["reason"] = e.what();
    }
    return res;
  }
  auto rep = check_Ad_closure(s, d, opts.degree_bound, opts.trials, opts.seed);
  res.status = rep.pass ? "pass" : "fail";
  res.exit_code = rep.pass ? 0 : 1;
  if (!rep.pass) {
    res.payload["witness"] = Json::array({rep.witness_f, rep.witness_g});
    res.payload["detail"] = rep.detail;
  }
  return res;
}

CommandResult cmd_closure(const PoissonStructure& s, const Json& operands,
                          const CliOptions& opts) {
  check_keys(operands, {"seeds", "box", "max_rounds"}, "operands");
  const Json& seeds_json = require(operands, "seeds", "operands");
  if (!seeds_json.is_array()) schema_error("operands.seeds", "expected an array");
  std::vector<LaurentPoly> seeds;
  for (size_t i = 0; i < seeds_json.size(); ++i)
    seeds.push_back(parse_poly(
        require_string(seeds_json.at(i), "operands.seeds[" + std::to_string(i) + "]"),
        s.arity()));
  int box = require_int(require(operands, "box", "operands"), "operands.box");
  int max_rounds = operands.contains("max_rounds")
                       ? require_int(operands.at("max_rounds"), "operands.max_rounds")
                       : 16;
  auto basis = bounded_poisson_closure(s, seeds, box, max_rounds);
  CommandResult res;
  res.status = "value";
  res.payload["dimension"] = static_cast<int>(basis.size());
  Json out = Json::array();
  for (const auto& p : basis) out.push_back(to_string(p));
  res.payload["basis"] = std::move(out);
  (void)opts;
  return res;
}

CommandResult cmd_gr_check(const PoissonStructure& s, const CliOptions& opts) {
  const auto* q = std::get_if<PotentialQuotientStructure>(&s.v());
  if (!q) raise(Errc::context_mismatch, "gr-check needs a potential-quotient structure");
  auto rep = associated_graded_bracket_check(q->omega, q->xi, opts.degree_bound, opts.trials,
                                             opts.seed);
  CommandResult res;
  res.status = rep.pass ? "pass" : "fail";
  res.exit_code = rep.pass ? 0 : 1;
  if (!rep.pass) {
    res.payload["witness"] = Json::array({rep.witness_f, rep.witness_g});
    res.payload["detail"] = rep.detail;
  }
  return res;
}

CommandResult cmd_aut_bound(const Json& operands) {
  check_keys(operands, {"d"}, "operands");
  int d = require_int(require(operands, "d", "operands"), "operands.d");
  CommandResult res;
  res.status = "value";
  res.payload["value"] = int_to_json(aut_bound(d));
  return res;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::arity_mismatch: return "arity_mismatch";
    case Errc::parameter_product: return "parameter_product";
    case Errc::negative_power_of_non_unit: return "negative_power_of_non_unit";
    case Errc::non_square: return "non_square";
    case Errc::not_unimodular: return "not_unimodular";
    case Errc::not_skew: return "not_skew";
    case Errc::not_homogeneous: return "not_homogeneous";
    case Errc::context_mismatch: return "context_mismatch";
    case Errc::unreduced_quotient_input: return "unreduced_quotient_input";
    case Errc::zero_generators: return "zero_generators";
    case Errc::zeta_square_escapes: return "zeta_square_escapes";
    case Errc::degree_violation: return "degree_violation";
    case Errc::guard_exceeded: return "guard_exceeded";
    case Errc::bad_input: return "bad_input";
    case Errc::internal_assertion: return "internal_assertion";
  }
  return "unknown";
}

}  // namespace

RunResult run_descriptor(const Json& descriptor) {
  return run_descriptor(descriptor, Json::object());
}

RunResult run_descriptor(const Json& descriptor, const Json& option_overrides) {
  RunResult out;
  std::string command = "?";
  try {
    check_keys(descriptor, {"command", "structure", "operands", "options"}, "descriptor");
    command = require_string(require(descriptor, "command", "descriptor"), "command");
    CliOptions opts = parse_options(descriptor, option_overrides);
    Json operands = descriptor.contains("operands") ? descriptor.at("operands") : Json::object();

    auto structure = [&]() -> PoissonStructure {
      if (!descriptor.contains("structure"))
        schema_error("structure", "this command needs a structure");
      return parse_structure(descriptor.at("structure"));
    };

    CommandResult res;
    if (command == "bracket") {
      res = cmd_bracket(structure(), operands);
    } else if (command == "simple") {
      res = cmd_simple(structure());
    } else if (command == "center") {
      res = cmd_center(structure(), opts);
    } else if (command == "morphism-check") {
      res = cmd_morphism_check(structure(), operands);
    } else if (command == "classify") {
      res = cmd_classify(structure(), operands);
    } else if (command == "dixmier-assert") {
      res = cmd_dixmier_assert(structure(), operands);
    } else if (command == "singular") {
      res = cmd_singular(descriptor, operands, opts);
    } else if (command == "grading") {
      res = cmd_grading(structure(), opts);
    } else if (command == "valuation") {
      res = cmd_valuation(structure(), operands, opts);
    } else if (command == "ad-closure") {
      res = cmd_ad_closure(structure(), operands, opts);
    } else if (command == "closure") {
      res = cmd_closure(structure(), operands, opts);
    } else if (command == "gr-check") {
      res = cmd_gr_check(structure(), opts);
    } else if (command == "aut-bound") {
      res = cmd_aut_bound(operands);
    } else {
      schema_error("command", "unknown command \"" + command + "\"");
    }

    out.report["command"] = command;
    out.report["status"] = res.status;
    out.report["payload"] = std::move(res.payload);
    out.report["diagnostics"] = Json::array();
    out.exit_code = res.exit_code;
  } catch (const ForgeError& e) {
    out.report = Json::object();
    out.report["command"] = command;
    out.report["status"] = "error";
    out.report["payload"] = Json::object();
    out.report["payload"]["code"] = errc_name(e.code());
    out.report["payload"]["message"] = e.what();
    out.report["diagnostics"] = Json::array();
    out.exit_code = 2;
  } catch (const Json::exception& e) {
    out.report = Json::object();
    out.report["command"] = command;
    out.report["status"] = "error";
    out.report["payload"] = Json::object();
    out.report["payload"]["code"] = "bad_input";
    out.report["payload"]["message"] = e.what();
    out.report["diagnostics"] = Json::array();
    out.exit_code = 2;
  }
  return out;
}

}  // namespace forge
