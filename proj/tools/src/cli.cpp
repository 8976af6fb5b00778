#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "render.hpp"
#include "suites.hpp"
#include "trilocal/expr_parser.hpp"
#include "trilocal/fraction_localization.hpp"
#include "trilocal/matrix_localization.hpp"
#include "trilocal/module_localization.hpp"
#include "trilocal/module_spec.hpp"

namespace trilocal::cli {

namespace {

struct Config {
  std::string family;
  std::string expr;
  std::string spec;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = kDefaultBudget;
  std::string format = "text";
  std::string component = "M";
  std::string suite = "paper";
  std::size_t samples = 200;
  bool inject_fault = false;
  std::string a0 = "2";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

FamilyPtr load_family(const std::string& arg) {
  if (arg.empty()) throw SchemaError("--family is required");
  return make_family(arg.front() == '@' ? read_file(arg.substr(1)) : arg);
}

Json header(const std::string& command, const Config& cfg, const FamilyPtr& family) {
  Json out;
  out["command"] = command;
  out["family"] = family->name();
  out["descriptor"] = family->id();
  out["seed"] = cfg.seed;
  return out;
}

Json report_status(Json doc, bool passed) {
  doc["status"] = passed ? "pass" : "fail";
  return doc;
}

Json cmd_normalize(const Config& cfg) {
  const FamilyPtr family = load_family(cfg.family);
  const TElement e = parse_and_normalize(cfg.expr, family, cfg.budget);
  Json out = header("normalize", cfg, family);
  out["input"] = cfg.expr;
  out["normal_form"] = e.to_string();
  out["oracle"] = family_iso(e).to_string();
  return report_status(out, true);
}

Json cmd_rho(const Config& cfg) {
  const FamilyPtr family = load_family(cfg.family);
  std::optional<TElement> image;
  if (cfg.component == "A") image = rho_A(family, family->parse_a(cfg.expr));
  else if (cfg.component == "B") image = rho_B(family, family->parse_b(cfg.expr));
  else image = rho_M(family, family->parse_melem(cfg.expr));
  Json out = header("rho", cfg, family);
  out["component"] = cfg.component;
  out["input"] = cfg.expr;
  out["image"] = image->to_string();
  out["oracle"] = family_iso(*image).to_string();
  return report_status(out, true);
}

CentralPair central_pair(const FamilyPtr& family, const Config& cfg) {
  const Scalar a0 = Scalar::parse(cfg.a0);
  return make_central_pair(family, family->a_scalar(a0), family->b_scalar(a0), cfg.seed);
}

Json cmd_fraction(const Config& cfg) {
  const FamilyPtr family = load_family(cfg.family);
  const CentralPair pair = central_pair(family, cfg);
  const TElement e = parse_and_normalize(cfg.expr, pair.target, cfg.budget);
  const Fraction f = fraction_form(e, pair);
  const TElement back = reassemble(f, pair);
  Json out = header("fraction", cfg, family);
  out["a0"] = cfg.a0;
  out["target"] = pair.target->name();
  out["input"] = e.to_string();
  out["numerator"] = f.numerator.to_string();
  out["exponent"] = f.exponent;
  out["reassembled"] = back.to_string();
  out["round_trip"] = back == e ? "pass" : "fail";
  return report_status(out, back == e);
}

Json cmd_factor(const Config& cfg) {
  const FamilyPtr family = load_family(cfg.family);
  const CentralPair pair = central_pair(family, cfg);
  const LetterHom<Scalar> f = rational_inclusion(family);
  const Scalar f_inv = f.letter(family->left_act(pair.a0, family->p())).inverse();
  const Expr expr = parse_element(cfg.expr, *pair.target);
  const TElement e = parse_and_normalize(cfg.expr, pair.target, cfg.budget);
  const Scalar on_normal_form = factor_inverting_hom(f, f_inv, e, pair);
  const Scalar on_expression = factor_inverting_hom(f, f_inv, expr, pair);
  Json out = header("factor", cfg, family);
  out["a0"] = cfg.a0;
  out["target"] = pair.target->name();
  out["input"] = cfg.expr;
  out["normal_form"] = e.to_string();
  out["value"] = on_normal_form.to_string();
  out["value_unnormalized"] = on_expression.to_string();
  out["orders_agree"] = on_normal_form == on_expression ? "pass" : "fail";
  return report_status(out, on_normal_form == on_expression);
}

Json cmd_localize_ring(const Config& cfg) {
  const FamilyPtr family = load_family(cfg.family);
  const Report r = verify_sigma_inverting(family, cfg.seed, cfg.samples);
  Json out = header("localize-ring", cfg, family);
  out["localization"] = "M2(T)";
  out["rho(0,p,0)"] = rho_matrix(family, tri_make(*family, family->a_scalar(0), family->p(), family->b_scalar(0)))
                          .to_string();
  out["report"] = report_to_json(r);
  return report_status(out, r.passed());
}

Json rows_json(const std::vector<std::vector<std::string>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

Json int_rows(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    out.push_back(row);
  }
  return out;
}

Json cmd_localize_module(const Config& cfg) {
  if (cfg.spec.empty()) throw SchemaError("--spec is required");
  const TripleModule n = parse_triple_module(read_file(cfg.spec));
  const LocalizedModule lm = localize_module(n, std::min<std::size_t>(cfg.samples, 100), cfg.seed);
  Json out = header("localize-module", cfg, n.family());
  out["ring"] = lm.L.ring;
  out["generators"] = lm.L.gens;
  out["relations"] = rows_json(lm.L.rows());
  out["invariant_factors"] = lm.invariants.torsion;
  out["free_rank"] = lm.invariants.free_rank;
  out["alpha"] = int_rows(lm.alpha);
  out["beta"] = int_rows(lm.beta);
  out["report"] = report_to_json(lm.alpha_beta);
  return report_status(out, lm.alpha_beta.passed());
}

Json cmd_verify(const Config& cfg) {
  SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;
  opts.budget = cfg.budget;
  opts.inject_fault = cfg.inject_fault;
  if (cfg.suite == "paper") return run_fixture_suite(opts);
  return run_random_suite(opts, cfg.family.empty() ? nullptr : load_family(cfg.family));
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--family", cfg.family, "Family descriptor as inline JSON or @file");
  sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  sub->add_option("--budget", cfg.budget, "Reduction step budget")->capture_default_str();
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Universal localization of triangular matrix rings"};
  app.name("trilocal");
  app.require_subcommand(1, 1);

  auto* normalize = app.add_subcommand("normalize", "Normal form and oracle value of an expression");
  auto* rho = app.add_subcommand("rho", "Image of an element of A, M or B in T(M,p)");
  auto* verify = app.add_subcommand("verify", "Run the fixture or random verification suites");
  auto* fraction = app.add_subcommand("fraction", "Fraction form of an element of T(M,a0 p)");
  auto* factor = app.add_subcommand("factor", "Factor the rational inclusion through T(M,a0 p)");
  auto* ring = app.add_subcommand("localize-ring", "Check that rho: R -> M2(T) inverts sigma");
  auto* module = app.add_subcommand("localize-module", "Localize a triple module");

  for (auto* sub : {normalize, rho, verify, fraction, factor, ring, module}) add_common(sub, cfg);
  for (auto* sub : {normalize, rho, fraction, factor}) sub->add_option("--expr", cfg.expr, "Expression")->required();
  rho->add_option("--component", cfg.component, "Which corner the element lives in")
      ->check(CLI::IsMember({"A", "M", "B"}))
      ->capture_default_str();
  verify->add_option("--suite", cfg.suite, "Suite to run")
      ->check(CLI::IsMember({"paper", "random"}))
      ->capture_default_str();
  verify->add_flag("--inject-fault", cfg.inject_fault, "Run the suites against broken constructions");
  for (auto* sub : {verify, ring, module})
    sub->add_option("--samples", cfg.samples, "Random samples per check")->capture_default_str();
  for (auto* sub : {fraction, factor}) sub->add_option("--a0", cfg.a0, "Central scalar a0 = b0")->capture_default_str();
  module->add_option("--spec", cfg.spec, "Triple module JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    Json doc;
    if (normalize->parsed()) doc = cmd_normalize(cfg);
    else if (rho->parsed()) doc = cmd_rho(cfg);
    else if (verify->parsed()) doc = cmd_verify(cfg);
    else if (fraction->parsed()) doc = cmd_fraction(cfg);
    else if (factor->parsed()) doc = cmd_factor(cfg);
    else if (ring->parsed()) doc = cmd_localize_ring(cfg);
    else doc = cmd_localize_module(cfg);
    out << render(doc, cfg.format == "json");
    return doc.value("status", "fail") == "pass" ? kPass : kVerifyFailed;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace trilocal::cli
