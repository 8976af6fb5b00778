#include "suites.hpp"

#include <functional>
#include <string>
#include <vector>

#include "trilocal/expr_parser.hpp"
#include "trilocal/fraction_localization.hpp"
#include "trilocal/matrix_localization.hpp"
#include "trilocal/module_localization.hpp"
#include "trilocal/module_spec.hpp"
#include "trilocal/verify.hpp"

namespace trilocal::cli {

namespace {

struct NormalFixture {
  std::string expr;
  std::string oracle;
};

struct ExampleFamily {
  std::string title;
  std::string descriptor;
  std::vector<NormalFixture> fixtures;
};

const std::vector<ExampleFamily>& example_families() {
  static const std::vector<ExampleFamily> families = {
      {"regular over Z", R"({"kind":"regular","ring":"Z"})", {{"x[1]", "1"}, {"x[2]*x[3]", "6"}, {"x[2] + x[-2]", "0"}}},
      {"regular over Q", R"({"kind":"regular","ring":"Q"})", {{"x[1/2]*x[4]", "2"}, {"x[1]", "1"}}},
      {"double over Q",
       R"({"kind":"double","ring":"Q"})",
       {{"x[(1,0)]", "1"}, {"x[(0,1)]", "x"}, {"x[(2,3)]*x[(0,1)]", "2x+3x^2"}}},
      {"tensor free over Q",
       R"({"kind":"tensor-free","A_gens":["s"],"B_gens":["u"]})",
       {{"x[t(1,1)]", "1"}, {"x[t(s,u)]", "s*u"}, {"x[t(s,1)]*x[t(1,u)]", "s*u"}}},
      {"hnn free over Q",
       R"({"kind":"hnn-free","A_gens":["s"]})",
       {{"x[h(1)]", "1"}, {"x[h(1,1)]", "x"}, {"x[h(s,s)]*x[h(s)]", "s*x*s*s"}}},
      {"scaled k=2", R"({"kind":"scaled","k":2})", {{"x[2]", "1"}, {"x[4]", "2"}, {"x[3]*x[5]", "15/4"}}},
  };
  return families;
}

Report normal_form_fixtures(const ExampleFamily& pf, const FamilyPtr& family, const SuiteOptions& opts) {
  Report r;
  r.title = "normal forms: " + pf.title;
  r.seed = opts.seed;
  for (const auto& fx : pf.fixtures) {
    Check& c = r.add(fx.expr + " -> " + fx.oracle);
    c.cases = 1;
    const TElement e = parse_and_normalize(fx.expr, family, opts.budget);
    const std::string got = family_iso(e).to_string();
    if (got != fx.oracle) c.fail(e.to_string() + " has oracle value " + got);
  }
  return r;
}

/// Passes when the wrapped report fails: the checks must catch the broken input.
Report negative_control(std::string title, const Report& broken) {
  Report r;
  r.title = std::move(title);
  r.seed = broken.seed;
  Check& c = r.add("broken construction detected");
  c.cases = broken.checks.size();
  if (broken.passed()) c.fail("all checks of '" + broken.title + "' passed");
  return r;
}

struct ModuleFixture {
  std::string title;
  std::string spec;
  std::vector<std::string> torsion;
  std::size_t free_rank;
};

const std::vector<ModuleFixture>& module_fixtures() {
  static const std::vector<ModuleFixture> fixtures = {
      {"d=2: N_A = N_B = Z, f(1 x 1) = 2", R"({"family":{"kind":"regular"},"NA":{"gens":1},"NB":{"gens":1},"f":{"1":[[2]]}})", {}, 1},
      {"N_A = Z/3, N_B = 0", R"({"family":{"kind":"regular"},"NA":{"gens":1,"rels":[[3]]},"NB":{"gens":0},"f":{}})", {"3"}, 0},
      {"N_A = Z/2 + Z, N_B = 0", R"({"family":{"kind":"regular"},"NA":{"gens":2,"rels":[[2,0]]},"NB":{"gens":0},"f":{}})", {"2"}, 1},
      {"N_A = 0, N_B = Z (killed)", R"({"family":{"kind":"regular"},"NA":{"gens":0},"NB":{"gens":1},"f":{"1":[[]]}})", {}, 0},
      {"column Q = (M; B)", R"({"family":{"kind":"regular"},"NA":{"gens":1},"NB":{"gens":1},"f":{"1":[[1]]}})", {}, 1},
      {"R = P + Q", R"({"family":{"kind":"regular"},"NA":{"gens":2},"NB":{"gens":1},"f":{"1":[[0,1]]}})", {}, 2},
      {"scaled k=2: N_A = Z/3", R"({"family":{"kind":"scaled","k":2},"NA":{"gens":1,"rels":[[3]]},"NB":{"gens":0},"f":{}})", {"3"}, 0},
      {"scaled k=2: N_A = Z/4", R"({"family":{"kind":"scaled","k":2},"NA":{"gens":1,"rels":[[4]]},"NB":{"gens":0},"f":{}})", {}, 0},
  };
  return fixtures;
}

std::string join(const std::vector<std::string>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out + ")";
}

Report module_fixture(const ModuleFixture& fx, const SuiteOptions& opts) {
  const TripleModule n = parse_triple_module(fx.spec);
  const GSign sign = opts.inject_fault ? GSign::flipped : GSign::standard;
  const PresentationMatrix L = build_L(n, sign);
  const LInvariants inv = l_invariants(L);
  Report r = verify_alpha_beta(n, L, std::min<std::size_t>(opts.samples, 100), opts.seed);
  r.title = "module: " + fx.title;
  r.facts.emplace_back("ring", L.ring);
  Check& t = r.add("invariant factors " + join(fx.torsion));
  t.cases = 1;
  if (inv.torsion != fx.torsion) t.fail(join(inv.torsion));
  Check& f = r.add("free rank " + std::to_string(fx.free_rank));
  f.cases = 1;
  if (inv.free_rank != fx.free_rank) f.fail(std::to_string(inv.free_rank));
  return r;
}

/// Runs `body`; library errors become a failing report instead of aborting the suite.
/// Budget exhaustion still propagates.
Report guarded(const std::string& title, std::uint64_t seed, const std::function<Report()>& body) {
  try {
    return body();
  } catch (const BudgetExhausted&) {
    throw;
  } catch (const Error& e) {
    Report r;
    r.title = title;
    r.seed = seed;
    r.add("runs without error").fail(e.what());
    return r;
  }
}

Json suite_json(const std::string& name, const SuiteOptions& opts, const std::vector<Report>& reports) {
  Json out;
  out["suite"] = name;
  out["seed"] = opts.seed;
  out["samples"] = opts.samples;
  if (opts.inject_fault) out["inject_fault"] = true;
  Json list = Json::array();
  std::size_t failed = 0;
  for (const auto& r : reports) {
    list.push_back(report_to_json(r));
    if (!r.passed()) ++failed;
  }
  out["reports"] = list;
  out["failed_reports"] = failed;
  out["status"] = failed == 0 ? "pass" : "fail";
  return out;
}

FamilyPtr maybe_broken(FamilyPtr f, const SuiteOptions& opts) {
  return opts.inject_fault ? fixtures::drop_identity_relation(std::move(f)) : f;
}

}  // namespace

Json run_fixture_suite(const SuiteOptions& opts) {
  std::vector<Report> reports;
  for (const auto& pf : example_families()) {
    const FamilyPtr family = maybe_broken(make_family(pf.descriptor), opts);
    reports.push_back(guarded("normal forms: " + pf.title, opts.seed,
                              [&] { return normal_form_fixtures(pf, family, opts); }));
    reports.push_back(guarded("sigma inverting: " + pf.title, opts.seed, [&] {
      Report r = verify_sigma_inverting(family, opts.seed, opts.samples);
      r.title = "sigma inverting: " + pf.title;
      return r;
    }));
  }
  reports.push_back(negative_control(
      "negative control: relation (id) dropped",
      verify_sigma_inverting(fixtures::drop_identity_relation(make_family(example_families()[0].descriptor)), opts.seed,
                             opts.samples)));

  struct PropFixture {
    std::string title;
    std::string descriptor;
    long a0;
  };
  const std::vector<PropFixture> props = {{"regular over Z, a0 = b0 = 2", R"({"kind":"regular"})", 2},
                                          {"scaled k=2, a0 = b0 = 3", R"({"kind":"scaled","k":2})", 3}};
  for (const auto& pf : props) {
    const std::string title = "proposition: " + pf.title;
    reports.push_back(guarded(title, opts.seed, [&] {
      const FamilyPtr family = maybe_broken(make_family(pf.descriptor), opts);
      const CentralPair pair = make_central_pair(family, family->a_scalar(pf.a0), family->b_scalar(pf.a0), opts.seed,
                                                 opts.samples);
      Report r = verify_proposition(pair, opts.seed, opts.samples);
      r.title = title;
      return r;
    }));
  }

  for (const auto& fx : module_fixtures())
    reports.push_back(guarded("module: " + fx.title, opts.seed, [&] { return module_fixture(fx, opts); }));
  {
    const TripleModule n = parse_triple_module(module_fixtures()[0].spec);
    reports.push_back(negative_control("negative control: sign of g flipped",
                                       verify_alpha_beta(n, build_L(n, GSign::flipped), 20, opts.seed)));
  }
  return suite_json("paper", opts, reports);
}

Json run_random_suite(const SuiteOptions& opts, const FamilyPtr& only) {
  std::vector<FamilyPtr> families;
  if (only) {
    families.push_back(only);
  } else {
    for (const auto& pf : example_families()) families.push_back(make_family(pf.descriptor));
  }

  std::vector<Report> reports;
  for (const auto& base : families) {
    const FamilyPtr family = maybe_broken(base, opts);
    const std::string name = base->name();
    auto titled = [&](std::string prefix, Report r) {
      r.title = std::move(prefix) + ": " + name;
      return r;
    };
    reports.push_back(guarded("presentation: " + name, opts.seed, [&] {
      return titled("presentation", verify_presentation(family, opts.seed, opts.samples));
    }));
    reports.push_back(guarded("oracle: " + name, opts.seed,
                              [&] { return titled("oracle", verify_oracle(family, opts.seed, opts.samples)); }));
    reports.push_back(guarded("sigma inverting: " + name, opts.seed, [&] {
      return titled("sigma inverting", verify_sigma_inverting(family, opts.seed, opts.samples));
    }));

    long a0 = 0;
    if (base->kind() == FamilyKind::regular && base->coeff_ring() == CoeffRing::Z) a0 = 2;
    if (base->kind() == FamilyKind::scaled) a0 = 3;
    if (a0 != 0) {
      reports.push_back(guarded("proposition: " + name, opts.seed, [&] {
        const CentralPair pair =
            make_central_pair(family, family->a_scalar(a0), family->b_scalar(a0), opts.seed, opts.samples);
        return titled("proposition a0 = " + std::to_string(a0), verify_proposition(pair, opts.seed, opts.samples));
      }));
    }

    if (module_localization_ring(*base)) {
      reports.push_back(guarded("random modules: " + name, opts.seed, [&] {
        Report r;
        r.title = "random modules: " + name;
        r.seed = opts.seed;
        Rng rng(opts.seed);
        Check& ab = r.add("alpha/beta on 20 random triples");
        Check& rt = r.add("triple -> column module -> triple");
        const GSign sign = opts.inject_fault ? GSign::flipped : GSign::standard;
        for (int i = 0; i < 20; ++i) {
          const TripleModule n = random_triple_module(base, rng);
          const Report v = verify_alpha_beta(n, build_L(n, sign), std::min<std::size_t>(opts.samples, 100), opts.seed + i);
          ++ab.cases;
          if (!v.passed()) ab.fail(triple_module_to_json(n));
          const Roundtrip back = module_roundtrip(n);
          ++rt.cases;
          if (!back.verified) rt.fail(back.failure + " for " + triple_module_to_json(n));
        }
        return r;
      }));
    }
  }
  return suite_json("random", opts, reports);
}

}  // namespace trilocal::cli
