// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "trilocal/euclidean.hpp"
#include "trilocal/expr_parser.hpp"
#include "trilocal/fraction_localization.hpp"
#include "trilocal/matrix_localization.hpp"
#include "trilocal/module_localization.hpp"
#include "trilocal/module_spec.hpp"
#include "trilocal/verify.hpp"

using namespace trilocal;

namespace {

// Time limits per criterion, in seconds.
constexpr double kPresentationLimit = 10.0;
constexpr double kOracleLimit = 30.0;
constexpr double kModuleLimit = 60.0;

constexpr std::uint64_t kSeed = kDefaultSeed;

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back(what);
    }
  }
  void require(const Report& r) {
    if (r.passed()) return;
    for (const auto& c : r.checks)
      if (!c.passed) require(false, r.title + " / " + c.name + ": " + c.counterexample);
  }
};

const std::vector<std::string>& shipped_families() {
  static const std::vector<std::string> f = {
      R"({"kind":"regular","ring":"Z"})",
      R"({"kind":"regular","ring":"Q"})",
      R"({"kind":"double","ring":"Q"})",
      R"({"kind":"tensor-free","A_gens":["s","t"],"B_gens":["u","v"]})",
      R"({"kind":"hnn-free","A_gens":["s","t"]})",
      R"({"kind":"scaled","k":2})",
  };
  return f;
}

// One family per oracle ring: Z, Q[x], Q<S,U>, Q<S,x>, Z[1/2].
const std::vector<std::string>& example_families() {
  static const std::vector<std::string> f = {
      R"({"kind":"regular","ring":"Z"})",
      R"({"kind":"double","ring":"Q"})",
      R"({"kind":"tensor-free","A_gens":["s","t"],"B_gens":["u","v"]})",
      R"({"kind":"hnn-free","A_gens":["s","t"]})",
      R"({"kind":"scaled","k":2})",
  };
  return f;
}

Outcome presentation_soundness() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& j : shipped_families()) out.require(verify_presentation(make_family(j), kSeed, 1000));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < kPresentationLimit, "took " + std::to_string(secs) + " s");
  return out;
}

Outcome oracle_faithfulness() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& j : example_families()) out.require(verify_oracle(make_family(j), kSeed, 1000));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < kOracleLimit, "took " + std::to_string(secs) + " s");
  return out;
}

Outcome sigma_inverting() {
  Outcome out;
  for (const auto& j : example_families()) out.require(verify_sigma_inverting(make_family(j), kSeed, 1000));
  const auto broken = verify_sigma_inverting(fixtures::drop_identity_relation(make_family(example_families()[0])),
                                             kSeed, 100);
  out.require(!broken.passed(), "negative control with relation (id) dropped was not detected");
  return out;
}

// Minimal r with q * c^r in Z[1/base] (base 1 means Z).
unsigned long minimal_exponent(const mpq_class& q, long c, long base) {
  mpz_class den = q.get_den();
  for (mpz_class g = gcd(den, mpz_class(base)); g != 1; g = gcd(den, mpz_class(base))) den /= g;
  unsigned long r = 0;
  while (den != 1) {
    const mpz_class g = gcd(den, mpz_class(c));
    if (g == 1) return ~0UL;
    den /= g;
    ++r;
  }
  return r;
}

Outcome proposition() {
  Outcome out;
  struct Case {
    const char* family;
    long a0;
    long base;
  };
  for (const Case& c : {Case{R"({"kind":"regular"})", 2, 1}, Case{R"({"kind":"scaled","k":2})", 3, 2}}) {
    auto f = make_family(c.family);
    const CentralPair pair = make_central_pair(f, f->a_scalar(c.a0), f->b_scalar(c.a0), kSeed, 1000);
    out.require(pair.basis_checked, std::string(c.family) + ": centrality not checked on a basis");
    out.require(check_central(pair, kSeed, 1000));
    out.require(verify_proposition(pair, kSeed, 500));
    Rng rng(kSeed);
    for (int i = 0; i < 500; ++i) {
      const TElement e = t_normalize(random_expr(*pair.target, rng), pair.target);
      const Fraction fr = fraction_form(e, pair);
      const auto q = oracle_rational(family_iso(e));
      out.require(reassemble(fr, pair) == e, "round trip failed for " + e.to_string());
      out.require(q && fr.exponent == minimal_exponent(*q, c.a0, c.base), "exponent not minimal for " + e.to_string());
    }
  }
  return out;
}

TripleModule load_spec(const std::string& name) {
  FILE* f = std::fopen((std::string(TRILOCAL_TEST_DATA) + "/" + name).c_str(), "r");
  std::string text;
  if (f) {
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, f)) > 0;) text.append(buf, n);
    std::fclose(f);
  }
  return parse_triple_module(text);
}

Outcome module_localization() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (const char* j : {R"({"kind":"regular"})", R"({"kind":"scaled","k":2})", R"({"kind":"double"})"}) {
    auto f = make_family(j);
    Rng rng(kSeed);
    for (int i = 0; i < 20; ++i) {
      const TripleModule n = random_triple_module(f, rng, 4, 10);
      const LocalizedModule lm = localize_module(n, 100, kSeed + static_cast<std::uint64_t>(i));
      out.require(lm.alpha_beta);
    }
  }
  const auto d2 = localize_module(load_spec("d2.json"), 100, kSeed);
  out.require(d2.alpha_beta);
  out.require(d2.invariants.free_rank == 1 && d2.invariants.torsion.empty(), "d=2 fixture is not free of rank 1");
  const auto z3 = localize_module(load_spec("torsion_z3.json"), 100, kSeed);
  out.require(z3.alpha_beta);
  out.require(z3.invariants.torsion == std::vector<std::string>{"3"} && z3.invariants.free_rank == 0,
              "Z/3 fixture does not give invariant factors (3)");
  const TripleModule n = load_spec("d2.json");
  out.require(!verify_alpha_beta(n, build_L(n, GSign::flipped), 100, kSeed).passed(),
              "sign-flipped g was not detected");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(secs < kModuleLimit, "took " + std::to_string(secs) + " s");
  return out;
}

Outcome smith_kernel() {
  Outcome out;
  std::mt19937_64 rng(kSeed);
  std::size_t small = 0;
  auto check = [&](const IntMatrix& m) {
    const auto s = smith_normal_form(m);
    const bool identity = trilocal::testing::multiply_int(trilocal::testing::multiply_int(s.U, m), s.V) == s.D;
    const bool unimodular = abs(trilocal::testing::det_bareiss(s.U)) == 1 && abs(trilocal::testing::det_bareiss(s.V)) == 1;
    bool diagonal = true, chain = true;
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j && s.D(i, j) != 0) diagonal = false;
    auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < s.rank; ++i)
      if (d[i] <= 0 || d[i + 1] % d[i] != 0) chain = false;
    out.require(identity && unimodular && diagonal && chain, "Smith contract failed");
    if (m.rows() <= 3 && m.cols() <= 3) {
      ++small;
      d.resize(s.rank);
      out.require(d == trilocal::testing::invariant_factors_by_minors(m), "disagrees with minors reference");
    }
  };
  for (int i = 0; i < 1000; ++i) check(trilocal::testing::random_int_matrix(rng, 6, 100));
  while (small < 1000) check(trilocal::testing::random_int_matrix(rng, 3, 100));
  return out;
}

struct Run {
  int code;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run_cli(const std::vector<std::string>& args) {
  std::string cmd = quote(TRILOCAL_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string text;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) text.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}

std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  return {};
}

Outcome cli_contract() {
  Outcome out;
  // 500 printed normal forms fed back through the tool.
  std::size_t round_trips = 0;
  for (const auto& j : shipped_families()) {
    auto f = make_family(j);
    Rng rng(kSeed);
    const std::size_t per_family = 500 / shipped_families().size() + 1;
    for (std::size_t i = 0; i < per_family && round_trips < 500; ++i, ++round_trips) {
      const TElement e = t_normalize(random_expr(*f, rng), f);
      const std::string printed = e.to_string();
      const Run r = run_cli({"normalize", "--family", j, "--expr", printed});
      out.require(r.code == 0 && field(r.out, "normal_form") == printed, "round trip failed for " + printed);
      out.require(parse_and_normalize(printed, f) == e, "reparse differs for " + printed);
    }
  }
  out.require(round_trips == 500, "only " + std::to_string(round_trips) + " round trips");

  const std::string scaled = R"({"kind":"scaled","k":2})";
  out.require(run_cli({"normalize", "--family", scaled, "--expr", "x[3]*x[5]"}).code == 0, "exit 0 not produced");
  out.require(run_cli({"verify", "--suite", "paper", "--samples", "20", "--inject-fault"}).code == 1,
              "exit 1 not produced");
  out.require(run_cli({"normalize", "--family", scaled, "--expr", "x[3"}).code == 2, "exit 2 not produced");
  out.require(run_cli({"normalize", "--family", R"({"kind":"hnn-free","A_gens":["s"]})", "--expr",
                       "(x[h(s,s)]+x[h(1,s)])^12", "--budget", "100"})
                      .code == 3,
              "exit 3 not produced");

  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--suite", "random", "--seed", "42", "--samples", "100"},
           {"verify", "--suite", "paper", "--format", "json"},
           {"localize-module", "--spec", std::string(TRILOCAL_TEST_DATA) + "/double.json"}}) {
    const Run a = run_cli(args), b = run_cli(args);
    out.require(a.code == 0 && a.out == b.out && !a.out.empty(), "reports differ across runs: " + args[0]);
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"presentation soundness", presentation_soundness},
      {"oracle faithfulness", oracle_faithfulness},
      {"sigma-inverting localization map", sigma_inverting},
      {"central element proposition", proposition},
      {"module localization", module_localization},
      {"Smith/Euclidean kernel", smith_kernel},
      {"CLI contract", cli_contract},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << i + 1 << ": " << (o.passed ? "PASS" : "FAIL") << " " << criteria[i].name << " ("
              << timing << ")\n";
    for (std::size_t k = 0; k < o.notes.size() && k < 5; ++k) std::cout << "    " << o.notes[k] << "\n";
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
