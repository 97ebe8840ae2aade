// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include "oracles.hpp"
#include "relstab/relstab.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace relstab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s  %-28s %s  [%.2fs]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), s);
  std::fflush(stdout);
}

SuiteConfig config(std::vector<FiniteGroup> groups, std::size_t corpus, std::size_t pairs, std::string check) {
  SuiteConfig c;
  c.seed = 20240601;
  c.ring = CoefficientRing::integers();
  c.groups = std::move(groups);
  c.corpus_size = corpus;
  c.max_factor = 12;
  c.pairs = pairs;
  c.checks = {std::move(check)};
  return c;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs one suite check and requires zero failures over at least `min_items` constrained items.
Outcome suite_criterion(const SuiteConfig& c, std::size_t min_items, double max_seconds = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r = run_suite(c);
  const double s = seconds_since(t0);
  const CheckResult& k = r.checks.at(0);
  std::string d = std::to_string(k.passed) + "/" + std::to_string(k.applicable) + " agree on a corpus of " +
                  std::to_string(r.corpus_size) + " modules";
  bool ok = k.failed == 0 && k.applicable >= min_items && k.skipped.empty();
  if (k.applicable < min_items) d += ", fewer than " + std::to_string(min_items) + " constrained items";
  if (!k.skipped.empty()) d += ", skipped: " + k.skipped;
  if (max_seconds > 0) {
    d += ", " + std::to_string(s).substr(0, 5) + " s (limit " + std::to_string(static_cast<int>(max_seconds)) + " s)";
    ok = ok && s < max_seconds;
  }
  for (const auto& f : k.failures) d += "\n      failure: " + f.dump();
  return {ok, d};
}

}  // namespace

int main() {
  const CoefficientRing z = CoefficientRing::integers();
  const FiniteGroup c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3);

  criterion("worked example", [] {
    ExampleReport r = verify_worked_example(3);
    std::string d = std::to_string(r.assertions.size()) + " assertions";
    for (const auto& a : r.assertions)
      if (!a.pass) d += "; failed: " + a.name + " (" + a.observed + ")";
    d += ", " + std::to_string(r.seconds).substr(0, 5) + " s (limit 1 s)";
    return Outcome{r.pass() && r.assertions.size() == 6 && r.seconds < 1.0, d};
  });

  criterion("gorenstein criterion", [&] {
    return suite_criterion(config({c2, c3}, 100, 0, "gproj_criterion"), 100, 60);
  });

  criterion("weakly projective => fpd", [&] { return suite_criterion(config({c2, c3}, 100, 0, "cw_fpd"), 1); });

  criterion("gproj sequences split", [&] { return suite_criterion(config({c2, c3}, 100, 30, "gpi_split"), 50); });

  criterion("gproj orthogonal to fpd", [&] { return suite_criterion(config({c2, c3}, 100, 30, "gproj_orthog"), 50); });

  criterion("approximation triangle", [&] {
    SuiteConfig c = config({c2}, 100, 0, "approximation");
    GroupCorpus gc = build_corpus(c, 0);
    Outcome o = suite_criterion(c, 50);
    o.detail += " (" + std::to_string(gc.gproj.size()) + " Gorenstein projective, " + std::to_string(gc.fpd.size()) +
                " of finite projective dimension)";
    o.pass = o.pass && !gc.gproj.empty() && !gc.fpd.empty();
    return o;
  });

  criterion("fpd tensor", [&] { return suite_criterion(config({c2, c3}, 100, 30, "fpd_tensor"), 50); });

  criterion("betti of F2C2 over (Z/4)C2", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const CoefficientRing z4 = CoefficientRing::prime_power(2, 2);
    const FiniteGroup g = FiniteGroup::cyclic(2);
    GModule m = GModule::create(z4, g, {Int(2), Int(2)}, {Matrix::identity(2), Matrix{{0, 1}, {1, 0}}});
    ResolutionLog log = minimal_resolution(m, 10);
    ComplexityReport cx = complexity_estimate(log.betti);
    const double s = seconds_since(t0);
    std::string d = "betti [";
    for (std::size_t i = 0; i < log.betti.size(); ++i) d += (i ? "," : "") + std::to_string(log.betti[i]);
    d += "], complexity " + std::to_string(cx.complexity) + ", " + std::to_string(s).substr(0, 5) + " s (limit 5 s)";
    return Outcome{log.betti == std::vector<std::size_t>(10, 1) && cx.complexity == 1 && s < 5.0, d};
  });

  criterion("oracle: tate H^0", [&] {
    GModule r = trivial_module(z, c2);
    auto f = stable_hom(r, r, StableIdeal::Projectives).factors;
    std::string d = "stable End(Z) factors [";
    for (std::size_t i = 0; i < f.size(); ++i) d += (i ? "," : "") + f[i].str();
    return Outcome{f == std::vector<Int>{2}, d + "]"};
  });

  criterion("oracle: relative cosyzygy", [&] {
    GModule s = relative_cosyzygy(trivial_module(z, c2)).module;
    // the sign module is Z with x acting by -1; any rank one Z-free module is determined by that scalar
    bool ok = s.factors() == std::vector<Int>{0} && s.action(1) == Matrix{{-1}};
    return Outcome{ok, "factors " + io::ints_to_json(s.factors()).dump() + ", x acts by " +
                           (s.rank() == 1 ? s.action(1)(0, 0).str() : std::string("?"))};
  });

  criterion("oracle: smith vs minors", [&] {
    std::size_t agree = 0;
    std::string first_bad;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      SeededRng rng(seed);
      const std::size_t rows = rng.between(1, 4), cols = rng.between(1, 4);
      Matrix a(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.between(-12, 12);
      std::vector<Int> d = smith_normal_form(RMatrix(z, a)).diagonal();
      for (auto& x : d) x = abs(x);
      if (d == oracle::invariant_factors(a)) ++agree;
      else if (first_bad.empty()) first_bad = ", first mismatch at seed " + std::to_string(seed);
    }
    return Outcome{agree == 500, std::to_string(agree) + "/500 seeds" + first_bad};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
