#pragma once

// Named property checks over a seeded corpus, with a deterministic JSON report.

#include "relstab/corpus.hpp"
#include "relstab/decomposition.hpp"
#include "relstab/io.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace relstab {

struct SuiteConfig {
  std::uint64_t seed = 1;
  CoefficientRing ring = CoefficientRing::integers();
  std::vector<FiniteGroup> groups;
  std::size_t corpus_size = 25;  // modules per group
  long long max_factor = 8;
  std::size_t pairs = 25;  // pairs per group for the two-module checks
  std::vector<std::string> checks;
};

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"gproj_criterion", "cw_fpd",      "gpi_split",
                                              "gproj_orthog",    "approximation", "fpd_tensor",
                                              "cone",            "ext_shift",   "gproj_closure"};
  return names;
}

inline SuiteConfig suite_config_from_json(const io::json& j, const std::filesystem::path& base = {}) {
  SuiteConfig c;
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("ring")) c.ring = io::ring_from_json(j.at("ring"));
  if (j.contains("groups")) {
    for (const auto& g : j.at("groups")) c.groups.push_back(io::group_from_json(g, base));
  } else if (j.contains("group")) {
    c.groups.push_back(io::group_from_json(j.at("group"), base));
  } else {
    c.groups.push_back(FiniteGroup::cyclic(2));
  }
  c.corpus_size = j.value("corpus_size", c.corpus_size);
  c.max_factor = j.value("max_factor", c.max_factor);
  c.pairs = j.value("pairs", c.pairs);
  if (c.max_factor < 2) throw ValidationError("max_factor must be at least 2");
  if (j.contains("checks")) {
    for (const auto& name : j.at("checks")) {
      std::string s = name.get<std::string>();
      if (s == "all") {
        c.checks.insert(c.checks.end(), known_checks().begin(), known_checks().end());
        continue;
      }
      if (std::find(known_checks().begin(), known_checks().end(), s) == known_checks().end())
        throw ValidationError("unknown check " + s);
      c.checks.push_back(s);
    }
  } else {
    c.checks = known_checks();
  }
  return c;
}

struct CheckResult {
  explicit CheckResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t applicable = 0;  // items the property actually constrains
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string skipped;  // reason, when the check does not apply to the ring
  std::vector<io::json> failures;

  io::json to_json() const {
    io::json j{{"name", name}, {"applicable", applicable}, {"passed", passed}, {"failed", failed}};
    if (!skipped.empty()) j["skipped"] = skipped;
    j["failures"] = failures;
    return j;
  }
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::size_t corpus_size = 0;

  bool ok() const {
    for (const auto& c : checks)
      if (c.failed) return false;
    return true;
  }
  io::json to_json(const SuiteConfig& config) const {
    io::json groups = io::json::array(), out = io::json::array();
    for (const auto& g : config.groups) groups.push_back(g.name());
    for (const auto& c : checks) out.push_back(c.to_json());
    return {{"seed", config.seed},       {"ring", config.ring.name()}, {"groups", groups},
            {"corpus_size", corpus_size}, {"checks", out},             {"ok", ok()}};
  }
};

/// A corpus for one group plus the derived lists the pair checks draw from.
struct GroupCorpus {
  FiniteGroup group;
  std::vector<CorpusItem> items;
  std::vector<std::size_t> gproj, fpd;

  GroupCorpus(const FiniteGroup& g, std::vector<CorpusItem> it) : group(g), items(std::move(it)) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (is_gorenstein_projective(items[i].module)) gproj.push_back(i);
      if (has_finite_projective_dimension(items[i].module)) fpd.push_back(i);
    }
  }
};

namespace detail {

inline void record(CheckResult& r, bool ok, io::json failure) {
  ++r.applicable;
  if (ok) {
    ++r.passed;
  } else {
    ++r.failed;
    r.failures.push_back(std::move(failure));
  }
}

/// Runs `body` and turns library errors into recorded failures.
inline void guarded(CheckResult& r, const std::string& item, const std::function<bool(io::json&)>& body) {
  io::json detail{{"item", item}};
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail["error"] = e.what();
    ok = false;
  }
  record(r, ok, detail);
}

inline std::vector<std::pair<std::size_t, std::size_t>> draw_pairs(SeededRng& rng, const std::vector<std::size_t>& a,
                                                                   const std::vector<std::size_t>& b,
                                                                   std::size_t count) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (a.empty() || b.empty()) return out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(rng.pick(a), rng.pick(b));
  return out;
}

/// Random Z-combination of the generators of Hom_RG(m, n).
inline GModuleHom random_hom(SeededRng& rng, const GModule& m, const GModule& n) {
  HomGroup h = hom_group(m, n);
  Matrix f(n.rank(), m.rank());
  for (const auto& g : h.generators) f = f + g.matrix().scaled(rng.between(-2, 2));
  return GModuleHom::create(m, n, f);
}

/// 0 -> A -> X -> C -> 0 pushed out from 0 -> ΩC -> F -> C -> 0 along a random ΩC -> A.
inline std::pair<GModuleHom, GModuleHom> random_extension(SeededRng& rng, const GModule& a, const GModule& c) {
  Syzygy s = syzygy(c);
  GModuleHom phi = random_hom(rng, s.module, a);
  DirectSum af = direct_sum_data(a, s.cover.free);
  Matrix rel = af.inject_first.matrix() * phi.matrix() - af.inject_second.matrix() * s.inclusion.matrix();
  GModuleHom::create(s.module, af.module, rel);
  Presented px = present(af.module.ring(), af.module.group(), af.module.moduli(), af.module.actions(), std::nullopt, rel);
  GModuleHom into = GModuleHom::create(a, px.module, px.projection() * af.inject_first.matrix());
  GModuleHom onto = GModuleHom::create(px.module, c, compose(s.cover.map, af.project_second).matrix() * px.lifts());
  return {into, onto};
}

}  // namespace detail

inline CheckResult check_gproj_criterion(const GroupCorpus& gc) {
  CheckResult r{"gproj_criterion"};
  for (const auto& item : gc.items) {
    if (!item.module.ring().is_integers()) {
      r.skipped = "the Ext criterion at Gorenstein dimension 1 is stated over Z";
      return r;
    }
    detail::guarded(r, item.name, [&](io::json& d) {
      GModule rg = free_module(item.module.ring(), item.module.group(), 1);
      auto e1 = ext_group(item.module, rg, 1), e2 = ext_group(item.module, rg, 2);
      bool gp = is_gorenstein_projective(item.module);
      d["gproj"] = gp;
      d["ext1"] = io::ints_to_json(e1);
      d["ext2"] = io::ints_to_json(e2);
      return gp == (e1.empty() && e2.empty());
    });
  }
  return r;
}

inline CheckResult check_cw_fpd(const GroupCorpus& gc) {
  CheckResult r{"cw_fpd"};
  for (const auto& item : gc.items) {
    if (!item.module.ring().is_integers()) {
      r.skipped = "weakly projective implies finite projective dimension only for coefficients of finite global dimension";
      return r;
    }
    if (!is_weakly_projective(item.module)) continue;
    detail::guarded(r, item.name, [&](io::json& d) {
      d["module"] = io::module_to_json(item.module);
      return has_finite_projective_dimension(item.module);
    });
  }
  return r;
}

inline CheckResult check_gpi_split(const GroupCorpus& gc, SeededRng& rng, std::size_t pairs) {
  CheckResult r{"gpi_split"};
  for (auto [ai, ci] : detail::draw_pairs(rng, gc.gproj, gc.gproj, pairs)) {
    const GModule& a = gc.items[ai].module;
    const GModule& c = gc.items[ci].module;
    detail::guarded(r, gc.items[ai].name + " -> ? -> " + gc.items[ci].name, [&](io::json&) {
      auto [into, onto] = detail::random_extension(rng, a, c);
      Syzygy s = syzygy(c);
      return is_r_split_exact(into, onto) && is_r_split_exact(s.inclusion, s.cover.map);
    });
  }
  return r;
}

inline CheckResult check_gproj_orthog(const GroupCorpus& gc, SeededRng& rng, std::size_t pairs) {
  CheckResult r{"gproj_orthog"};
  for (auto [ai, li] : detail::draw_pairs(rng, gc.gproj, gc.fpd, pairs)) {
    detail::guarded(r, gc.items[ai].name + " | " + gc.items[li].name, [&](io::json& d) {
      auto rep = stable_hom(gc.items[ai].module, gc.items[li].module, StableIdeal::Projectives);
      d["factors"] = io::ints_to_json(rep.factors);
      return rep.factors.empty();
    });
  }
  return r;
}

inline CheckResult check_approximation(const GroupCorpus& gc) {
  CheckResult r{"approximation"};
  for (const auto& item : gc.items) {
    if (!item.module.ring().is_integers()) {
      r.skipped = "approximation triangles are built over Z";
      return r;
    }
    detail::guarded(r, item.name, [&](io::json& d) {
      ApproximationTriangle t = gproj_approximation(item.module);
      r_split_approximation(item.module);
      bool ok = true;
      if (is_gorenstein_projective(item.module)) {
        bool iso = certify_stable_iso(t.map, StableIdeal::Projectives).has_value();
        d["stable_iso"] = iso;
        ok = ok && iso;
      }
      if (has_finite_projective_dimension(item.module)) {
        GModule p = psi(item.module);
        d["psi_factors"] = io::ints_to_json(p.factors());
        ok = ok && p.is_zero();
      }
      return ok;
    });
  }
  return r;
}

inline CheckResult check_fpd_tensor_pairs(const GroupCorpus& gc, SeededRng& rng, std::size_t pairs) {
  CheckResult r{"fpd_tensor"};
  for (auto [mi, li] : detail::draw_pairs(rng, gc.gproj, gc.fpd, pairs)) {
    detail::guarded(r, gc.items[mi].name + " (x) " + gc.items[li].name, [&](io::json& d) {
      d["gproj"] = io::module_to_json(gc.items[mi].module);
      d["fpd"] = io::module_to_json(gc.items[li].module);
      return check_fpd_tensor(gc.items[mi].module, gc.items[li].module);
    });
  }
  return r;
}

/// The relative cone sequence is R-split, so restrictions satisfy M ⊕ L' ≅ ι^!ι_*M ⊕ N over R.
inline CheckResult check_cone(const GroupCorpus& gc, SeededRng& rng, std::size_t pairs) {
  CheckResult r{"cone"};
  std::vector<std::size_t> all(gc.items.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (auto [mi, ni] : detail::draw_pairs(rng, all, all, pairs)) {
    const GModule& m = gc.items[mi].module;
    const GModule& n = gc.items[ni].module;
    detail::guarded(r, gc.items[mi].name + " -> " + gc.items[ni].name, [&](io::json& d) {
      GModuleHom f = detail::random_hom(rng, m, n);
      Cokernel cone = relative_cone(f);
      std::vector<Int> lhs = m.factors(), rhs = n.factors();
      lhs.insert(lhs.end(), cone.module.factors().begin(), cone.module.factors().end());
      const auto co = coinduction(m.ring(), m.group(), m.factors()).module.factors();
      rhs.insert(rhs.end(), co.begin(), co.end());
      d["cone_factors"] = io::ints_to_json(cone.module.factors());
      return elementary_divisors(lhs) == elementary_divisors(rhs);
    });
  }
  return r;
}

inline CheckResult check_ext_shift(const GroupCorpus& gc, SeededRng& rng, std::size_t pairs) {
  CheckResult r{"ext_shift"};
  std::vector<std::size_t> all(gc.items.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (auto [mi, ni] : detail::draw_pairs(rng, all, all, pairs)) {
    detail::guarded(r, gc.items[mi].name + " , " + gc.items[ni].name, [&](io::json& d) {
      const GModule& m = gc.items[mi].module;
      const GModule& n = gc.items[ni].module;
      auto e2 = ext_group(m, n, 2);
      auto e1 = ext_group(syzygy(m).module, n, 1);
      d["ext2"] = io::ints_to_json(e2);
      d["ext1_of_syzygy"] = io::ints_to_json(e1);
      return e1 == e2;
    });
  }
  return r;
}

inline CheckResult check_gproj_closure(const GroupCorpus& gc, SeededRng& rng, std::size_t pairs) {
  CheckResult r{"gproj_closure"};
  for (auto [ai, bi] : detail::draw_pairs(rng, gc.gproj, gc.gproj, pairs)) {
    detail::guarded(r, gc.items[ai].name + " , " + gc.items[bi].name, [&](io::json&) {
      const GModule& a = gc.items[ai].module;
      const GModule& b = gc.items[bi].module;
      return is_gorenstein_projective(tensor_product(a, b)) && is_gorenstein_projective(internal_hom(a, b).module());
    });
  }
  return r;
}

inline CheckResult run_check(const std::string& name, const GroupCorpus& gc, SeededRng& rng, std::size_t pairs) {
  if (name == "gproj_criterion") return check_gproj_criterion(gc);
  if (name == "cw_fpd") return check_cw_fpd(gc);
  if (name == "gpi_split") return check_gpi_split(gc, rng, pairs);
  if (name == "gproj_orthog") return check_gproj_orthog(gc, rng, pairs);
  if (name == "approximation") return check_approximation(gc);
  if (name == "fpd_tensor") return check_fpd_tensor_pairs(gc, rng, pairs);
  if (name == "cone") return check_cone(gc, rng, pairs);
  if (name == "ext_shift") return check_ext_shift(gc, rng, pairs);
  if (name == "gproj_closure") return check_gproj_closure(gc, rng, pairs);
  throw ValidationError("unknown check " + name);
}

inline void merge(CheckResult& into, CheckResult from) {
  into.applicable += from.applicable;
  into.passed += from.passed;
  into.failed += from.failed;
  if (into.skipped.empty()) into.skipped = from.skipped;
  for (auto& f : from.failures) into.failures.push_back(std::move(f));
}

/// The corpus for group number `index` of the config.
inline GroupCorpus build_corpus(const SuiteConfig& c, std::size_t index) {
  const FiniteGroup& g = c.groups.at(index);
  return GroupCorpus(g, generate_corpus(c.seed * 1000003ULL + index, c.ring, g, c.corpus_size, c.max_factor));
}

inline SuiteReport run_suite(const SuiteConfig& c) {
  SuiteReport report;
  if (c.checks.empty()) return report;
  std::vector<CheckResult> results;
  for (const auto& name : c.checks) results.push_back(CheckResult{name});
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
    GroupCorpus gc = build_corpus(c, gi);
    report.corpus_size += gc.items.size();
    for (std::size_t k = 0; k < c.checks.size(); ++k) {
      SeededRng rng(c.seed ^ (0x9e3779b97f4a7c15ULL * (gi + 1)) ^ (k + 1));
      merge(results[k], run_check(c.checks[k], gc, rng, c.pairs));
    }
  }
  report.checks = std::move(results);
  return report;
}

}  // namespace relstab
