// relstab: command-line front end for the module library.
// Exit codes: 0 success, 1 mathematical failure, 2 bad input, 3 unsupported regime.

#include "relstab/relstab.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace relstab;
using io::json;
namespace fs = std::filesystem;

struct Options {
  bool json_out = false;
  std::string out_file;
};

// Thrown by commands whose mathematical check came out negative.
struct CheckFailed {
  std::string what;
};

std::string ints_text(const std::vector<Int>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ']';
  return s.str();
}

std::string matrix_text(const Matrix& m) { return io::matrix_to_json(m).dump(); }

std::string ring_text(const CoefficientRing& r) {
  if (r.is_integers()) return "Z";
  std::ostringstream s;
  s << "Z/" << r.p() << '^' << r.n();
  return s.str();
}

std::string group_text(const FiniteGroup& g) {
  return (g.name().empty() ? std::string("G") : g.name()) + " (order " + std::to_string(g.order()) + ")";
}

void print_module(const GModule& m) {
  std::cout << "ring " << ring_text(m.ring()) << ", group " << group_text(m.group()) << '\n';
  std::cout << "factors " << ints_text(m.factors()) << '\n';
  for (std::size_t g : m.group().generators())
    std::cout << "action " << m.group().label(g) << ' ' << matrix_text(m.action(g)) << '\n';
}

std::string pdim_text(const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : "infinite"; }

json pdim_json(const std::optional<std::size_t>& d) { return d ? json(*d) : json("infinite"); }

void emit(const Options& o, const json& j, const std::function<void()>& text) {
  if (o.json_out)
    std::cout << j.dump(2) << '\n';
  else
    text();
}

void write_module(const Options& o, const GModule& m) {
  if (o.out_file.empty()) return;
  std::ofstream f(o.out_file);
  if (!f) throw ValidationError("cannot write " + o.out_file);
  f << io::module_to_json(m).dump(2) << '\n';
}

void emit_module(const Options& o, const GModule& m) {
  write_module(o, m);
  emit(o, io::module_to_json(m), [&] { print_module(m); });
}

json profile_json(const GModule& m) {
  return {{"restriction", io::ints_to_json(restriction(m))},
          {"projective", is_projective(m)},
          {"weakly_projective", is_weakly_projective(m)},
          {"gproj", is_gorenstein_projective(m)},
          {"pdim", pdim_json(finite_projective_dimension(m))}};
}

void print_profile(const json& p) {
  std::cout << "restriction " << p["restriction"].dump() << '\n'
            << "projective " << p["projective"].dump() << '\n'
            << "weakly_projective " << p["weakly_projective"].dump() << '\n'
            << "gproj " << p["gproj"].dump() << '\n'
            << "pdim " << (p["pdim"].is_string() ? p["pdim"].get<std::string>() : p["pdim"].dump()) << '\n';
}

void require_same_context(const GModule& a, const GModule& b) {
  if (!a.same_context(b)) throw ValidationError("modules live over different rings or groups");
}

std::vector<GModule> load_all(const std::vector<std::string>& files) {
  std::vector<GModule> out;
  for (const auto& f : files) out.push_back(io::load_module(f));
  for (std::size_t i = 1; i < out.size(); ++i) require_same_context(out[0], out[i]);
  return out;
}

int verify_example(const Options& o, long long shift) {
  ExampleReport r = verify_worked_example(shift);
  json items = json::array();
  for (const auto& a : r.assertions) items.push_back({{"assertion", a.name}, {"pass", a.pass}, {"observed", a.observed}});
  emit(o, {{"shift", shift}, {"assertions", items}, {"pass", r.pass()}, {"seconds", r.seconds}}, [&] {
    for (const auto& a : r.assertions) std::cout << (a.pass ? "PASS " : "FAIL ") << a.name << "  (" << a.observed << ")\n";
    std::cout << (r.pass() ? "all assertions hold" : "mismatch against the expected profile") << '\n';
  });
  return r.pass() ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"Integral and modular group representations: relative stable and Gorenstein tools"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "Machine-readable output");
  std::function<int()> action;

  // group
  auto* group = app.add_subcommand("group", "Finite groups");
  group->require_subcommand(1);
  std::string group_file;
  auto* gv = group->add_subcommand("validate", "Check a multiplication table");
  gv->add_option("file", group_file)->required();
  gv->callback([&] {
    action = [&] {
      FiniteGroup g = io::group_from_json(io::read_file(group_file), fs::path(group_file).parent_path());
      emit(o, io::group_to_json(g), [&] { std::cout << "valid group " << group_text(g) << '\n'; });
      return 0;
    };
  });

  // module
  auto* module = app.add_subcommand("module", "Single-module commands");
  module->require_subcommand(1);
  std::string module_file;
  auto* mv = module->add_subcommand("validate", "Check factors and action");
  mv->add_option("file", module_file)->required();
  mv->callback([&] {
    action = [&] {
      GModule m = io::load_module(module_file);  // loading validates factors and action
      emit(o, io::module_to_json(m), [&] {
        std::cout << "valid module\n";
        print_module(m);
      });
      return 0;
    };
  });
  auto analyze = [&] {
    GModule m = io::load_module(module_file);
    json p = profile_json(m);
    emit(o, p, [&] { print_profile(p); });
    return 0;
  };
  auto* ma = module->add_subcommand("analyze", "Projectivity profile");
  ma->add_option("file", module_file)->required();
  ma->callback([&] { action = analyze; });
  auto* top_analyze = app.add_subcommand("analyze", "Alias of module analyze");
  top_analyze->add_option("file", module_file)->required();
  top_analyze->callback([&] { action = analyze; });
  auto* mf = module->add_subcommand("fingerprint", "Isomorphism invariants");
  mf->add_option("file", module_file)->required();
  mf->callback([&] {
    action = [&] {
      Fingerprint f = fingerprint(io::load_module(module_file));
      json j = io::fingerprint_to_json(f);
      emit(o, j, [&] {
        for (auto& [k, v] : j.items()) std::cout << k << ' ' << v.dump() << '\n';
      });
      return 0;
    };
  });

  // op
  auto* op = app.add_subcommand("op", "Module constructions");
  op->require_subcommand(1);
  std::vector<std::string> op_files;
  auto add_op = [&](CLI::App* parent, const std::string& name, std::size_t arity, auto build) {
    auto* c = parent->add_subcommand(name, "");
    c->add_option("files", op_files)->required()->expected(static_cast<int>(arity));
    c->add_option("-o,--out", o.out_file, "Also write the result as module JSON");
    c->callback([&, build] {
      action = [&, build] {
        std::vector<GModule> ms = load_all(op_files);
        emit_module(o, build(ms));
        return 0;
      };
    });
    return c;
  };
  auto tensor = [](const std::vector<GModule>& ms) { return tensor_product(ms[0], ms[1]); };
  add_op(op, "tensor", 2, tensor)->description("Tensor product over R with diagonal action");
  add_op(op, "hom", 2, [](const std::vector<GModule>& ms) { return internal_hom(ms[0], ms[1]).module(); })
      ->description("Hom over R with conjugation action");
  add_op(op, "dual", 1, [](const std::vector<GModule>& ms) { return dual(ms[0]); })->description("Hom over R into R");
  add_op(op, "sum", 2, [](const std::vector<GModule>& ms) { return direct_sum(ms[0], ms[1]); })
      ->description("Direct sum");
  add_op(&app, "tensor", 2, tensor)->description("Alias of op tensor");

  // hom
  std::vector<std::string> pair_files;
  auto* hom = app.add_subcommand("hom", "Equivariant Hom group");
  hom->add_option("files", pair_files)->required()->expected(2);
  hom->callback([&] {
    action = [&] {
      auto ms = load_all(pair_files);
      HomGroup h = hom_group(ms[0], ms[1]);
      json gens = json::array();
      for (const auto& g : h.generators) gens.push_back(io::matrix_to_json(g.matrix()));
      emit(o, {{"factors", io::ints_to_json(h.factors)}, {"generators", gens}}, [&] {
        std::cout << "factors " << ints_text(h.factors) << '\n';
        for (const auto& g : h.generators) std::cout << "generator " << matrix_text(g.matrix()) << '\n';
      });
      return 0;
    };
  });

  // stable-hom
  std::string ideal = "proj";
  auto* sh = app.add_subcommand("stable-hom", "Hom modulo maps factoring through (weakly) projectives");
  sh->add_option("files", pair_files)->required()->expected(2);
  sh->add_option("--ideal", ideal)->check(CLI::IsMember({"proj", "wproj"}));
  sh->callback([&] {
    action = [&] {
      auto ms = load_all(pair_files);
      StableHomReport r =
          stable_hom(ms[0], ms[1], ideal == "proj" ? StableIdeal::Projectives : StableIdeal::WeaklyProjectives);
      json j = io::stable_hom_to_json(r);
      emit(o, j, [&] {
        std::cout << "ideal " << to_string(r.ideal) << '\n' << "factors " << ints_text(r.factors) << '\n';
      });
      return 0;
    };
  });

  // syzygy
  std::string kind = "abelian";
  std::size_t steps = 1;
  auto* sy = app.add_subcommand("syzygy", "Iterated syzygies and cosyzygies");
  sy->add_option("file", module_file)->required();
  sy->add_option("--kind", kind)->check(CLI::IsMember({"abelian", "relative", "relative-co"}));
  sy->add_option("-n", steps, "Number of steps");
  sy->add_option("-o,--out", o.out_file, "Also write the result as module JSON");
  sy->callback([&] {
    action = [&] {
      GModule m = io::load_module(module_file);
      for (std::size_t i = 0; i < steps; ++i) {
        if (kind == "abelian")
          m = syzygy(m).module;
        else if (kind == "relative")
          m = relative_syzygy(m).module;
        else
          m = relative_cosyzygy(m).module;
      }
      emit_module(o, m);
      return 0;
    };
  });

  // ext
  std::size_t degree = 1;
  auto* ext = app.add_subcommand("ext", "Ext over RG");
  ext->add_option("files", pair_files)->required()->expected(2);
  ext->add_option("-i", degree, "Degree")->required();
  ext->callback([&] {
    action = [&] {
      auto ms = load_all(pair_files);
      auto e = ext_group(ms[0], ms[1], degree);
      emit(o, {{"degree", degree}, {"factors", io::ints_to_json(e)}}, [&] {
        std::cout << "Ext^" << degree << " factors " << ints_text(e) << '\n';
      });
      return 0;
    };
  });

  // pdim
  auto* pd = app.add_subcommand("pdim", "Projective dimension (0, 1 or infinite)");
  pd->add_option("file", module_file)->required();
  pd->callback([&] {
    action = [&] {
      auto d = finite_projective_dimension(io::load_module(module_file));
      emit(o, {{"pdim", pdim_json(d)}}, [&] { std::cout << "pdim " << pdim_text(d) << '\n'; });
      return 0;
    };
  });

  // gproj test
  auto* gp = app.add_subcommand("gproj", "Gorenstein projectivity");
  gp->require_subcommand(1);
  auto* gpt = gp->add_subcommand("test", "Is the module Gorenstein projective");
  gpt->add_option("file", module_file)->required();
  gpt->callback([&] {
    action = [&] {
      bool g = is_gorenstein_projective(io::load_module(module_file));
      emit(o, {{"gproj", g}}, [&] { std::cout << "gproj " << (g ? "true" : "false") << '\n'; });
      return 0;
    };
  });

  // approx gproj
  bool r_split = false;
  auto* ap = app.add_subcommand("approx", "Approximation triangles");
  ap->require_subcommand(1);
  auto* apg = ap->add_subcommand("gproj", "Gorenstein projective approximation");
  apg->add_option("file", module_file)->required();
  apg->add_flag("--r-split", r_split, "Add the counit so the map splits over R");
  apg->add_option("-o,--out", o.out_file, "Also write the approximating module as JSON");
  apg->callback([&] {
    action = [&] {
      GModule m = io::load_module(module_file);
      ApproximationTriangle t = r_split ? r_split_approximation(m) : gproj_approximation(m);
      t.verify();
      write_module(o, t.source);
      json j{{"r_split", t.r_split},
             {"gproj_part", io::module_to_json(t.gproj_part)},
             {"source", io::module_to_json(t.source)},
             {"map", io::hom_to_json(t.map)},
             {"kernel", io::module_to_json(t.kernel)},
             {"kernel_inclusion", io::hom_to_json(t.kernel_inclusion)},
             {"kernel_pdim", pdim_json(finite_projective_dimension(t.kernel))}};
      if (t.witness) j["witness"] = io::matrix_to_json(t.witness->matrix());
      emit(o, j, [&] {
        std::cout << "A factors " << ints_text(t.gproj_part.factors()) << '\n'
                  << "source factors " << ints_text(t.source.factors()) << '\n'
                  << "kernel factors " << ints_text(t.kernel.factors()) << ", pdim "
                  << pdim_text(finite_projective_dimension(t.kernel)) << '\n'
                  << "map " << matrix_text(t.map.matrix()) << '\n'
                  << (t.r_split ? "R-split, witness verified\n" : "");
      });
      return 0;
    };
  });

  // psi
  auto* ps = app.add_subcommand("psi", "Gorenstein projective part with free summands stripped");
  ps->add_option("file", module_file)->required();
  ps->add_option("-o,--out", o.out_file, "Also write the result as module JSON");
  ps->callback([&] {
    action = [&] {
      emit_module(o, psi(io::load_module(module_file)));
      return 0;
    };
  });

  // check fpd-tensor
  auto* ck = app.add_subcommand("check", "Property checks on given modules");
  ck->require_subcommand(1);
  auto* cft = ck->add_subcommand("fpd-tensor", "M Gorenstein projective, L of finite pdim: M (x) L has finite pdim");
  cft->add_option("files", pair_files)->required()->expected(2);
  cft->callback([&] {
    action = [&] {
      auto ms = load_all(pair_files);
      bool ok = check_fpd_tensor(ms[0], ms[1]);
      emit(o, {{"fpd_tensor", ok}}, [&] { std::cout << "finite pdim of tensor " << (ok ? "true" : "false") << '\n'; });
      if (!ok) throw CheckFailed{"tensor product has infinite projective dimension"};
      return 0;
    };
  });

  // betti
  std::size_t betti_steps = 10;
  auto* bt = app.add_subcommand("betti", "Minimal resolution ranks and complexity over local group algebras");
  bt->add_option("file", module_file)->required();
  bt->add_option("-n", betti_steps, "Number of steps");
  bt->callback([&] {
    action = [&] {
      ResolutionLog log = minimal_resolution(io::load_module(module_file), betti_steps);
      ComplexityReport c = complexity_estimate(log.betti);
      json j{{"betti", log.betti},
             {"complexity", c.complexity},
             {"resolved", c.resolved},
             {"window_start", c.window_start},
             {"residuals", c.residuals}};
      emit(o, j, [&] {
        std::cout << "betti " << json(log.betti).dump() << '\n' << "complexity " << c.complexity
                  << (c.resolved ? "" : " (no polynomial fit up to degree 3)") << '\n';
      });
      return 0;
    };
  });

  // suite run
  std::string config_file;
  std::optional<std::uint64_t> seed;
  auto* su = app.add_subcommand("suite", "Seeded property suites");
  su->require_subcommand(1);
  auto* sr = su->add_subcommand("run", "Run the checks named in a config");
  sr->add_option("--config", config_file)->required();
  sr->add_option("--seed", seed);
  sr->callback([&] {
    action = [&] {
      SuiteConfig c = suite_config_from_json(io::read_file(config_file), fs::path(config_file).parent_path());
      if (seed) c.seed = *seed;
      SuiteReport r = run_suite(c);
      json j = r.to_json(c);
      emit(o, j, [&] {
        std::cout << "corpus " << r.corpus_size << " modules\n";
        for (const auto& ch : r.checks) {
          std::cout << ch.name << ": ";
          if (!ch.skipped.empty())
            std::cout << "skipped (" << ch.skipped << ")\n";
          else
            std::cout << ch.passed << " passed, " << ch.failed << " failed of " << ch.applicable << '\n';
          for (const auto& f : ch.failures) std::cout << "  failure " << f.dump() << '\n';
        }
      });
      return r.ok() ? 0 : 1;
    };
  });

  // paper verify-example
  long long shift = 3;
  auto* pp = app.add_subcommand("paper", "Worked example over ZC2");
  pp->require_subcommand(1);
  auto* pv = pp->add_subcommand("verify-example", "Check the six stated properties of coker(x - a)");
  pv->add_option("--shift", shift, "The a in x - a");
  pv->callback([&] { action = [&] { return verify_example(o, shift); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return action ? action() : 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("RELSTAB_MAX_ENTRY_BITS")) {
    try {
      std::size_t pos = 0;
      const unsigned long bits = std::stoul(cap, &pos);
      if (pos != std::string(cap).size() || bits == 0) throw std::invalid_argument(cap);
      relstab::set_max_entry_bits(bits);
    } catch (const std::exception&) {
      std::cerr << "error: RELSTAB_MAX_ENTRY_BITS must be a positive integer\n";
      return 2;
    }
  }
  try {
    return run(argc, argv);
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what << '\n';
    return 1;
  } catch (const relstab::EntryOverflow& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const relstab::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const relstab::RegimeError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const relstab::Error& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
