#pragma once

// Homological tests and invariants in the abelian and the R-split exact structures.

#include "relstab/constructions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relstab {

/// An equivariant s with π ∘ s = id for π : ι*V -> M.
/// Solved on the kernel side: s exists iff K = ker π is a retract of ι*V, and a retraction
/// ρ is determined by an R-linear V -> K and checked on RG-generators of K only.
inline std::optional<GModuleHom> section_from_induced(const GModuleHom& pi, const Induced& ind) {
  const GModule& m = pi.target();
  if (!is_surjective(pi)) return std::nullopt;
  Kernel k = kernel(pi);
  const GModule& km = k.module;
  const std::size_t kv = ind.base.rank(), n = m.group().order();
  auto pre = detail::solve_integer_congruences(pi.matrix(), Matrix::identity(m.rank()), m.moduli());
  if (!pre) throw Error("surjective map has no R-linear preimages");
  Matrix rho(km.rank(), ind.module().rank());
  if (km.rank() > 0) {
    const Matrix g = free_cover(km).generators;
    const Matrix image = ind.lifts() * k.inclusion.matrix() * g;
    LinearHomSystem sys;
    std::size_t u = sys.add_unknown(ind.base, km, false);
    std::vector<LinearHomSystem::Term> terms;
    for (std::size_t h = 0; h < n; ++h) terms.push_back({u, km.action(h), image.block(h * kv, 0, kv, g.cols())});
    sys.add_equation(terms, g, km.moduli());
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    Matrix amb(km.rank(), n * kv);
    for (std::size_t h = 0; h < n; ++h) amb.set_block(0, h * kv, km.action(h) * (*sol)[0].matrix());
    rho = amb * ind.lifts();
  }
  const Matrix p = pre->particular;
  GModuleHom s = GModuleHom::create(m, ind.module(), p - k.inclusion.matrix() * (rho * p));
  if (!equal_as_maps(compose(pi, s), GModuleHom::identity(m))) throw Error("section failed to verify");
  return s;
}

inline Induced free_data(const CoefficientRing& ring, const FiniteGroup& group, std::size_t rank) {
  return induced_data(ring, group, std::vector<Int>(rank, Int(0)));
}

/// An equivariant section of the free cover, if M is projective.
inline std::optional<GModuleHom> projectivity_witness(const GModule& m) {
  // projectives are R-free, and over Z their rank is a multiple of |G|
  for (const auto& f : m.factors())
    if (f != 0) return std::nullopt;
  if (m.ring().is_integers() && m.rank() % m.group().order() != 0) return std::nullopt;
  FreeCover c = free_cover(m);
  return section_from_induced(c.map, free_data(m.ring(), m.group(), c.generators.cols()));
}

inline bool is_projective(const GModule& m) { return projectivity_witness(m).has_value(); }

/// An equivariant section of the counit, if M is weakly projective.
inline std::optional<GModuleHom> weak_projectivity_witness(const GModule& m) {
  return section_from_induced(counit(m).map, induced_data(m.ring(), m.group(), m.factors()));
}

inline bool is_weakly_projective(const GModule& m) { return weak_projectivity_witness(m).has_value(); }

/// Over R = Z or Z/p^n an RG-module is Gorenstein projective exactly when it is R-free.
inline bool is_gorenstein_projective(const GModule& m) {
  for (const auto& f : m.factors())
    if (f != 0) return false;
  return true;
}

/// 0 -> Ω -> F -> M -> 0 built on the free cover.
struct Syzygy {
  GModule module;
  GModuleHom inclusion;
  FreeCover cover;
};

inline Syzygy syzygy(const GModule& m) {
  FreeCover c = free_cover(m);
  Kernel k = kernel(c.map);
  return {k.module, k.inclusion, std::move(c)};
}

/// A relative (co)syzygy with the R-split sequence it comes from.
struct RelativeStep {
  GModule module;
  GModuleHom first, second;  // 0 -> A -first-> B -second-> C -> 0
};

/// ker(ι*ι_*M -> M).
inline RelativeStep relative_syzygy(const GModule& m) {
  SplitMap c = counit(m);
  Kernel k = kernel(c.map);
  if (!is_r_split_exact(k.inclusion, c.map)) throw Error("relative syzygy sequence is not R-split");
  return {k.module, k.inclusion, c.map};
}

/// coker(M -> ι^!ι_*M).
inline RelativeStep relative_cosyzygy(const GModule& m) {
  SplitMap u = unit(m);
  Cokernel c = cokernel(u.map);
  if (!is_r_split_exact(u.map, c.projection)) throw Error("relative cosyzygy sequence is not R-split");
  return {c.module, u.map, c.projection};
}

namespace detail {

/// RG -> M, r -> r·v.
inline GModuleHom cyclic_map(const GModule& m, const Matrix& v) {
  const std::size_t n = m.group().order();
  GModule f = free_module(m.ring(), m.group(), 1);
  Matrix map(m.rank(), n);
  for (std::size_t h = 0; h < n; ++h) map.set_block(0, h, m.action(h) * v);
  return GModuleHom::create(f, m, map);
}

/// Whether the coefficient vector u (indexed by group elements) is a unit of RG.
inline bool is_unit_of_group_algebra(const CoefficientRing& ring, const FiniteGroup& group, const Matrix& u) {
  AlgebraElement a(ring, group, std::vector<Int>(u.data().begin(), u.data().end()));
  Matrix r = right_multiplication(a);
  std::vector<Int> moduli(group.order(), ring.effective(0));
  return solve_integer_congruences(r, Matrix::identity(group.order()), moduli).has_value();
}

/// Finds v in M and φ: M -> RG with φ(v) a unit, i.e. a split copy of RG inside M.
inline std::optional<Matrix> free_summand_generator(const GModule& m) {
  const std::size_t k = m.rank();
  std::vector<Matrix> phis, vs;
  for (const auto& g : free_data(m.ring(), m.group(), 1).spanning_maps(m)) phis.push_back(g.matrix());
  for (std::size_t j = 0; j < k; ++j) {
    Matrix e(k, 1);
    e(j, 0) = 1;
    vs.push_back(e);
  }
  // Over a local RG the basis pairs decide the question; otherwise widen to small combinations.
  const bool local = m.ring().is_prime_power() && m.group().is_p_group(m.ring().p());
  if (!local) {
    const std::size_t np = phis.size(), nv = vs.size();
    for (std::size_t a = 0; a < np; ++a)
      for (std::size_t b = a + 1; b < np; ++b) {
        phis.push_back(phis[a] + phis[b]);
        phis.push_back(phis[a] - phis[b]);
      }
    for (std::size_t a = 0; a < nv; ++a)
      for (std::size_t b = a + 1; b < nv; ++b) {
        vs.push_back(vs[a] + vs[b]);
        vs.push_back(vs[a] - vs[b]);
      }
  }
  for (const auto& v : vs)
    for (const auto& phi : phis)
      if (is_unit_of_group_algebra(m.ring(), m.group(), phi * v)) return v;
  return std::nullopt;
}

}  // namespace detail

/// M with split free summands removed; projective modules normalize to zero.
struct Stripped {
  GModule module;
  std::size_t free_rank = 0;  // number of RG summands split off
  bool projective = false;    // input was projective and normalized to zero
};

/// Repeatedly splits off copies of RG. Exhaustive over local group algebras, a bounded search otherwise.
inline Stripped strip_free_summands(const GModule& m) {
  Stripped out{m};
  while (!out.module.is_zero()) {
    if (is_projective(out.module)) {
      out.projective = true;
      out.module = GModule::create(m.ring(), m.group(), {}, std::vector<Matrix>(m.group().order(), Matrix(0, 0)));
      break;
    }
    auto v = detail::free_summand_generator(out.module);
    if (!v) break;
    out.module = cokernel(detail::cyclic_map(out.module, *v)).module;
    ++out.free_rank;
  }
  return out;
}

/// Abelian cosyzygy over self-injective coefficients: (Ω(M^∨))^∨ with free summands stripped.
inline GModule cosyzygy_selfinjective(const GModule& m) {
  if (!m.ring().is_prime_power()) throw RegimeError("cosyzygy via duality needs self-injective coefficients Z/p^n");
  return strip_free_summands(dual(syzygy(dual(m)).module)).module;
}

/// The resolution F_s -> F_{s-1} -> ... -> F_0 -> M by iterated free covers.
struct FreeResolution {
  std::vector<GModule> free;          // F_0, F_1, ...
  std::vector<GModuleHom> augment;    // F_0 -> M
  std::vector<GModuleHom> d;          // d[s-1] : F_s -> F_{s-1}
  std::vector<std::size_t> rank;      // RG-rank of each F_s
};

inline FreeResolution free_resolution(const GModule& m, std::size_t length) {
  FreeResolution out;
  Syzygy s = syzygy(m);
  out.free.push_back(s.cover.free);
  out.augment.push_back(s.cover.map);
  out.rank.push_back(s.cover.generators.cols());
  for (std::size_t step = 1; step <= length; ++step) {
    Syzygy next = syzygy(s.module);
    out.free.push_back(next.cover.free);
    out.d.push_back(compose(s.inclusion, next.cover.map));
    out.rank.push_back(next.cover.generators.cols());
    s = std::move(next);
  }
  return out;
}

namespace detail {

/// Hom(d, N) : N^{r_prev} -> N^{r} for d : RG^r -> RG^{r_prev}, using Hom_RG(RG^r, N) = N^r.
inline Matrix hom_into(const GModuleHom& d, std::size_t r, std::size_t r_prev, const GModule& n) {
  const std::size_t k = n.rank(), order = n.group().order();
  Matrix out(r * k, r_prev * k);
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j < r_prev; ++j) {
      Matrix block(k, k);
      for (std::size_t h = 0; h < order; ++h) {
        const Int& c = d.matrix()(h * r_prev + j, l);
        if (c != 0) block = block + n.action(h).scaled(c);
      }
      out.set_block(l * k, j * k, block);
    }
  return out;
}

}  // namespace detail

/// Ext^i_RG(M, N) for i >= 1 from the free-cover resolution of M.
inline std::vector<Int> ext_group(const GModule& m, const GModule& n, std::size_t i) {
  if (i == 0) throw ValidationError("ext_group: degree must be at least 1");
  if (!m.same_context(n)) throw ValidationError("ext_group: ring/group mismatch");
  FreeResolution res = free_resolution(m, i + 1);
  auto moduli = [&](std::size_t r) { return detail::repeat(n.moduli(), r); };
  Matrix d_in = detail::hom_into(res.d[i - 1], res.rank[i], res.rank[i - 1], n);
  Matrix d_out = detail::hom_into(res.d[i], res.rank[i + 1], res.rank[i], n);
  auto mid = moduli(res.rank[i]);
  auto out = moduli(res.rank[i + 1]);
  std::vector<Int> factors;
  for (const auto& f : homology_at(d_in, mid, d_out, out)) factors.push_back(m.ring().factor_from_effective(f));
  return factors;
}

/// Projective dimension when finite (nullopt = infinite). Uses the Gorenstein bound:
/// pdim <= 1 over Z and pdim = 0 over Z/p^n whenever it is finite.
inline std::optional<std::size_t> finite_projective_dimension(const GModule& m) {
  if (is_projective(m)) return 0;
  if (m.ring().is_prime_power()) return std::nullopt;
  if (is_projective(syzygy(m).module)) return 1;
  return std::nullopt;
}

inline bool has_finite_projective_dimension(const GModule& m) { return finite_projective_dimension(m).has_value(); }

enum class StableIdeal { Projectives, WeaklyProjectives };

inline std::string to_string(StableIdeal i) {
  return i == StableIdeal::Projectives ? "modulo_projectives" : "modulo_weakly_projectives";
}

struct StableHomReport {
  StableIdeal ideal;
  std::vector<Int> factors;
  std::vector<GModuleHom> generators;
  std::vector<GModuleHom> factoring_submodule;  // maps M -> N factoring through the chosen epi
};

/// The epi ι*V -> N used to detect maps factoring through the ideal: the free cover or the counit.
struct IdealEpi {
  GModuleHom map;
  Induced source;
};

inline IdealEpi ideal_epi(const GModule& n, StableIdeal ideal) {
  if (ideal == StableIdeal::Projectives) {
    FreeCover c = free_cover(n);
    return {c.map, free_data(n.ring(), n.group(), c.generators.cols())};
  }
  return {counit(n).map, induced_data(n.ring(), n.group(), n.factors())};
}

/// Hom_RG(M, N) modulo maps factoring through a projective (resp. weakly projective) module.
/// A map factors through such a module iff it factors through the free cover (resp. counit) of N.
inline StableHomReport stable_hom(const GModule& m, const GModule& n, StableIdeal ideal) {
  if (!m.same_context(n)) throw ValidationError("stable_hom: ring/group mismatch");
  IdealEpi pi = ideal_epi(n, ideal);
  StableHomReport out{ideal, {}, {}, {}};
  HomCoordinates coords;
  Matrix lattice = detail::equivariant_lattice(m, n, coords);
  Matrix extra(coords.size(), 0);
  for (const auto& t : pi.source.spanning_maps(m)) {
    GModuleHom f = compose(pi.map, t);
    if (f.is_zero()) continue;
    out.factoring_submodule.push_back(f);
    extra = Matrix::hstack(extra, coords.to_vector(f.matrix()));
  }
  HomGroup q = detail::hom_group_from(m, n, std::move(coords), lattice, extra);
  out.factors = q.factors;
  out.generators = q.generators;
  return out;
}

/// Restriction factors plus the Hom groups End(M), Hom(R, M), Hom(M, R), Hom(M, RG).
/// Isomorphic modules have equal fingerprints; the converse is not claimed.
struct Fingerprint {
  std::vector<Int> restriction, endomorphisms, invariants, to_unit, to_free;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const GModule& m) {
  GModule r = trivial_module(m.ring(), m.group());
  GModule rg = free_module(m.ring(), m.group(), 1);
  return {m.factors(), hom_group(m, m).factors, hom_group(r, m).factors, hom_group(m, r).factors,
          hom_group(m, rg).factors};
}

}  // namespace relstab
