#pragma once

// Gorenstein projective approximations over Z, the functor ψ on objects, and related checks.

#include "relstab/homological.hpp"

#include <optional>

namespace relstab {

/// 0 -> L -> source -> M -> 0 with source built from a Gorenstein projective A.
/// Without R-splitting, source = A. With it, source = A ⊕ ι*ι_*M.
struct ApproximationTriangle {
  GModule target;
  GModule gproj_part;
  GModule source;
  GModuleHom map;
  GModule kernel;
  GModuleHom kernel_inclusion;
  bool r_split = false;
  std::optional<GModuleHom> witness;  // R-linear section of `map` when r_split

  /// Re-runs every check the triangle promises. Throws on failure.
  void verify() const {
    if (!is_gorenstein_projective(gproj_part)) throw Error("approximation: A is not Gorenstein projective");
    if (!(map.source() == source) || !(map.target() == target)) throw Error("approximation: map has wrong ends");
    if (!is_surjective(map)) throw Error("approximation: map is not onto");
    if (!(kernel_inclusion.source() == kernel) || !(kernel_inclusion.target() == source))
      throw Error("approximation: kernel inclusion has wrong ends");
    if (!compose(map, kernel_inclusion).is_zero()) throw Error("approximation: kernel does not map to zero");
    if (!is_injective(kernel_inclusion))
      throw Error("approximation: kernel inclusion is not injective");
    if (!homology_at(kernel_inclusion.matrix(), source.moduli(), map.matrix(), target.moduli()).empty())
      throw Error("approximation: sequence is not exact in the middle");
    if (!has_finite_projective_dimension(kernel)) throw Error("approximation: kernel has infinite projective dimension");
    if (r_split) {
      if (!witness || !equal_as_maps(compose(map, *witness), GModuleHom::r_linear(target, target, Matrix::identity(target.rank()))))
        throw Error("approximation: R-splitting witness does not verify");
    }
  }
};

namespace detail {

inline ApproximationTriangle identity_triangle(const GModule& m) {
  GModule zero = free_module(m.ring(), m.group(), 0);
  return {m, m, m, GModuleHom::identity(m), zero, GModuleHom::zero(zero, m), false, std::nullopt};
}

/// Data of the pushout construction, kept for ψ.
struct PushoutData {
  ApproximationTriangle triangle;
  GModule cosyzygy;                      // A' = coker(S -> Q), Gorenstein projective
  std::optional<GModuleHom> to_cosyzygy; // X -> A'
  std::optional<GModuleHom> split;       // equivariant section of X -> A'
};

inline PushoutData gproj_pushout(const GModule& m) {
  if (!m.ring().is_integers()) {
    if (is_gorenstein_projective(m)) return {identity_triangle(m), free_module(m.ring(), m.group(), 0), {}, {}};
    throw RegimeError("Gorenstein projective approximation over Z/p^n exists only for R-free modules");
  }
  if (is_projective(m)) return {identity_triangle(m), free_module(m.ring(), m.group(), 0), {}, {}};
  Syzygy sy = syzygy(m);
  const GModule& s = sy.module;
  const GModule& f = sy.cover.free;
  if (is_projective(s)) {
    ApproximationTriangle t{m, f, f, sy.cover.map, s, sy.inclusion, false, std::nullopt};
    return {t, free_module(m.ring(), m.group(), 0), {}, {}};
  }
  // j : S -> Q = P^∨, the dual of a free cover P -> S^∨ composed with S -> S^∨∨.
  InternalHom sd = dual_data(s);
  InternalHom sdd = dual_data(sd.module());
  FreeCover pc = free_cover(sd.module());
  InternalHom pd = dual_data(pc.free);
  GModuleHom j = compose(dual_hom(pc.map, pd, sdd), double_dual_map(s, sd, sdd));
  const GModule& q = pd.module();
  Cokernel a_prime = cokernel(j);

  DirectSum fq = direct_sum_data(f, q);
  Matrix anti = fq.inject_first.matrix() * sy.inclusion.matrix() - fq.inject_second.matrix() * j.matrix();
  GModuleHom::create(s, fq.module, anti);  // validates equivariance of the pushout relation
  // X = coker(anti); X -> M is induced by (cover, 0) and X -> A' by (0, Q -> A')
  Presented px = present(fq.module.ring(), fq.module.group(), fq.module.moduli(), fq.module.actions(), std::nullopt,
                         anti);
  GModuleHom to_m = GModuleHom::create(px.module, m, compose(sy.cover.map, fq.project_first).matrix() * px.lifts());
  GModuleHom to_a =
      GModuleHom::create(px.module, a_prime.module,
                         compose(a_prime.projection, fq.project_second).matrix() * px.lifts());
  Kernel k = kernel(to_m);
  ApproximationTriangle t{m, px.module, px.module, to_m, k.module, k.inclusion, false, std::nullopt};
  auto split = equivariant_section(to_a);
  if (!split) throw Error("pushout does not split off its Gorenstein projective cosyzygy");
  return {t, a_prime.module, to_a, split};
}

}  // namespace detail

/// Gorenstein projective precover A -> M with kernel of finite projective dimension (R = Z).
/// Over Z/p^n only R-free modules are accepted, and they are their own approximation.
inline ApproximationTriangle gproj_approximation(const GModule& m) {
  ApproximationTriangle t = detail::gproj_pushout(m).triangle;
  t.verify();
  return t;
}

/// The approximation augmented by the counit: A ⊕ ι*ι_*M -> M, which splits over R.
inline ApproximationTriangle r_split_approximation(const GModule& m) {
  ApproximationTriangle base = gproj_approximation(m);
  SplitMap c = counit(m);
  DirectSum src = direct_sum_data(base.source, c.map.source());
  Matrix map = base.map.matrix() * src.project_first.matrix() + c.map.matrix() * src.project_second.matrix();
  GModuleHom f = GModuleHom::create(src.module, m, map);
  Kernel k = kernel(f);
  GModuleHom witness = compose(GModuleHom::r_linear(c.map.source(), src.module, src.inject_second.matrix()), c.witness);
  ApproximationTriangle t{m, base.gproj_part, src.module, f, k.module, k.inclusion, true, witness};
  t.verify();
  return t;
}

/// ψ(M): the Gorenstein projective part of the approximation with free summands stripped.
inline GModule psi(const GModule& m) {
  detail::PushoutData d = detail::gproj_pushout(m);
  d.triangle.verify();
  // X ≅ F ⊕ A' once X -> A' splits; otherwise the approximation itself is the Gorenstein part
  const GModule& core = d.split ? d.cosyzygy : d.triangle.gproj_part;
  return strip_free_summands(core).module;
}

/// A two-sided inverse of f modulo maps factoring through the chosen ideal, if one exists.
inline std::optional<GModuleHom> certify_stable_iso(const GModuleHom& f, StableIdeal ideal) {
  if (!f.is_equivariant()) throw ValidationError("certify_stable_iso: map is not equivariant");
  const GModule& a = f.source();
  const GModule& b = f.target();
  IdealEpi pa = ideal_epi(a, ideal), pb = ideal_epi(b, ideal);
  LinearHomSystem sys;
  std::size_t g = sys.add_unknown(b, a, true);
  std::size_t t = sys.add_unknown(a, pa.source.base, false);
  std::size_t t2 = sys.add_unknown(b, pb.source.base, false);
  const Matrix ia = Matrix::identity(a.rank()), ib = Matrix::identity(b.rank());
  auto first = pa.source.terms(t, -pa.map.matrix(), a);
  first.push_back({g, ia, f.matrix()});
  auto second = pb.source.terms(t2, -pb.map.matrix(), b);
  second.push_back({g, f.matrix(), ib});
  sys.add_equation(first, ia, a.moduli());
  sys.add_equation(second, ib, b.moduli());
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return GModuleHom::create(b, a, (*sol)[0].matrix());
}

/// Whether M ⊗ L has finite projective dimension for Gorenstein projective M and L of finite
/// projective dimension. The answer should always be true.
inline bool check_fpd_tensor(const GModule& m, const GModule& l) {
  if (!is_gorenstein_projective(m)) throw ValidationError("check_fpd_tensor: first module is not Gorenstein projective");
  if (!has_finite_projective_dimension(l))
    throw ValidationError("check_fpd_tensor: second module has infinite projective dimension");
  return has_finite_projective_dimension(tensor_product(m, l));
}

/// coker(M -> ι^!ι_*M ⊕ N, m -> (unit(m), f(m))), the relative cone of f.
inline Cokernel relative_cone(const GModuleHom& f) {
  SplitMap u = unit(f.source());
  DirectSum s = direct_sum_data(u.map.target(), f.target());
  Matrix map = s.inject_first.matrix() * u.map.matrix() + s.inject_second.matrix() * f.matrix();
  return cokernel(GModuleHom::create(f.source(), s.module, map));
}

}  // namespace relstab
