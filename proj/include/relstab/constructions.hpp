#pragma once

// Constructions in the category of finitely generated RG-modules.

#include "relstab/hom.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace relstab {

inline GModule trivial_module(const CoefficientRing& ring, const FiniteGroup& group) {
  std::vector<Matrix> action(group.order(), Matrix::identity(1));
  return GModule::create(ring, group, {Int(0)}, std::move(action));
}

/// R/d with every element acting by the given scalars (a one-dimensional representation).
inline GModule scalar_module(const CoefficientRing& ring, const FiniteGroup& group, const Int& factor,
                             const std::vector<Int>& scalars) {
  if (scalars.size() != group.order()) throw ValidationError("need one scalar per group element");
  if (ring.effective(factor) == 1) return GModule::create(ring, group, {}, std::vector<Matrix>(group.order(), Matrix(0, 0)));
  std::vector<Matrix> action;
  for (const auto& s : scalars) action.push_back(Matrix::identity(1).scaled(s));
  return GModule::create(ring, group, {factor}, std::move(action));
}

inline std::vector<Int> restriction(const GModule& m) { return m.factors(); }

namespace detail {

inline std::vector<Int> effective_moduli(const CoefficientRing& ring, const std::vector<Int>& factors) {
  std::vector<Int> m;
  for (const auto& f : factors) m.push_back(ring.effective(f));
  return m;
}

inline std::vector<Int> repeat(const std::vector<Int>& v, std::size_t times) {
  std::vector<Int> out;
  for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), v.begin(), v.end());
  return out;
}

/// RG ⊗_R V on blocks h ⊗ V indexed h*k + j; g acts by block permutation h -> gh.
inline Presented induced(const CoefficientRing& ring, const FiniteGroup& group, const std::vector<Int>& factors) {
  GModule::check_factor_chain(ring, factors);
  const std::size_t k = factors.size();
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < group.order(); ++g)
    action.push_back(Matrix::kronecker(regular_representation(group, g), Matrix::identity(k)));
  auto moduli = repeat(effective_moduli(ring, factors), group.order());
  return present(ring, group, moduli, action, std::nullopt, Matrix(moduli.size(), 0));
}

/// Hom_R(RG, V) on blocks φ(h) indexed h*k + j; (gφ)(h) = φ(hg).
inline Presented coinduced(const CoefficientRing& ring, const FiniteGroup& group, const std::vector<Int>& factors) {
  GModule::check_factor_chain(ring, factors);
  const std::size_t k = factors.size(), n = group.order();
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < n; ++g) {
    Matrix a(n * k, n * k);
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t j = 0; j < k; ++j) a(h * k + j, group.multiply(h, g) * k + j) = 1;
    action.push_back(std::move(a));
  }
  auto moduli = repeat(effective_moduli(ring, factors), n);
  return present(ring, group, moduli, action, std::nullopt, Matrix(moduli.size(), 0));
}

}  // namespace detail

/// ι*V = RG ⊗_R V.
inline GModule induction(const CoefficientRing& ring, const FiniteGroup& group, const std::vector<Int>& factors) {
  return detail::induced(ring, group, factors).module;
}

inline GModule free_module(const CoefficientRing& ring, const FiniteGroup& group, std::size_t rank) {
  return induction(ring, group, std::vector<Int>(rank, Int(0)));
}

/// ι*V with the adjunction Hom_RG(M, ι*V) ≅ Hom_R(M, V), f -> (m -> Σ_h h ⊗ f(h^{-1} m)).
struct Induced {
  Presented presented;
  GModule base;  // V with trivial action

  const GModule& module() const { return presented.module; }
  const Matrix& lifts() const { return presented.lifts(); }

  /// The equivariant map M -> ι*V attached to an R-linear f : M -> V, in module coordinates.
  Matrix lift(const Matrix& f, const GModule& m) const {
    const std::size_t kv = base.rank(), n = m.group().order();
    Matrix amb(n * kv, m.rank());
    for (std::size_t h = 0; h < n; ++h) amb.set_block(h * kv, 0, f * m.action(m.group().inverse(h)));
    return presented.projection() * amb;
  }

  /// Terms of left ∘ lift(f) for an R-linear unknown f : M -> V of a LinearHomSystem.
  std::vector<LinearHomSystem::Term> terms(std::size_t unknown, const Matrix& left, const GModule& m) const {
    const std::size_t kv = base.rank(), n = m.group().order();
    Matrix l = left * presented.projection();
    std::vector<LinearHomSystem::Term> out;
    for (std::size_t h = 0; h < n; ++h)
      out.push_back({unknown, l.block(0, h * kv, l.rows(), kv), m.action(m.group().inverse(h))});
    return out;
  }

  /// Equivariant maps M -> ι*V spanning Hom_RG(M, ι*V) over R: lifts of the elementary R-linear maps.
  std::vector<GModuleHom> spanning_maps(const GModule& m) const {
    HomCoordinates coords(m.moduli(), base.moduli());
    std::vector<GModuleHom> out;
    for (std::size_t e = 0; e < coords.size(); ++e) {
      Matrix c(coords.size(), 1);
      c(e, 0) = 1;
      out.push_back(GModuleHom::create(m, module(), lift(coords.to_matrix(c), m)));
    }
    return out;
  }
};

inline Induced induced_data(const CoefficientRing& ring, const FiniteGroup& group, const std::vector<Int>& factors) {
  std::vector<Matrix> trivial(group.order(), Matrix::identity(factors.size()));
  return {detail::induced(ring, group, factors), GModule::create(ring, group, factors, trivial)};
}

/// ι^!V = Hom_R(RG, V) together with the isomorphism φ -> Σ_h h ⊗ φ(h^{-1}) onto ι*V.
struct Coinduction {
  GModule module;
  GModuleHom to_induction;
};

inline Coinduction coinduction(const CoefficientRing& ring, const FiniteGroup& group, const std::vector<Int>& factors) {
  Presented co = detail::coinduced(ring, group, factors);
  Presented ind = detail::induced(ring, group, factors);
  const std::size_t k = factors.size(), n = group.order();
  Matrix t(n * k, n * k);
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t j = 0; j < k; ++j) t(h * k + j, group.inverse(h) * k + j) = 1;
  return {co.module, GModuleHom::create(co.module, ind.module, ind.projection() * t * co.lifts())};
}

/// A structure map of the induction/restriction adjunctions with a witness that it splits over R.
struct SplitMap {
  GModuleHom map;
  GModuleHom witness;  // R-linear section (for an epi) or retraction (for a mono)
};

/// ι*ι_*M -> M, h ⊗ m -> h·m. The witness is the R-linear section m -> e ⊗ m.
inline SplitMap counit(const GModule& m) {
  Presented ind = detail::induced(m.ring(), m.group(), m.factors());
  const std::size_t k = m.rank(), n = m.group().order();
  Matrix amb(k, n * k), sec(n * k, k);
  for (std::size_t h = 0; h < n; ++h) amb.set_block(0, h * k, m.action(h));
  sec.set_block(0, 0, Matrix::identity(k));
  SplitMap out{GModuleHom::create(ind.module, m, amb * ind.lifts()),
               GModuleHom::r_linear(m, ind.module, ind.projection() * sec)};
  if (!equal_as_maps(compose(out.map, out.witness), GModuleHom::r_linear(m, m, Matrix::identity(k))))
    throw Error("counit section failed to verify");
  return out;
}

/// M -> ι^!ι_*M, m -> (h·m)_h. The witness is the R-linear retraction φ -> φ(e).
inline SplitMap unit(const GModule& m) {
  Presented co = detail::coinduced(m.ring(), m.group(), m.factors());
  const std::size_t k = m.rank(), n = m.group().order();
  Matrix amb(n * k, k), ret(k, n * k);
  for (std::size_t h = 0; h < n; ++h) amb.set_block(h * k, 0, m.action(h));
  ret.set_block(0, 0, Matrix::identity(k));
  SplitMap out{GModuleHom::create(m, co.module, co.projection() * amb),
               GModuleHom::r_linear(co.module, m, ret * co.lifts())};
  if (!equal_as_maps(compose(out.witness, out.map), GModuleHom::r_linear(m, m, Matrix::identity(k))))
    throw Error("unit retraction failed to verify");
  return out;
}

/// Cokernel of RG^a -> RG^b given by right multiplication with a b x a matrix over RG.
inline GModule from_rg_presentation(const CoefficientRing& ring, const FiniteGroup& group, std::size_t b,
                                    const std::vector<std::vector<AlgebraElement>>& rows) {
  if (rows.size() != b) throw ValidationError("presentation has wrong number of rows");
  const std::size_t a = b ? rows[0].size() : 0;
  const std::size_t n = group.order();
  Matrix rel(n * b, n * a);
  for (std::size_t i = 0; i < b; ++i) {
    if (rows[i].size() != a) throw ValidationError("ragged presentation matrix");
    for (std::size_t j = 0; j < a; ++j) {
      const AlgebraElement& x = rows[i][j];
      if (!(x.ring() == ring) || !(x.group() == group))
        throw ValidationError("presentation entries over mixed rings or groups");
      Matrix r = right_multiplication(x);
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t hk = 0; hk < n; ++hk)
          if (r(hk, h) != 0) rel(hk * b + i, h * a + j) += r(hk, h);
    }
  }
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < n; ++g)
    action.push_back(Matrix::kronecker(regular_representation(group, g), Matrix::identity(b)));
  auto moduli = std::vector<Int>(n * b, ring.effective(0));
  return present(ring, group, moduli, action, std::nullopt, rel).module;
}

/// M ⊗_R N with the diagonal action.
inline GModule tensor_product(const GModule& m, const GModule& n) {
  if (!m.same_context(n)) throw ValidationError("tensor_product: ring/group mismatch");
  std::vector<Int> moduli;
  for (const auto& a : m.moduli())
    for (const auto& b : n.moduli()) moduli.push_back(gcd(a, b));
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < m.group().order(); ++g) action.push_back(Matrix::kronecker(m.action(g), n.action(g)));
  return present(m.ring(), m.group(), moduli, action, std::nullopt, Matrix(moduli.size(), 0)).module;
}

/// Hom_R(M, N) with (g·f) = g ∘ f ∘ g^{-1}, plus the data to move between module elements and hom matrices.
struct InternalHom {
  GModule source, target;
  HomCoordinates coords;
  Presented presented;

  const GModule& module() const { return presented.module; }

  /// Hom matrix represented by column `col` of module coordinates.
  Matrix to_hom_matrix(const Matrix& module_coords, std::size_t col = 0) const {
    Matrix amb = presented.lifts() * module_coords.column(col);
    return coords.to_matrix(amb).reduced_rows(target.moduli());
  }
  /// Module coordinates of an R-linear map given as a matrix.
  Matrix from_hom_matrix(const Matrix& hom) const { return presented.coordinates(coords.to_vector(hom)); }
};

inline InternalHom internal_hom(const GModule& m, const GModule& n) {
  if (!m.same_context(n)) throw ValidationError("internal_hom: ring/group mismatch");
  InternalHom out{m, n, HomCoordinates(m.moduli(), n.moduli()), {}};
  const std::size_t K = out.coords.size();
  const FiniteGroup& G = m.group();
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < G.order(); ++g) {
    Matrix a(K, K);
    for (std::size_t k = 0; k < K; ++k) {
      Matrix e(K, 1);
      e(k, 0) = 1;
      Matrix moved = (n.action(g) * out.coords.to_matrix(e) * m.action(G.inverse(g))).reduced_rows(n.moduli());
      a.set_block(0, k, out.coords.to_vector(moved));
    }
    action.push_back(std::move(a));
  }
  out.presented = present(m.ring(), G, out.coords.moduli(), action, std::nullopt, Matrix(K, 0));
  return out;
}

/// M^∨ = Hom_R(M, R).
inline InternalHom dual_data(const GModule& m) { return internal_hom(m, trivial_module(m.ring(), m.group())); }
inline GModule dual(const GModule& m) { return dual_data(m).module(); }

/// The duality map f^∨ : N^∨ -> M^∨, λ -> λ ∘ f.
inline GModuleHom dual_hom(const GModuleHom& f, const InternalHom& source_dual, const InternalHom& target_dual) {
  const GModule& nd = target_dual.module();
  Matrix out(source_dual.module().rank(), nd.rank());
  for (std::size_t a = 0; a < nd.rank(); ++a) {
    Matrix e(nd.rank(), 1);
    e(a, 0) = 1;
    Matrix lambda = target_dual.to_hom_matrix(e);
    out.set_block(0, a, source_dual.from_hom_matrix(lambda * f.matrix()));
  }
  return GModuleHom::create(nd, source_dual.module(), out);
}

/// The evaluation map M -> M^∨∨, m -> (λ -> λ(m)).
inline GModuleHom double_dual_map(const GModule& m, const InternalHom& d1, const InternalHom& d2) {
  const GModule& md = d1.module();
  Matrix out(d2.module().rank(), m.rank());
  for (std::size_t j = 0; j < m.rank(); ++j) {
    Matrix ev(1, md.rank());
    for (std::size_t a = 0; a < md.rank(); ++a) {
      Matrix e(md.rank(), 1);
      e(a, 0) = 1;
      ev(0, a) = d1.to_hom_matrix(e)(0, j);
    }
    out.set_block(0, j, d2.from_hom_matrix(ev));
  }
  return GModuleHom::create(m, d2.module(), out);
}

struct DirectSum {
  GModule module;
  GModuleHom inject_first, inject_second, project_first, project_second;
};

inline DirectSum direct_sum_data(const GModule& m, const GModule& n) {
  if (!m.same_context(n)) throw ValidationError("direct_sum: ring/group mismatch");
  std::vector<Int> moduli = m.moduli();
  moduli.insert(moduli.end(), n.moduli().begin(), n.moduli().end());
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < m.group().order(); ++g) action.push_back(Matrix::block_diagonal(m.action(g), n.action(g)));
  Presented p = present(m.ring(), m.group(), moduli, action, std::nullopt, Matrix(moduli.size(), 0));
  const std::size_t a = m.rank(), b = n.rank();
  Matrix i1(a + b, a), i2(a + b, b), p1(a, a + b), p2(b, a + b);
  i1.set_block(0, 0, Matrix::identity(a));
  i2.set_block(a, 0, Matrix::identity(b));
  p1.set_block(0, 0, Matrix::identity(a));
  p2.set_block(0, a, Matrix::identity(b));
  Matrix proj = p.projection();
  return {p.module, GModuleHom::create(m, p.module, proj * i1), GModuleHom::create(n, p.module, proj * i2),
          GModuleHom::create(p.module, m, p1 * p.lifts()), GModuleHom::create(p.module, n, p2 * p.lifts())};
}

inline GModule direct_sum(const GModule& m, const GModule& n) { return direct_sum_data(m, n).module; }

struct Kernel {
  GModule module;
  GModuleHom inclusion;
};

struct Cokernel {
  GModule module;
  GModuleHom projection;
};

inline Kernel kernel(const GModuleHom& f) {
  if (!f.is_equivariant()) throw ValidationError("kernel: map is not equivariant");
  const GModule& s = f.source();
  auto sol = detail::solve_integer_congruences(f.matrix(), Matrix(f.target().rank(), 0), f.target().moduli());
  Presented p = present(s.ring(), s.group(), s.moduli(), s.actions(), sol->homogeneous, Matrix(s.rank(), 0));
  return {p.module, GModuleHom::create(p.module, s, p.lifts())};
}

inline Cokernel cokernel(const GModuleHom& f) {
  if (!f.is_equivariant()) throw ValidationError("cokernel: map is not equivariant");
  const GModule& t = f.target();
  Presented p = present(t.ring(), t.group(), t.moduli(), t.actions(), std::nullopt, f.matrix());
  return {p.module, GModuleHom::create(t, p.module, p.projection())};
}

/// The submodule generated (over RG) by the given columns of module coordinates.
inline Kernel submodule(const GModule& m, const Matrix& elements) {
  Matrix span(m.rank(), 0);
  for (std::size_t g = 0; g < m.group().order(); ++g) span = Matrix::hstack(span, m.action(g) * elements);
  Presented p = present(m.ring(), m.group(), m.moduli(), m.actions(), span, Matrix(m.rank(), 0));
  return {p.module, GModuleHom::create(p.module, m, p.lifts())};
}

inline bool is_injective(const GModuleHom& f) { return kernel(f).module.is_zero(); }
inline bool is_surjective(const GModuleHom& f) { return cokernel(f).module.is_zero(); }

/// Solves f ∘ s = id as a plain R-linear system.
inline std::optional<GModuleHom> is_split_epi_over_R(const GModuleHom& f) { return r_linear_section(f); }

/// 0 -> A -f-> B -g-> C -> 0 is exact and its restriction to R splits.
inline bool is_r_split_exact(const GModuleHom& f, const GModuleHom& g) {
  if (!(f.target() == g.source())) throw ValidationError("is_r_split_exact: maps are not composable");
  if (!compose(g, f).is_zero()) return false;
  if (!is_injective(f) || !is_surjective(g)) return false;
  const GModule& b = f.target();
  auto h = homology_at(f.matrix(), b.moduli(), g.matrix(), g.target().moduli());
  if (!h.empty()) return false;
  return r_linear_section(g).has_value();
}

/// Free RG-module on chosen generators mapping onto M.
struct FreeCover {
  GModule free;
  GModuleHom map;
  Matrix generators;  // k x r, module coordinates of the chosen generators
};

/// The cover RG^r -> M sending the basis vector (e, t) to column t of `chosen`.
inline FreeCover cover_on(const GModule& m, Matrix chosen) {
  const std::size_t k = m.rank(), n = m.group().order(), r = chosen.cols();
  GModule f = free_module(m.ring(), m.group(), r);
  Matrix map(k, n * r);
  for (std::size_t h = 0; h < n; ++h) map.set_block(0, h * r, m.action(h) * chosen);
  return {f, GModuleHom::create(f, m, map), std::move(chosen)};
}

inline FreeCover cover_on(const GModule& m, std::span<const std::size_t> basis_vectors) {
  Matrix chosen(m.rank(), basis_vectors.size());
  for (std::size_t t = 0; t < basis_vectors.size(); ++t) chosen(basis_vectors[t], t) = 1;
  return cover_on(m, std::move(chosen));
}

namespace detail {

/// Rank over F_q, q = 2^61 - 1; a lower bound for the rational rank, used only to steer heuristics.
inline std::size_t rank_mod_large_prime(const Matrix& a) {
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;
  constexpr u64 q = (u64{1} << 61) - 1;
  const Int qq = Int(q);
  std::vector<std::vector<u64>> m(a.rows(), std::vector<u64>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = static_cast<u64>(mod_floor(a(i, j), qq));
  auto power = [&](u64 b, u64 e) {
    u64 r = 1;
    for (; e; e >>= 1, b = static_cast<u64>(u128(b) * b % q))
      if (e & 1) r = static_cast<u64>(u128(r) * b % q);
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t j = 0; j < a.cols() && rank < a.rows(); ++j) {
    std::size_t p = rank;
    while (p < a.rows() && m[p][j] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rank]);
    const u64 inv = power(m[rank][j], q - 2);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (m[i][j] == 0) continue;
      const u64 f = static_cast<u64>(u128(m[i][j]) * inv % q);
      for (std::size_t l = j; l < a.cols(); ++l)
        m[i][l] = static_cast<u64>((m[i][l] + u128(q - f) * m[rank][l]) % q);
    }
    ++rank;
  }
  return rank;
}

inline Matrix orbit_span(const GModule& m, const Matrix& gens) {
  Matrix span(m.rank(), 0);
  for (std::size_t h = 0; h < m.group().order(); ++h) span = Matrix::hstack(span, m.action(h) * gens);
  return span;
}

}  // namespace detail

/// A small set of RG-generators: pseudo-random combinations until the rational span is full,
/// then Smith generators missing from the integral span, then removal of redundant ones.
inline FreeCover free_cover(const GModule& m) {
  const std::size_t k = m.rank();
  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < k; ++i)
    if (m.moduli()[i] == 0) free_rows.push_back(i);
  Matrix chosen(k, 0);
  if (!free_rows.empty()) {
    std::mt19937_64 engine(0x5eed);
    std::size_t rank = 0;
    for (std::size_t tries = 0; rank < free_rows.size() && tries < 2 * k + 4; ++tries) {
      Matrix v(k, 1);
      for (std::size_t i : free_rows) v(i, 0) = static_cast<long long>(engine() % 3) - 1;
      Matrix candidate = Matrix::hstack(chosen, v);
      std::size_t r = detail::rank_mod_large_prime(detail::orbit_span(m, candidate).select_rows(free_rows));
      if (r > rank) {
        rank = r;
        chosen = std::move(candidate);
      }
    }
  }
  auto spans = [&](const Matrix& gens, const Matrix& v) {
    return gens.cols() && detail::solve_integer_congruences(detail::orbit_span(m, gens), v, m.moduli()).has_value();
  };
  for (std::size_t j = 0; j < k; ++j) {
    Matrix e(k, 1);
    e(j, 0) = 1;
    if (!spans(chosen, e)) chosen = Matrix::hstack(chosen, e);
  }
  for (std::size_t t = 0; t < chosen.cols();) {
    std::vector<std::size_t> rest;
    for (std::size_t u = 0; u < chosen.cols(); ++u)
      if (u != t) rest.push_back(u);
    Matrix others = chosen.select_columns(rest);
    if (spans(others, chosen.select_columns(std::vector<std::size_t>{t})))
      chosen = std::move(others);
    else
      ++t;
  }
  return cover_on(m, std::move(chosen));
}

}  // namespace relstab
