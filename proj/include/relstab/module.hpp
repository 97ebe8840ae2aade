#pragma once

// Finitely generated RG-modules in invariant-factor form and the maps between them.

#include "relstab/algebra.hpp"
#include "relstab/linear.hpp"

#include <map>
#include <memory>
#include <vector>

namespace relstab {

/// A finitely generated RG-module: R/d_1 ⊕ ... ⊕ R/d_k with d_1 | d_2 | ... and one action
/// matrix per group element. Factor 0 is a free summand R. Copies share immutable data.
class GModule {
 public:
  GModule() : GModule(create(CoefficientRing::integers(), FiniteGroup{}, {}, {Matrix(0, 0)})) {}

  static GModule create(const CoefficientRing& ring, const FiniteGroup& group, std::vector<Int> factors,
                        std::vector<Matrix> action) {
    check_factor_chain(ring, factors);
    auto d = std::make_shared<Data>();
    d->ring = ring;
    d->group = group;
    d->factors = std::move(factors);
    for (const auto& f : d->factors) d->moduli.push_back(ring.effective(f));
    const std::size_t k = d->factors.size();
    if (action.size() != group.order()) throw ValidationError("need one action matrix per group element");
    for (auto& a : action) {
      if (a.rows() != k || a.cols() != k) throw ValidationError("action matrix has wrong shape");
      a.reduce_rows(d->moduli);
    }
    d->action = std::move(action);
    GModule m(std::move(d));
    m.validate();
    return m;
  }

  /// Completes actions given on a subset of elements (typically generators) by BFS over the table.
  static GModule from_partial_action(const CoefficientRing& ring, const FiniteGroup& group, std::vector<Int> factors,
                                     const std::map<std::size_t, Matrix>& given) {
    check_factor_chain(ring, factors);
    std::vector<Int> moduli;
    for (const auto& f : factors) moduli.push_back(ring.effective(f));
    const std::size_t k = factors.size(), n = group.order();
    std::vector<std::optional<Matrix>> act(n);
    act[0] = Matrix::identity(k);
    for (const auto& [g, a] : given) {
      if (g >= n) throw ValidationError("action given for element outside the group");
      if (a.rows() != k || a.cols() != k) throw ValidationError("action matrix has wrong shape");
      act[g] = a.reduced_rows(moduli);
    }
    std::vector<std::size_t> frontier;
    for (std::size_t g = 0; g < n; ++g)
      if (act[g]) frontier.push_back(g);
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t h : frontier)
        for (const auto& [s, a] : given) {
          std::size_t x = group.multiply(s, h);
          if (act[x]) continue;
          act[x] = (*act[s] * *act[h]).reduced_rows(moduli);
          next.push_back(x);
        }
      frontier = std::move(next);
    }
    std::vector<Matrix> full;
    for (std::size_t g = 0; g < n; ++g) {
      if (!act[g]) throw ValidationError("given actions do not generate the group");
      full.push_back(*act[g]);
    }
    return create(ring, group, std::move(factors), std::move(full));
  }

  const CoefficientRing& ring() const { return d_->ring; }
  const FiniteGroup& group() const { return d_->group; }
  const std::vector<Int>& factors() const { return d_->factors; }
  /// Effective moduli: equal to the factors over Z; over Z/p^n the free summand has modulus p^n.
  const std::vector<Int>& moduli() const { return d_->moduli; }
  const Matrix& action(std::size_t g) const { return d_->action[g]; }
  const std::vector<Matrix>& actions() const { return d_->action; }
  std::size_t rank() const { return d_->factors.size(); }
  bool is_zero() const { return d_->factors.empty(); }

  bool same_context(const GModule& o) const { return ring() == o.ring() && group() == o.group(); }

  friend bool operator==(const GModule& a, const GModule& b) {
    return a.d_ == b.d_ ||
           (a.same_context(b) && a.d_->factors == b.d_->factors && a.d_->action == b.d_->action);
  }

  static void check_factor_chain(const CoefficientRing& ring, const std::vector<Int>& factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const Int& f = factors[i];
      if (f < 0) throw ValidationError("invariant factors must be non-negative");
      if (f == 1) throw ValidationError("unit invariant factor: trivial summands must be dropped");
      if (ring.is_prime_power() && f != 0) {
        if (ring.modulus() % f != 0 || f == ring.modulus())
          throw ValidationError("factor " + f.str() + " is not p^e with 1 <= e < n");
      }
      if (i + 1 < factors.size()) {
        const Int& g = factors[i + 1];
        if (f == 0 && g != 0) throw ValidationError("free summands must come last in the factor chain");
        if (g != 0 && g % f != 0) throw ValidationError("invariant factors do not form a divisibility chain");
      }
    }
  }

 private:
  struct Data {
    CoefficientRing ring;
    FiniteGroup group;
    std::vector<Int> factors;
    std::vector<Int> moduli;
    std::vector<Matrix> action;
  };
  explicit GModule(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  void validate() const {
    const auto& m = moduli();
    const std::size_t k = rank();
    const FiniteGroup& G = group();
    for (std::size_t g = 0; g < G.order(); ++g) {
      const Matrix& a = action(g);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Int v = a(i, j) * m[j];
          if (m[i] == 0 ? v != 0 : v % m[i] != 0)
            throw ValidationError("action of " + G.label(g) + " is not well defined on the factors");
        }
    }
    if (!congruent_rows(action(0), Matrix::identity(k), m)) throw ValidationError("identity does not act trivially");
    for (std::size_t g = 0; g < G.order(); ++g)
      for (std::size_t h = 0; h < G.order(); ++h)
        if (!congruent_rows(action(g) * action(h), action(G.multiply(g, h)), m))
          throw ValidationError("action is not a homomorphism at (" + G.label(g) + "," + G.label(h) + ")");
  }

  std::shared_ptr<const Data> d_;
};

/// A map of RG-modules (or, when not equivariant, of the underlying R-modules) as a
/// k_target x k_source matrix with e_i | m_ij d_j.
class GModuleHom {
 public:
  GModuleHom() = default;

  static GModuleHom create(GModule source, GModule target, Matrix m) {
    GModuleHom f = r_linear(std::move(source), std::move(target), std::move(m));
    if (!f.equivariant_)
      throw ValidationError("map is not equivariant");
    return f;
  }

  /// An R-linear map; equivariance is recorded, not required.
  static GModuleHom r_linear(GModule source, GModule target, Matrix m) {
    if (!source.same_context(target)) throw ValidationError("hom between modules over different rings or groups");
    if (m.rows() != target.rank() || m.cols() != source.rank()) throw ValidationError("hom matrix has wrong shape");
    m.reduce_rows(target.moduli());
    const auto& d = source.moduli();
    const auto& e = target.moduli();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Int v = m(i, j) * d[j];
        if (e[i] == 0 ? v != 0 : v % e[i] != 0) throw ValidationError("hom matrix violates factor congruences");
      }
    GModuleHom f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.matrix_ = std::move(m);
    f.equivariant_ = true;
    for (std::size_t g : f.source_.group().generators())
      if (!congruent_rows(f.target_.action(g) * f.matrix_, f.matrix_ * f.source_.action(g), f.target_.moduli())) {
        f.equivariant_ = false;
        break;
      }
    return f;
  }

  static GModuleHom identity(const GModule& m) { return create(m, m, Matrix::identity(m.rank())); }
  static GModuleHom zero(const GModule& s, const GModule& t) { return create(s, t, Matrix(t.rank(), s.rank())); }

  const GModule& source() const { return source_; }
  const GModule& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  bool is_equivariant() const { return equivariant_; }

  bool is_zero() const { return matrix_.is_zero(); }

  friend bool operator==(const GModuleHom& a, const GModuleHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }

 private:
  GModule source_, target_;
  Matrix matrix_;
  bool equivariant_ = true;
};

/// g ∘ f
inline GModuleHom compose(const GModuleHom& g, const GModuleHom& f) {
  if (!(f.target() == g.source())) throw ValidationError("compose: maps are not composable");
  return GModuleHom::r_linear(f.source(), g.target(), g.matrix() * f.matrix());
}

inline bool equal_as_maps(const GModuleHom& a, const GModuleHom& b) {
  return a.source() == b.source() && a.target() == b.target() &&
         congruent_rows(a.matrix(), b.matrix(), a.target().moduli());
}

/// A module obtained as a subquotient L/D of an ambient Z^n carrying an action, together with
/// the coordinate data linking the two.
struct Presented {
  GModule module;
  LatticeQuotient quotient;

  /// k x n matrix of coordinates of the ambient unit vectors (valid when L = Z^n).
  Matrix projection() const {
    auto c = quotient.coordinates(Matrix::identity(quotient.lattice.basis.rows()));
    if (!c) throw Error("projection requested for a proper sublattice");
    return *c;
  }
  /// n x k ambient lifts of the module generators.
  const Matrix& lifts() const { return quotient.generators; }
  Matrix coordinates(const Matrix& y) const {
    auto c = quotient.coordinates(y);
    if (!c) throw Error("vector does not lie in the presented lattice");
    return *c;
  }
};

/// Normalizes the subquotient L/D of an ambient Z^n with the given moduli and action.
/// `lattice` spans L (empty = all of Z^n); D is spanned by the ambient moduli and `relations`.
/// The ambient action must preserve L and D.
inline Presented present(const CoefficientRing& ring, const FiniteGroup& group, std::span<const Int> ambient_moduli,
                         const std::vector<Matrix>& ambient_action, const std::optional<Matrix>& lattice,
                         const Matrix& relations) {
  const std::size_t n = ambient_moduli.size();
  if (!lattice && relations.cols() == 0) {
    // already a valid chain without unit summands: keep the ambient basis
    std::vector<Int> factors;
    for (const auto& m : ambient_moduli) factors.push_back(ring.factor_from_effective(m));
    bool chain = std::none_of(ambient_moduli.begin(), ambient_moduli.end(), [](const Int& m) { return m == 1; });
    if (chain) {
      try {
        GModule::check_factor_chain(ring, factors);
      } catch (const ValidationError&) {
        chain = false;
      }
    }
    if (chain) {
      Presented out{GModule{}, LatticeQuotient{}};
      out.quotient.factors.assign(ambient_moduli.begin(), ambient_moduli.end());
      out.quotient.generators = Matrix::identity(n);
      out.quotient.lattice = hermite_basis(Matrix::identity(n));
      out.quotient.coord_change = Matrix::identity(n);
      out.module = GModule::create(ring, group, std::move(factors), ambient_action);
      return out;
    }
  }
  Matrix rel(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (ambient_moduli[i] != 0) {
      Matrix e(n, 1);
      e(i, 0) = ambient_moduli[i];
      rel = Matrix::hstack(rel, e);
    }
  if (relations.cols()) rel = Matrix::hstack(rel, relations);
  Matrix l = lattice ? Matrix::hstack(*lattice, rel) : Matrix::identity(n);
  Presented out{GModule{}, quotient_lattice(l, rel)};
  std::vector<Int> factors;
  for (const auto& f : out.quotient.factors) factors.push_back(ring.factor_from_effective(f));
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < group.order(); ++g) {
    auto c = out.quotient.coordinates(ambient_action[g] * out.quotient.generators);
    if (!c) throw Error("ambient action does not preserve the presented lattice");
    action.push_back(std::move(*c));
  }
  out.module = GModule::create(ring, group, std::move(factors), std::move(action));
  return out;
}

}  // namespace relstab
