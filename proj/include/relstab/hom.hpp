#pragma once

// Hom groups and linear systems whose unknowns are module maps.

#include "relstab/module.hpp"

#include <optional>
#include <vector>

namespace relstab {

/// Coordinates of Hom_R(⊕R/d_j, ⊕R/e_i) on the elementary maps gen_j -> (e_i / gcd(d_j,e_i)) gen_i.
/// Entries with gcd 1 (always zero) and maps from torsion into free summands (zero) are omitted.
class HomCoordinates {
 public:
  struct Entry {
    std::size_t row, col;
    Int scale, modulus;
  };

  HomCoordinates() = default;
  HomCoordinates(std::span<const Int> source_moduli, std::span<const Int> target_moduli)
      : rows_(target_moduli.size()), cols_(source_moduli.size()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Int& e = target_moduli[i];
        const Int& d = source_moduli[j];
        if (e == 0) {
          if (d == 0) entries_.push_back({i, j, 1, 0});
          continue;
        }
        Int g = d == 0 ? e : gcd(d, e);
        if (g == 1) continue;
        entries_.push_back({i, j, e / g, g});
      }
  }

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::vector<Int> moduli() const {
    std::vector<Int> m;
    for (const auto& e : entries_) m.push_back(e.modulus);
    return m;
  }

  /// K x (#torsion entries) diagonal relation columns.
  Matrix relations() const {
    Matrix rel(size(), 0);
    for (std::size_t k = 0; k < size(); ++k)
      if (entries_[k].modulus != 0) {
        Matrix e(size(), 1);
        e(k, 0) = entries_[k].modulus;
        rel = Matrix::hstack(rel, e);
      }
    return rel;
  }

  Matrix to_matrix(const Matrix& c, std::size_t col = 0) const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < size(); ++k) m(entries_[k].row, entries_[k].col) = c(k, col) * entries_[k].scale;
    return m;
  }

  /// Coordinate column of a well-defined hom matrix.
  Matrix to_vector(const Matrix& hom) const {
    Matrix c(size(), 1);
    for (std::size_t k = 0; k < size(); ++k) {
      const Entry& e = entries_[k];
      const Int& v = hom(e.row, e.col);
      if (v % e.scale != 0) throw ValidationError("hom matrix violates factor congruences");
      c(k, 0) = reduce(v / e.scale, e.modulus);
    }
    return c;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Entry> entries_;
};

/// Linear congruence system whose unknowns are maps X_u : S_u -> T_u (optionally equivariant)
/// and whose equations are Σ L_t X_{u_t} R_t ≡ rhs modulo the row moduli.
class LinearHomSystem {
 public:
  struct Term {
    std::size_t unknown;
    Matrix left;   // p x k_target(u)
    Matrix right;  // k_source(u) x q
  };

  std::size_t add_unknown(const GModule& source, const GModule& target, bool equivariant) {
    Unknown u{source, target, HomCoordinates(source.moduli(), target.moduli()), total_};
    total_ += u.coords.size();
    unknowns_.push_back(u);
    const std::size_t id = unknowns_.size() - 1;
    if (equivariant)
      for (std::size_t g : source.group().generators())
        add_equation({{id, target.action(g), Matrix::identity(source.rank())},
                      {id, -Matrix::identity(target.rank()), source.action(g)}},
                     Matrix(target.rank(), source.rank()), target.moduli());
    return id;
  }

  void add_equation(const std::vector<Term>& terms, const Matrix& rhs, std::span<const Int> row_moduli) {
    const std::size_t p = rhs.rows(), q = rhs.cols();
    if (row_moduli.size() != p) throw ValidationError("equation row moduli length mismatch");
    std::vector<Row> block(p * q);
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        block[a * q + b].rhs = rhs(a, b);
        block[a * q + b].modulus = row_moduli[a];
      }
    for (const Term& t : terms) {
      const Unknown& u = unknowns_.at(t.unknown);
      if (t.left.rows() != p || t.left.cols() != u.target.rank() || t.right.rows() != u.source.rank() ||
          t.right.cols() != q)
        throw ValidationError("equation term has wrong shape");
      const auto& entries = u.coords.entries();
      for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        for (std::size_t a = 0; a < p; ++a) {
          const Int& l = t.left(a, e.row);
          if (l == 0) continue;
          for (std::size_t b = 0; b < q; ++b) {
            const Int& r = t.right(e.col, b);
            if (r == 0) continue;
            block[a * q + b].coeffs[u.offset + k] += e.scale * l * r;
          }
        }
      }
    }
    for (auto& row : block) {
      if (row.modulus == 1) continue;
      if (row.coeffs.empty() && reduce(row.rhs, row.modulus) == 0) continue;
      rows_.push_back(std::move(row));
    }
  }

  /// Full solution data on the concatenated coordinate vector, or nullopt when inconsistent.
  std::optional<CongruenceSolution> solve_coordinates() const {
    Matrix a(rows_.size(), total_), b(rows_.size(), 1);
    std::vector<Int> moduli;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (const auto& [col, v] : rows_[i].coeffs) a(i, col) = v;
      b(i, 0) = rows_[i].rhs;
      moduli.push_back(rows_[i].modulus);
    }
    return detail::solve_integer_congruences(a, b, moduli);
  }

  /// One solution, one matrix per unknown.
  std::optional<std::vector<GModuleHom>> solve() const {
    auto sol = solve_coordinates();
    if (!sol) return std::nullopt;
    std::vector<GModuleHom> out;
    for (std::size_t u = 0; u < unknowns_.size(); ++u) out.push_back(extract(u, sol->particular, 0));
    return out;
  }

  GModuleHom extract(std::size_t u, const Matrix& column_vectors, std::size_t col) const {
    const Unknown& un = unknowns_.at(u);
    Matrix c(un.coords.size(), 1);
    for (std::size_t k = 0; k < un.coords.size(); ++k) c(k, 0) = column_vectors(un.offset + k, col);
    return GModuleHom::r_linear(un.source, un.target, un.coords.to_matrix(c));
  }

  const HomCoordinates& coordinates(std::size_t u) const { return unknowns_.at(u).coords; }
  std::size_t offset(std::size_t u) const { return unknowns_.at(u).offset; }
  std::size_t size() const { return total_; }

 private:
  struct Unknown {
    GModule source, target;
    HomCoordinates coords;
    std::size_t offset;
  };
  struct Row {
    std::map<std::size_t, Int> coeffs;
    Int rhs = 0;
    Int modulus = 0;
  };
  std::vector<Unknown> unknowns_;
  std::vector<Row> rows_;
  std::size_t total_ = 0;
};

/// Hom_RG(M, N) in invariant-factor form with explicit generators.
struct HomGroup {
  GModule source, target;
  std::vector<Int> factors;
  std::vector<GModuleHom> generators;
  HomCoordinates coords;
  LatticeQuotient quotient;

  /// Coordinates of an equivariant map in terms of the generators.
  Matrix coordinates(const GModuleHom& f) const {
    auto c = quotient.coordinates(coords.to_vector(f.matrix()));
    if (!c) throw Error("map is not in the hom group");
    return *c;
  }
};

namespace detail {

/// Lattice (in elementary coordinates) of equivariant maps M -> N.
inline Matrix equivariant_lattice(const GModule& m, const GModule& n, HomCoordinates& coords) {
  LinearHomSystem sys;
  sys.add_unknown(m, n, true);
  coords = sys.coordinates(0);
  auto sol = sys.solve_coordinates();
  return Matrix::hstack(sol->homogeneous, coords.relations());
}

inline HomGroup hom_group_from(const GModule& m, const GModule& n, HomCoordinates coords, const Matrix& lattice,
                               const Matrix& extra_relations) {
  HomGroup out;
  out.source = m;
  out.target = n;
  Matrix rel = coords.relations();
  if (extra_relations.cols()) rel = Matrix::hstack(rel, extra_relations);
  out.quotient = quotient_lattice(Matrix::hstack(lattice, rel), rel);
  for (const auto& f : out.quotient.factors) out.factors.push_back(m.ring().factor_from_effective(f));
  for (std::size_t k = 0; k < out.quotient.size(); ++k)
    out.generators.push_back(GModuleHom::create(m, n, coords.to_matrix(out.quotient.generators, k)));
  out.coords = std::move(coords);
  return out;
}

}  // namespace detail

/// Hom_RG(M, N): invariants of the internal hom, solved directly on the elementary coordinates.
inline HomGroup hom_group(const GModule& m, const GModule& n) {
  if (!m.same_context(n)) throw ValidationError("hom_group: ring/group mismatch");
  HomCoordinates coords;
  Matrix lattice = detail::equivariant_lattice(m, n, coords);
  Matrix none(coords.size(), 0);
  return detail::hom_group_from(m, n, std::move(coords), lattice, none);
}

/// An R-linear s with f ∘ s = id, if one exists.
inline std::optional<GModuleHom> r_linear_section(const GModuleHom& f) {
  LinearHomSystem sys;
  sys.add_unknown(f.target(), f.source(), false);
  sys.add_equation({{0, f.matrix(), Matrix::identity(f.target().rank())}}, Matrix::identity(f.target().rank()),
                   f.target().moduli());
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return (*sol)[0];
}

/// An equivariant s with f ∘ s = id, if one exists.
inline std::optional<GModuleHom> equivariant_section(const GModuleHom& f) {
  LinearHomSystem sys;
  sys.add_unknown(f.target(), f.source(), true);
  sys.add_equation({{0, f.matrix(), Matrix::identity(f.target().rank())}}, Matrix::identity(f.target().rank()),
                   f.target().moduli());
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return (*sol)[0];
}

/// An equivariant r with r ∘ f = id, if one exists.
inline std::optional<GModuleHom> equivariant_retraction(const GModuleHom& f) {
  LinearHomSystem sys;
  sys.add_unknown(f.target(), f.source(), true);
  sys.add_equation({{0, Matrix::identity(f.source().rank()), f.matrix()}}, Matrix::identity(f.source().rank()),
                   f.source().moduli());
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return (*sol)[0];
}

}  // namespace relstab
