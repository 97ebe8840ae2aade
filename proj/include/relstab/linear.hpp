#pragma once

// Congruence solving, lattice bases and subquotients of Z^n.

#include "relstab/smith.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace relstab {

/// Column Hermite form: returns a basis (n x r) of the lattice spanned by the columns of k.
/// Column t has its pivot at row pivot_rows[t], zeros above it, a positive pivot, and the
/// entries of earlier columns in that row reduced into [0, pivot).
struct HermiteBasis {
  Matrix basis;
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const { return basis.cols(); }

  /// Coordinates of the columns of y in this basis, or nullopt when some column is not in the lattice.
  std::optional<Matrix> coordinates(const Matrix& y) const {
    const std::size_t r = rank();
    Matrix out(r, y.cols());
    for (std::size_t col = 0; col < y.cols(); ++col) {
      Matrix rest = y.column(col);
      for (std::size_t t = 0; t < r; ++t) {
        const Int& piv = basis(pivot_rows[t], t);
        const Int& val = rest(pivot_rows[t], 0);
        if (val % piv != 0) return std::nullopt;
        Int q = val / piv;
        out(t, col) = q;
        if (q != 0)
          for (std::size_t i = pivot_rows[t]; i < basis.rows(); ++i)
            if (basis(i, t) != 0) rest(i, 0) -= q * basis(i, t);
      }
      if (!rest.is_zero()) return std::nullopt;
    }
    return out;
  }

  /// Canonical representative of each column of y modulo the lattice.
  Matrix reduce(Matrix y) const {
    for (std::size_t col = 0; col < y.cols(); ++col)
      for (std::size_t t = 0; t < rank(); ++t) {
        const Int& piv = basis(pivot_rows[t], t);
        Int q = floor_div(y(pivot_rows[t], col), piv);
        if (q == 0) continue;
        for (std::size_t i = pivot_rows[t]; i < y.rows(); ++i) y(i, col) -= q * basis(i, t);
      }
    return y;
  }
};

inline HermiteBasis hermite_basis(Matrix k) {
  const std::size_t n = k.rows();
  std::size_t next = 0;
  HermiteBasis out;
  for (std::size_t i = 0; i < n && next < k.cols(); ++i) {
    // gcd-eliminate row i across columns next..end
    while (true) {
      std::size_t best = k.cols();
      for (std::size_t j = next; j < k.cols(); ++j)
        if (k(i, j) != 0 && (best == k.cols() || abs(k(i, j)) < abs(k(i, best)))) best = j;
      if (best == k.cols()) break;
      k.swap_cols(next, best);
      bool done = true;
      for (std::size_t j = next + 1; j < k.cols(); ++j) {
        if (k(i, j) == 0) continue;
        k.add_col_multiple(j, next, -round_div(k(i, j), k(i, next)));
        if (k(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (next < k.cols() && k(i, next) != 0) {
      if (k(i, next) < 0) k.scale_col(next, -1);
      for (std::size_t j = 0; j < next; ++j) {
        Int q = floor_div(k(i, j), k(i, next));
        if (q != 0) k.add_col_multiple(j, next, -q);
      }
      out.pivot_rows.push_back(i);
      ++next;
    }
  }
  std::vector<std::size_t> keep(next);
  for (std::size_t j = 0; j < next; ++j) keep[j] = j;
  out.basis = k.select_columns(keep);
  out.basis.check_entries();
  return out;
}

/// One solution of a*x ≡ b (row-wise mod row moduli; 0 = exact) and a basis of the homogeneous solutions.
struct CongruenceSolution {
  Matrix particular;   // cols(a) x cols(b), canonically reduced modulo the homogeneous lattice
  Matrix homogeneous;  // cols(a) x t, Hermite basis of {x : a x ≡ 0}
};

namespace detail {

/// Integer engine: column echelon elimination one row at a time. The right-hand side is reduced
/// as pivots appear, and the entries of rows not yet reached stay reduced modulo their moduli.
inline std::optional<CongruenceSolution> solve_integer_congruences(const Matrix& a, const Matrix& b,
                                                                   std::span<const Int> moduli) {
  if (a.rows() != b.rows()) throw ValidationError("solve: a and b have different row counts");
  if (moduli.size() != a.rows()) throw ValidationError("solve: row moduli length mismatch");
  const std::size_t r = a.rows(), c = a.cols(), nb = b.cols();
  // a working column: its image under a (top) and its unknown coordinates (x)
  struct Column {
    std::vector<Int> top, x;
  };
  auto symmetric = [](const Int& v, const Int& m) {
    Int q = round_div(v, m);
    return Int(v - q * m);
  };
  std::vector<Column> cols(c);
  for (std::size_t j = 0; j < c; ++j) {
    cols[j].top.resize(r);
    cols[j].x.assign(c, Int(0));
    cols[j].x[j] = 1;
    for (std::size_t i = 0; i < r; ++i) cols[j].top[i] = moduli[i] != 0 ? symmetric(a(i, j), moduli[i]) : a(i, j);
  }
  Matrix rhs = b, x(c, nb);
  for (std::size_t i = 0; i < r; ++i)
    if (moduli[i] != 0)
      for (std::size_t j = 0; j < nb; ++j) rhs(i, j) = symmetric(rhs(i, j), moduli[i]);
  auto axpy = [&](Column& dst, const Column& src, const Int& q, std::size_t from) {
    for (std::size_t i = from; i < r; ++i)
      if (src.top[i] != 0) {
        dst.top[i] -= q * src.top[i];
        if (moduli[i] != 0 && i > from) dst.top[i] = symmetric(dst.top[i], moduli[i]);
      }
    for (std::size_t k = 0; k < c; ++k)
      if (src.x[k] != 0) dst.x[k] -= q * src.x[k];
  };
  std::vector<std::size_t> active(c);
  for (std::size_t j = 0; j < c; ++j) active[j] = j;
  for (std::size_t i = 0; i < r; ++i) {
    if (moduli[i] != 0) {
      Column m{std::vector<Int>(r), std::vector<Int>(c)};
      m.top[i] = moduli[i];
      cols.push_back(std::move(m));
      active.push_back(cols.size() - 1);
    }
    std::size_t piv = cols.size();
    while (true) {
      piv = cols.size();
      for (std::size_t j : active) {
        const Int& v = cols[j].top[i];
        if (v != 0 && (piv == cols.size() || abs(v) < abs(cols[piv].top[i]))) piv = j;
      }
      if (piv == cols.size()) break;
      bool done = true;
      for (std::size_t j : active) {
        if (j == piv || cols[j].top[i] == 0) continue;
        axpy(cols[j], cols[piv], round_div(cols[j].top[i], cols[piv].top[i]), i);
        if (cols[j].top[i] != 0) done = false;
      }
      if (done) break;
    }
    if (piv == cols.size()) {
      for (std::size_t j = 0; j < nb; ++j)
        if (rhs(i, j) != 0) return std::nullopt;
      continue;
    }
    const Column& p = cols[piv];
    for (std::size_t j = 0; j < nb; ++j) {
      if (rhs(i, j) % p.top[i] != 0) return std::nullopt;
      const Int q = rhs(i, j) / p.top[i];
      if (q == 0) continue;
      for (std::size_t l = i; l < r; ++l)
        if (p.top[l] != 0) {
          rhs(l, j) -= q * p.top[l];
          if (moduli[l] != 0) rhs(l, j) = symmetric(rhs(l, j), moduli[l]);
        }
      for (std::size_t k = 0; k < c; ++k)
        if (p.x[k] != 0) x(k, j) += q * p.x[k];
    }
    active.erase(std::find(active.begin(), active.end(), piv));
  }
  Matrix hom(c, active.size());
  for (std::size_t t = 0; t < active.size(); ++t)
    for (std::size_t k = 0; k < c; ++k) hom(k, t) = cols[active[t]].x[k];
  HermiteBasis hb = hermite_basis(std::move(hom));
  CongruenceSolution out;
  out.particular = hb.reduce(std::move(x));
  out.homogeneous = std::move(hb.basis);
  out.particular.check_entries();
  return out;
}

}  // namespace detail

/// Solve a*X ≡ b with per-row moduli over the ring of `a` (modulus 0 = exact equation,
/// which over Z/p^n means an equation in the ring).
inline std::optional<CongruenceSolution> solve_congruence_system(const RMatrix& a, const RMatrix& b,
                                                                 std::span<const Int> row_moduli) {
  if (!(a.ring == b.ring)) throw ValidationError("solve: ring mismatch");
  if (a.rows() != b.rows()) throw ValidationError("solve: dimension mismatch");
  if (row_moduli.size() != a.rows()) throw ValidationError("solve: row moduli length mismatch");
  const CoefficientRing& ring = a.ring;
  std::vector<Int> eff(row_moduli.begin(), row_moduli.end());
  if (ring.is_prime_power()) {
    for (auto& m : eff) m = (m == 0) ? ring.modulus() : gcd(m, ring.modulus());
    // x ≡ x + q e_j, so the solution lattice is taken modulo q Z^c
    auto sol = detail::solve_integer_congruences(a.entries, b.entries, eff);
    if (!sol) return std::nullopt;
    Matrix qid = Matrix::identity(a.cols()).scaled(ring.modulus());
    HermiteBasis hb = hermite_basis(Matrix::hstack(sol->homogeneous, qid));
    CongruenceSolution out;
    out.particular = hb.reduce(sol->particular);
    out.particular.reduce_all(ring.modulus());
    std::vector<std::size_t> keep;
    Matrix h = hb.basis;
    h.reduce_all(ring.modulus());
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (!h.column(j).is_zero()) keep.push_back(j);
    out.homogeneous = h.select_columns(keep);
    return out;
  }
  for (auto& m : eff) m = abs(m);
  return detail::solve_integer_congruences(a.entries, b.entries, eff);
}

/// The subquotient L/D of Z^n in invariant-factor form.
struct LatticeQuotient {
  std::vector<Int> factors;  // nonunit chain d_1 | d_2 | ..., 0 = infinite cyclic
  Matrix generators;         // n x k, lifts of the new generators
  HermiteBasis lattice;      // basis of L
  Matrix coord_change;       // k x rank(L)

  std::size_t size() const { return factors.size(); }

  /// Coordinates (reduced mod factors) of the columns of y, which must lie in L.
  std::optional<Matrix> coordinates(const Matrix& y) const {
    auto c = lattice.coordinates(y);
    if (!c) return std::nullopt;
    Matrix out = coord_change * *c;
    out.reduce_rows(factors);
    return out;
  }
};

/// LLL reduction (δ = 3/4) of linearly independent columns, in exact integer arithmetic.
/// Applies the same unimodular column operations to `u` and the inverse row operations to `u_inv`.
inline void lll_reduce(Matrix& b, Matrix* u = nullptr, Matrix* u_inv = nullptr) {
  const std::size_t n = b.cols();
  if (n < 2) return;
  auto dot = [&](std::size_t x, std::size_t y) {
    Int s = 0;
    for (std::size_t i = 0; i < b.rows(); ++i) s += b(i, x) * b(i, y);
    return s;
  };
  // d[i + 1] = Gram determinant of the first i + 1 columns; lam[k][j] the scaled Gram-Schmidt coefficients
  std::vector<Int> d(n + 1);
  std::vector<std::vector<Int>> lam(n, std::vector<Int>(n));
  d[0] = 1;
  d[1] = dot(0, 0);
  if (d[1] == 0) throw Error("lll_reduce: columns are dependent");
  auto red = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) <= d[l + 1]) return;
    Int q = round_div(lam[k][l], d[l + 1]);
    b.add_col_multiple(k, l, -q);
    if (u) u->add_col_multiple(k, l, -q);
    if (u_inv) u_inv->add_row_multiple(l, k, q);
    lam[k][l] -= q * d[l + 1];
    for (std::size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };
  std::size_t k = 1, kmax = 0;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j <= k; ++j) {
        Int v = dot(k, j);
        for (std::size_t i = 0; i < j; ++i) v = (d[i + 1] * v - lam[k][i] * lam[j][i]) / d[i];
        if (j < k) {
          lam[k][j] = v;
        } else {
          if (v == 0) throw Error("lll_reduce: columns are dependent");
          d[k + 1] = v;
        }
      }
    }
    red(k, k - 1);
    if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
      b.swap_cols(k, k - 1);
      if (u) u->swap_cols(k, k - 1);
      if (u_inv) u_inv->swap_rows(k, k - 1);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      const Int l = lam[k][k - 1];
      const Int big = (d[k - 1] * d[k + 1] + l * l) / d[k];
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        const Int t = lam[i][k];
        lam[i][k] = (d[k + 1] * lam[i][k - 1] - l * t) / d[k];
        lam[i][k - 1] = (big * t + l * lam[i][k]) / d[k + 1];
      }
      d[k] = big;
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) red(k, l);
      ++k;
    }
  }
}

/// Quotient of the lattice spanned by the columns of `l` by the sublattice spanned by `d` (d ⊆ l).
inline LatticeQuotient quotient_lattice(const Matrix& l, const Matrix& d) {
  LatticeQuotient out;
  out.lattice = hermite_basis(l);
  const std::size_t r = out.lattice.rank();
  Matrix dd = d.cols() ? d : Matrix(l.rows(), 0);
  auto c = out.lattice.coordinates(dd);
  if (!c) throw Error("quotient_lattice: relation lattice is not contained in the ambient lattice");
  detail::SmithWork w = detail::smith_work(CoefficientRing::integers(), std::move(*c), detail::kLeft | detail::kLeftInv);
  if (r == 0) {
    out.generators = Matrix(l.rows(), 0);
    out.coord_change = Matrix(0, 0);
    return out;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < r; ++i) {
    Int f = i < w.rank ? w.d(i, i) : Int(0);
    if (f == 1) continue;
    keep.push_back(i);
    out.factors.push_back(f);
  }
  out.generators = out.lattice.basis * w.left_inv.select_columns(keep);
  out.coord_change = w.left.select_rows(keep);
  // the infinite cyclic generators may be replaced by any basis of their span: take a reduced one
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (out.factors[i] == 0) free.push_back(i);
  if (free.size() > 1) {
    Matrix fb = out.generators.select_columns(free);
    Matrix inv = Matrix::identity(free.size());
    lll_reduce(fb, nullptr, &inv);
    Matrix rows = inv * out.coord_change.select_rows(free);
    for (std::size_t a = 0; a < free.size(); ++a)
      for (std::size_t i = 0; i < out.generators.rows(); ++i) out.generators(i, free[a]) = fb(i, a);
    for (std::size_t a = 0; a < free.size(); ++a)
      for (std::size_t j = 0; j < rows.cols(); ++j) out.coord_change(free[a], j) = rows(a, j);
  }
  out.generators.check_entries();
  return out;
}

/// Invariant factors of ker(d_out) / im(d_in) where the middle term is Z^m / diag(mid_moduli)
/// and d_out lands in Z^b / diag(out_moduli).
inline std::vector<Int> homology_at(const Matrix& d_in, std::span<const Int> mid_moduli, const Matrix& d_out,
                                    std::span<const Int> out_moduli) {
  const std::size_t m = mid_moduli.size();
  if (d_in.rows() != m || d_out.cols() != m || d_out.rows() != out_moduli.size())
    throw ValidationError("homology_at: shapes are not composable");
  if (!congruent_rows(d_out * d_in, Matrix(d_out.rows(), d_in.cols()), out_moduli))
    throw ValidationError("homology_at: composite of differentials is not zero");
  auto kernel = detail::solve_integer_congruences(d_out, Matrix(d_out.rows(), 0), out_moduli);
  Matrix rel = d_in;
  for (std::size_t i = 0; i < m; ++i)
    if (mid_moduli[i] != 0) {
      Matrix e(m, 1);
      e(i, 0) = mid_moduli[i];
      rel = Matrix::hstack(rel, e);
    }
  // the kernel lattice is taken inside Z^m; relations of the middle term lie in it
  Matrix l = Matrix::hstack(kernel->homogeneous, rel);
  return quotient_lattice(l, rel).factors;
}

}  // namespace relstab
