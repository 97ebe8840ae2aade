#pragma once

// Smith normal form over Z and Z/p^n with tracked unimodular transforms.

#include "relstab/matrix.hpp"

#include <optional>

namespace relstab {

/// a = u * s * v with u, v invertible over the ring and s diagonal with s_1 | s_2 | ...
struct SmithDecomposition {
  RMatrix u, s, v, u_inv, v_inv;
  std::size_t rank = 0;

  std::vector<Int> diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s.entries(i, i));
    return d;
  }
};

namespace detail {

enum SmithTrack : unsigned { kLeft = 1, kLeftInv = 2, kRight = 4, kRightInv = 8, kAll = 15 };

/// left * a * right == d, all transforms optional.
struct SmithWork {
  Matrix d;
  Matrix left, left_inv, right, right_inv;
  std::size_t rank = 0;
  unsigned track = 0;
  Int modulus = 0;  // 0 over Z

  void init(Matrix a, unsigned tr, const Int& m) {
    d = std::move(a);
    track = tr;
    modulus = m;
    if (track & kLeft) left = Matrix::identity(d.rows());
    if (track & kLeftInv) left_inv = Matrix::identity(d.rows());
    if (track & kRight) right = Matrix::identity(d.cols());
    if (track & kRightInv) right_inv = Matrix::identity(d.cols());
  }

  void reduce_row(Matrix& m, std::size_t i) {
    if (modulus == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod_floor(m(i, j), modulus);
  }
  void reduce_col(Matrix& m, std::size_t j) {
    if (modulus == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = mod_floor(m(i, j), modulus);
  }

  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    d.swap_rows(a, b);
    if (track & kLeft) left.swap_rows(a, b);
    if (track & kLeftInv) left_inv.swap_cols(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    d.swap_cols(a, b);
    if (track & kRight) right.swap_cols(a, b);
    if (track & kRightInv) right_inv.swap_rows(a, b);
  }
  // row[dst] += q row[src]
  void row_add(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    d.add_row_multiple(dst, src, q);
    reduce_row(d, dst);
    if (track & kLeft) {
      left.add_row_multiple(dst, src, q);
      reduce_row(left, dst);
    }
    if (track & kLeftInv) {
      left_inv.add_col_multiple(src, dst, -q);
      reduce_col(left_inv, src);
    }
  }
  // col[dst] += q col[src]
  void col_add(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    d.add_col_multiple(dst, src, q);
    reduce_col(d, dst);
    if (track & kRight) {
      right.add_col_multiple(dst, src, q);
      reduce_col(right, dst);
    }
    if (track & kRightInv) {
      right_inv.add_row_multiple(src, dst, -q);
      reduce_row(right_inv, src);
    }
  }
  // row[i] *= u for a unit u with inverse u_inv
  void row_scale(std::size_t i, const Int& u, const Int& u_inv) {
    d.scale_row(i, u);
    reduce_row(d, i);
    if (track & kLeft) {
      left.scale_row(i, u);
      reduce_row(left, i);
    }
    if (track & kLeftInv) {
      left_inv.scale_col(i, u_inv);
      reduce_col(left_inv, i);
    }
  }
};

/// Integer Smith form. Pivot: smallest nonzero |entry|, then lowest row, then lowest column.
inline SmithWork smith_integers(Matrix a, unsigned track) {
  SmithWork w;
  w.init(std::move(a), track, 0);
  Matrix& d = w.d;
  const std::size_t r = d.rows(), c = d.cols();
  std::size_t t = 0;
  for (; t < std::min(r, c); ++t) {
    bool found_any = false;
    while (true) {
      std::size_t pi = r, pj = c;
      Int best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          const Int& x = d(i, j);
          if (x == 0) continue;
          if (pi == r || abs(x) < best) {
            best = abs(x);
            pi = i;
            pj = j;
          }
        }
      if (pi == r) break;
      found_any = true;
      w.row_swap(t, pi);
      w.col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        w.row_add(i, t, -round_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        w.col_add(j, t, -round_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      w.row_add(t, bad, 1);
    }
    if (!found_any) break;
    if (d(t, t) < 0) w.row_scale(t, -1, -1);
  }
  w.rank = t;
  return w;
}

inline unsigned valuation(const Int& a, const Int& p) {
  unsigned v = 0;
  Int x = a;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

/// Smith form over the local ring Z/p^n. Pivot: least p-adic valuation, then lowest row, then lowest column.
inline SmithWork smith_prime_power(Matrix a, const Int& p, const Int& q, unsigned track) {
  a.reduce_all(q);
  SmithWork w;
  w.init(std::move(a), track, q);
  Matrix& d = w.d;
  const std::size_t r = d.rows(), c = d.cols();
  std::size_t t = 0;
  for (; t < std::min(r, c); ++t) {
    std::size_t pi = r, pj = c;
    unsigned best = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (d(i, j) == 0) continue;
        unsigned v = valuation(d(i, j), p);
        if (pi == r || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi == r) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);
    Int pv = boost::multiprecision::pow(p, best);
    Int unit = d(t, t) / pv;
    Int unit_inv = inverse_mod(unit, q);
    w.row_scale(t, unit_inv, unit);
    for (std::size_t i = t + 1; i < r; ++i)
      if (d(i, t) != 0) w.row_add(i, t, -(d(i, t) / pv));
    for (std::size_t j = t + 1; j < c; ++j)
      if (d(t, j) != 0) w.col_add(j, t, -(d(t, j) / pv));
  }
  w.rank = t;
  return w;
}

inline SmithWork smith_work(const CoefficientRing& ring, Matrix a, unsigned track) {
  SmithWork w = ring.is_integers() ? smith_integers(std::move(a), track)
                                   : smith_prime_power(std::move(a), ring.p(), ring.modulus(), track);
  w.d.check_entries();
  if (track & kLeft) w.left.check_entries();
  if (track & kRight) w.right.check_entries();
  return w;
}

}  // namespace detail

/// Smith normal form a = u * s * v; deterministic for fixed input.
inline SmithDecomposition smith_normal_form(const RMatrix& a) {
  detail::SmithWork w = detail::smith_work(a.ring, a.entries, detail::kAll);
  SmithDecomposition out;
  out.u = RMatrix(a.ring, w.left_inv);
  out.u_inv = RMatrix(a.ring, w.left);
  out.v = RMatrix(a.ring, w.right_inv);
  out.v_inv = RMatrix(a.ring, w.right);
  out.s = RMatrix(a.ring, w.d);
  out.rank = w.rank;
  return out;
}

}  // namespace relstab
