#pragma once

// Minimal resolutions over local group algebras and a windowed growth estimate of the Betti numbers.

#include "relstab/homological.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

namespace relstab {

struct ResolutionStep {
  std::size_t rank;  // number of RG summands in the cover
  GModuleHom cover;
  GModule syzygy;
};

struct ResolutionLog {
  std::vector<ResolutionStep> covers;
  std::vector<std::size_t> betti;
  bool minimal = true;
};

namespace detail {

/// Module generators whose images form a basis of M/JM, J = (p, g - 1 : g in G).
inline std::vector<std::size_t> radical_top_generators(const GModule& m) {
  const std::size_t k = m.rank();
  const Int& p = m.ring().p();
  Matrix span(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    Matrix e(k, 1);
    e(j, 0) = p;
    span = Matrix::hstack(span, e);
    for (std::size_t g : m.group().generators())
      span = Matrix::hstack(span, (m.action(g) - Matrix::identity(k)).column(j));
  }
  std::vector<std::size_t> chosen;
  for (std::size_t j = 0; j < k; ++j) {
    Matrix e(k, 1);
    e(j, 0) = 1;
    if (solve_integer_congruences(span, e, m.moduli())) continue;
    chosen.push_back(j);
    span = Matrix::hstack(span, e);
  }
  return chosen;
}

}  // namespace detail

/// Minimal free resolution for `steps` steps. Needs RG local: R = Z/p^n and G a p-group.
inline ResolutionLog minimal_resolution(const GModule& m, std::size_t steps) {
  if (!m.ring().is_prime_power() || !m.group().is_p_group(m.ring().p()))
    throw RegimeError("minimal resolutions need R = Z/p^n and G a p-group");
  ResolutionLog log;
  GModule current = m;
  for (std::size_t s = 0; s < steps; ++s) {
    FreeCover c = cover_on(current, detail::radical_top_generators(current));
    Kernel k = kernel(c.map);
    if (!is_surjective(c.map)) throw Error("minimal cover is not surjective");
    log.betti.push_back(c.generators.cols());
    log.covers.push_back({c.generators.cols(), c.map, k.module});
    current = k.module;
  }
  return log;
}

struct ComplexityReport {
  std::size_t complexity = 0;   // 1 + degree of the best polynomial fit; 0 if the window is all zero
  bool resolved = true;         // false when no degree <= 3 fits
  std::size_t window_start = 0;
  std::vector<double> residuals;  // max |residual| for degree 0, 1, 2, 3 (where fitted)
};

/// Fits the Betti numbers on the last half of the window by polynomials of degree 0..3 and
/// takes the smallest degree whose residuals stay below 1/2. A heuristic, not the asymptotic invariant.
inline ComplexityReport complexity_estimate(const std::vector<std::size_t>& betti) {
  ComplexityReport out;
  out.window_start = betti.size() / 2;
  const std::size_t n = betti.size() - out.window_start;
  if (n == 0 || std::all_of(betti.begin() + out.window_start, betti.end(), [](std::size_t b) { return b == 0; }))
    return out;
  Eigen::VectorXd y(n);
  for (std::size_t i = 0; i < n; ++i) y(i) = static_cast<double>(betti[out.window_start + i]);
  bool found = false;
  for (std::size_t deg = 0; deg <= 3 && deg < n; ++deg) {
    Eigen::MatrixXd a(n, deg + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c <= deg; ++c) a(i, c) = std::pow(static_cast<double>(out.window_start + i), c);
    Eigen::VectorXd coef = a.colPivHouseholderQr().solve(y);
    double res = (a * coef - y).cwiseAbs().maxCoeff();
    out.residuals.push_back(res);
    if (!found && res < 0.5) {
      out.complexity = deg + 1;
      found = true;
    }
  }
  if (!found) {
    out.resolved = false;
    out.complexity = 5;
  }
  return out;
}

}  // namespace relstab
