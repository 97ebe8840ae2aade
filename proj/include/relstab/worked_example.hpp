#pragma once

// The ZC2 example coker(x - a): six properties forced by the presentation.

#include "relstab/constructions.hpp"
#include "relstab/homological.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace relstab {

struct ExampleAssertion {
  std::string name;
  bool pass = false;
  std::string observed;
};

struct ExampleReport {
  long long shift = 3;
  GModule m, n;  // M = coker(x - a), N = M ⊗ M
  std::vector<ExampleAssertion> assertions;
  double seconds = 0;

  bool pass() const {
    for (const auto& a : assertions)
      if (!a.pass) return false;
    return !assertions.empty();
  }
};

namespace detail {

inline std::string cyclic_text(const GModule& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rank(); ++i) s += (i ? "," : "") + m.factors()[i].str();
  s += "]";
  if (m.rank() == 1) s += " with x acting as " + m.action(1)(0, 0).str();
  return s;
}

inline std::string pdim_text(const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : "infinite"; }

}  // namespace detail

/// M = Z[C2]/(x - a) is Z/(a^2 - 1) with x acting as a. Asserts that M is not weakly projective
/// and has pdim 1, and that N = M ⊗ M has trivial action, infinite pdim, and is not weakly projective.
inline ExampleReport verify_worked_example(long long shift = 3) {
  const auto t0 = std::chrono::steady_clock::now();
  const CoefficientRing z = CoefficientRing::integers();
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  ExampleReport r;
  r.shift = shift;
  r.m = from_rg_presentation(z, c2, 1, {{AlgebraElement(z, c2, {Int(-shift), Int(1)})}});
  r.n = tensor_product(r.m, r.m);
  const Int order = abs(Int(shift) * shift - 1);
  // when a^2 = 1 the module is Z itself and x acts by a on the nose
  auto same = [&](const Int& x, const Int& y) { return order == 0 ? x == y : mod_floor(x - y, order) == 0; };
  const bool m_cyclic = r.m.rank() == 1 && r.m.factors()[0] == order && same(r.m.action(1)(0, 0), Int(shift));
  const bool n_trivial = r.n.rank() == 1 && r.n.factors()[0] == order && r.n.action(1) == Matrix::identity(1);
  const auto pm = finite_projective_dimension(r.m), pn = finite_projective_dimension(r.n);
  const bool wm = is_weakly_projective(r.m), wn = is_weakly_projective(r.n);
  auto wp = [](bool w) { return std::string(w ? "weakly projective" : "not weakly projective"); };
  const std::string o = order.str();
  r.assertions = {
      {"M is Z/" + o + " with x acting as " + std::to_string(shift), m_cyclic, detail::cyclic_text(r.m)},
      {"M is not weakly projective", !wm, wp(wm)},
      {"pdim M = 1", pm == std::optional<std::size_t>(1), detail::pdim_text(pm)},
      {"N = M (x) M is Z/" + o + " with trivial action", n_trivial, detail::cyclic_text(r.n)},
      {"pdim N is infinite", !pn.has_value(), detail::pdim_text(pn)},
      {"N is not weakly projective", !wn, wp(wn)}};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace relstab
