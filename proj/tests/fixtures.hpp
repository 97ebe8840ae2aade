#pragma once

#include "relstab/relstab.hpp"

namespace fx {

using namespace relstab;

inline CoefficientRing z() { return CoefficientRing::integers(); }
inline FiniteGroup c2() { return FiniteGroup::cyclic(2); }
inline FiniteGroup c3() { return FiniteGroup::cyclic(3); }

/// coker(x - a) over Z[C2]: Z/(a^2 - 1) with x acting by a.
inline GModule shifted(long long a = 3) {
  return from_rg_presentation(z(), c2(), 1, {{AlgebraElement(z(), c2(), {Int(-a), Int(1)})}});
}

inline GModule sign(const CoefficientRing& r = z()) { return scalar_module(r, c2(), 0, {Int(1), Int(-1)}); }

inline bool is_iso(const GModuleHom& f) { return is_injective(f) && is_surjective(f); }

/// True when some equivariant M -> N among the Hom generators and their small sums is an isomorphism.
inline bool isomorphic(const GModule& m, const GModule& n) {
  if (m.factors() != n.factors()) return false;
  HomGroup h = hom_group(m, n);
  const std::size_t k = h.generators.size();
  if (k == 0) return m.is_zero() && n.is_zero();
  // search coefficient vectors in {-1, 0, 1}^k, enough for the small modules used in tests
  std::size_t total = 1;
  for (std::size_t i = 0; i < k && total < 6561; ++i) total *= 3;
  for (std::size_t code = 1; code < total; ++code) {
    Matrix acc(n.rank(), m.rank());
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i, c /= 3) {
      long long s = static_cast<long long>(c % 3) - 1;
      if (s != 0) acc = acc + h.generators[i].matrix().scaled(s);
    }
    GModuleHom f = GModuleHom::create(m, n, acc.reduced_rows(n.moduli()));
    if (is_iso(f)) return true;
  }
  return false;
}

}  // namespace fx
