#pragma once

#include "relstab/bigint.hpp"

#include <string>

namespace relstab {

/// The coefficient ring R: either the integers or Z/p^n.
class CoefficientRing {
 public:
  enum class Kind { Integers, PrimePower };

  CoefficientRing() = default;

  static CoefficientRing integers() { return CoefficientRing{}; }

  static CoefficientRing prime_power(const Int& p, unsigned n) {
    if (n < 1) throw ValidationError("prime power exponent must be >= 1");
    if (!is_prime(p)) throw ValidationError(p.str() + " is not prime");
    CoefficientRing r;
    r.kind_ = Kind::PrimePower;
    r.p_ = p;
    r.n_ = n;
    r.modulus_ = boost::multiprecision::pow(p, n);
    return r;
  }

  Kind kind() const { return kind_; }
  bool is_integers() const { return kind_ == Kind::Integers; }
  bool is_prime_power() const { return kind_ == Kind::PrimePower; }
  const Int& p() const { return p_; }
  unsigned n() const { return n_; }

  /// 0 for the integers, p^n otherwise.
  const Int& modulus() const { return modulus_; }

  /// Canonical representative of an element.
  Int canonical(const Int& a) const { return is_integers() ? a : mod_floor(a, modulus_); }

  bool is_unit(const Int& a) const {
    if (is_integers()) return a == 1 || a == -1;
    return mod_floor(a, p_) != 0;
  }

  /// Effective modulus of a summand R/d: d itself over Z; over Z/p^n the factor 0 stands for the free summand R.
  Int effective(const Int& d) const {
    if (is_integers()) return abs(d);
    return d == 0 ? modulus_ : gcd(d, modulus_);
  }

  /// Inverse of `effective`: maps an effective modulus back to the factor convention.
  Int factor_from_effective(const Int& m) const {
    if (is_prime_power() && m == modulus_) return 0;
    return m;
  }

  std::string name() const {
    if (is_integers()) return "Z";
    return "Z/" + p_.str() + "^" + std::to_string(n_);
  }

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.n_ == b.n_;
  }

  static bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  Kind kind_ = Kind::Integers;
  Int p_ = 0;
  unsigned n_ = 0;
  Int modulus_ = 0;
};

}  // namespace relstab
