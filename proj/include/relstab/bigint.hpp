#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace relstab {

using Int = boost::multiprecision::cpp_int;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad table, dimension mismatch, broken equivariance).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operation requested outside the coefficient regime it supports.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// An intermediate integer exceeded the configured bit cap.
class EntryOverflow : public Error {
 public:
  using Error::Error;
};

namespace detail {
inline std::atomic<std::size_t>& entry_bit_cap() {
  static std::atomic<std::size_t> cap{4096};
  return cap;
}
}  // namespace detail

inline void set_max_entry_bits(std::size_t bits) { detail::entry_bit_cap().store(bits); }
inline std::size_t max_entry_bits() { return detail::entry_bit_cap().load(); }

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline std::size_t bit_length(const Int& a) {
  if (a == 0) return 0;
  return boost::multiprecision::msb(abs(a)) + 1;
}

inline void check_entry(const Int& a) {
  if (bit_length(a) > max_entry_bits())
    throw EntryOverflow("integer entry exceeds " + std::to_string(max_entry_bits()) + " bits");
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Representative of a in [0, m); m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Reduce modulo m with the convention that m == 0 means "no reduction".
inline Int reduce(const Int& a, const Int& m) { return m == 0 ? a : mod_floor(a, m); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Quotient rounded to the nearest integer; leaves
/// a remainder of absolute value at most |b|/2.
inline Int round_div(const Int& a, const Int& b) {
  Int q = floor_div(a, b);
  Int r = a - q * b;
  if (abs(2 * r) > abs(b)) ++q;
  return q;
}

/// Extended gcd: returns g = gcd(a,b) >= 0 with x*a + y*b = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = floor_div(old_r, r);
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

/// Inverse of a modulo m; throws when a is not a unit.
inline Int inverse_mod(const Int& a, const Int& m) {
  Int x, y;
  Int g = ext_gcd(mod_floor(a, m), m, x, y);
  if (g != 1) throw Error("element is not a unit modulo " + m.str());
  return mod_floor(x, m);
}

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace relstab
