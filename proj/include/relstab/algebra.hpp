#pragma once

// The group algebra RG: elements, convolution, Hopf structure maps, regular representation.

#include "relstab/group.hpp"
#include "relstab/matrix.hpp"

#include <vector>

namespace relstab {

/// An element of RG as one coefficient per group element.
class AlgebraElement {
 public:
  AlgebraElement(CoefficientRing ring, FiniteGroup group)
      : ring_(std::move(ring)), group_(std::move(group)), coeffs_(group_.order()) {}

  AlgebraElement(CoefficientRing ring, FiniteGroup group, std::vector<Int> coeffs)
      : ring_(std::move(ring)), group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_.order()) throw ValidationError("coefficient count does not match group order");
    for (auto& c : coeffs_) c = ring_.canonical(c);
  }

  static AlgebraElement basis(const CoefficientRing& ring, const FiniteGroup& group, std::size_t g) {
    AlgebraElement a(ring, group);
    a.coeffs_[g] = 1;
    return a;
  }
  static AlgebraElement one(const CoefficientRing& ring, const FiniteGroup& group) { return basis(ring, group, 0); }

  /// Sum of all group elements.
  static AlgebraElement norm(const CoefficientRing& ring, const FiniteGroup& group) {
    return AlgebraElement(ring, group, std::vector<Int>(group.order(), Int(1)));
  }

  const CoefficientRing& ring() const { return ring_; }
  const FiniteGroup& group() const { return group_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& operator[](std::size_t g) const { return coeffs_[g]; }

  AlgebraElement operator+(const AlgebraElement& b) const {
    check_compatible(b);
    std::vector<Int> c(coeffs_);
    for (std::size_t g = 0; g < c.size(); ++g) c[g] += b.coeffs_[g];
    return AlgebraElement(ring_, group_, std::move(c));
  }
  AlgebraElement operator-(const AlgebraElement& b) const {
    check_compatible(b);
    std::vector<Int> c(coeffs_);
    for (std::size_t g = 0; g < c.size(); ++g) c[g] -= b.coeffs_[g];
    return AlgebraElement(ring_, group_, std::move(c));
  }
  AlgebraElement scaled(const Int& s) const {
    std::vector<Int> c(coeffs_);
    for (auto& x : c) x *= s;
    return AlgebraElement(ring_, group_, std::move(c));
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.ring_ == b.ring_ && a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

  void check_compatible(const AlgebraElement& b) const {
    if (!(ring_ == b.ring_)) throw ValidationError("algebra elements over different rings");
    if (!(group_ == b.group_)) throw ValidationError("algebra elements over different groups");
  }

 private:
  CoefficientRing ring_;
  FiniteGroup group_;
  std::vector<Int> coeffs_;
};

/// Convolution product through the multiplication table.
inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_compatible(b);
  const FiniteGroup& G = a.group();
  std::vector<Int> c(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (a[g] == 0) continue;
    for (std::size_t h = 0; h < G.order(); ++h)
      if (b[h] != 0) c[G.multiply(g, h)] += a[g] * b[h];
  }
  return AlgebraElement(a.ring(), G, std::move(c));
}

/// g -> g^{-1}, extended linearly.
inline AlgebraElement antipode(const AlgebraElement& a) {
  const FiniteGroup& G = a.group();
  std::vector<Int> c(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) c[G.inverse(g)] = a[g];
  return AlgebraElement(a.ring(), G, std::move(c));
}

inline Int augmentation(const AlgebraElement& a) {
  Int s = 0;
  for (const auto& c : a.coeffs()) s += c;
  return a.ring().canonical(s);
}

/// Left multiplication by g on the basis {h}: column h has its 1 in row g*h.
inline Matrix regular_representation(const FiniteGroup& group, std::size_t g) {
  Matrix m(group.order(), group.order());
  for (std::size_t h = 0; h < group.order(); ++h) m(group.multiply(g, h), h) = 1;
  return m;
}

inline RMatrix regular_representation(const CoefficientRing& ring, const FiniteGroup& group, std::size_t g) {
  return RMatrix(ring, regular_representation(group, g));
}

/// Right multiplication r -> r*a on the basis {h}; this is the matrix of the RG-linear
/// endomorphism of the left regular module determined by a.
inline Matrix right_multiplication(const AlgebraElement& a) {
  const FiniteGroup& G = a.group();
  Matrix m(G.order(), G.order());
  for (std::size_t h = 0; h < G.order(); ++h)
    for (std::size_t k = 0; k < G.order(); ++k)
      if (a[k] != 0) m(G.multiply(h, k), h) += a[k];
  return m;
}

}  // namespace relstab
