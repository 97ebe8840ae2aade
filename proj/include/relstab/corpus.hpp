#pragma once

// Seeded random modules for property checks.

#include "relstab/homological.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace relstab {

struct CorpusItem {
  std::string name;
  GModule module;
};

/// Bounded draws straight from the engine, so results do not depend on the standard library's distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }
  long long between(long long lo, long long hi) { return lo + static_cast<long long>(below(hi - lo + 1)); }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v.at(below(v.size()));
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline AlgebraElement random_element(SeededRng& rng, const CoefficientRing& ring, const FiniteGroup& group,
                                     long long bound) {
  std::vector<Int> c(group.order());
  for (auto& x : c) x = rng.between(-bound, bound);
  return AlgebraElement(ring, group, std::move(c));
}

inline GModule random_presentation(SeededRng& rng, const CoefficientRing& ring, const FiniteGroup& group,
                                   long long bound) {
  const std::size_t b = 1 + rng.below(2), a = 1 + rng.below(2);
  std::vector<std::vector<AlgebraElement>> rows(b);
  for (auto& row : rows)
    for (std::size_t j = 0; j < a; ++j) row.push_back(random_element(rng, ring, group, bound));
  return from_rg_presentation(ring, group, b, rows);
}

/// R/d with the generator of a cyclic group acting by a scalar s with s^n ≡ 1 (trivial action otherwise).
inline GModule random_scalar_module(SeededRng& rng, const CoefficientRing& ring, const FiniteGroup& group,
                                    long long max_factor) {
  Int d;
  if (ring.is_integers()) {
    d = rng.below(3) == 0 ? 0 : rng.between(2, std::max<long long>(2, max_factor));
  } else {
    unsigned e = static_cast<unsigned>(rng.below(ring.n()));  // 0 means the free summand
    d = e == 0 ? Int(0) : Int(boost::multiprecision::pow(ring.p(), e));
  }
  const std::size_t n = group.order();
  const bool cyclic = group.generators().size() == 1 && group.generators()[0] == 1 && group == FiniteGroup::cyclic(n);
  std::vector<Int> candidates{1};
  if (cyclic) {
    Int eff = ring.effective(d);
    if (eff == 0) {
      if (n % 2 == 0) candidates.push_back(-1);
    } else {
      for (Int s = 2; s < eff; ++s) {
        Int power = 1;
        for (std::size_t k = 0; k < n; ++k) power = mod_floor(power * s, eff);
        if (power == 1 && gcd(s, eff) == 1) candidates.push_back(s);
      }
    }
  }
  Int s = rng.pick(candidates);
  std::vector<Int> scalars(n);
  Int acc = 1;
  for (std::size_t k = 0; k < n; ++k) {
    scalars[k] = cyclic ? acc : Int(1);
    acc *= s;
  }
  return scalar_module(ring, group, d, scalars);
}

}  // namespace detail

/// A deterministic mix of presentation cokernels, one-dimensional modules, syzygies, duals,
/// relative cosyzygies, induced modules, tensor products and direct sums.
inline std::vector<CorpusItem> generate_corpus(std::uint64_t seed, const CoefficientRing& ring,
                                               const FiniteGroup& group, std::size_t size, long long max_factor) {
  SeededRng rng(seed);
  const long long bound = std::max<long long>(1, std::min<long long>(3, max_factor));
  std::vector<CorpusItem> out;
  auto small = [&] {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i].module.rank() <= 3) idx.push_back(i);
    return idx;
  };
  const std::string tag = group.name().empty() ? "G" + std::to_string(group.order()) : group.name();
  for (std::size_t i = 0; out.size() < size; ++i) {
    if (i > 100 * size + 100) throw Error("corpus generation could not produce enough nonzero modules");
    const std::size_t kind = i % 10;
    std::string name = tag + "#" + std::to_string(out.size()) + ":";
    GModule m;
    switch (kind) {
      case 0:
      case 1:
        m = detail::random_presentation(rng, ring, group, bound);
        name += "presentation";
        break;
      case 2:
        m = detail::random_scalar_module(rng, ring, group, max_factor);
        name += "scalar";
        break;
      case 3:
        m = syzygy(detail::random_presentation(rng, ring, group, bound)).module;
        name += "syzygy";
        break;
      case 4:
        m = dual(detail::random_presentation(rng, ring, group, bound));
        name += "dual";
        break;
      case 5:
        m = relative_cosyzygy(detail::random_scalar_module(rng, ring, group, max_factor)).module;
        name += "relative_cosyzygy";
        break;
      case 6: {
        Int d = ring.is_integers() ? Int(rng.between(2, std::max<long long>(2, max_factor)))
                                   : (ring.n() > 1 ? ring.p() : Int(0));
        std::vector<Int> f{d};
        m = induction(ring, group, f);
        name += "induced";
        break;
      }
      case 7:
      case 8: {
        auto idx = small();
        if (idx.size() < 2) continue;
        const std::size_t a = rng.pick(idx), b = rng.pick(idx);
        m = kind == 7 ? tensor_product(out[a].module, out[b].module) : direct_sum(out[a].module, out[b].module);
        name += (kind == 7 ? "tensor(#" : "sum(#") + std::to_string(a) + ",#" + std::to_string(b) + ")";
        break;
      }
      default:
        m = rng.below(2) ? trivial_module(ring, group) : free_module(ring, group, 1);
        name += "basic";
        break;
    }
    if (m.is_zero() || m.rank() > 8) continue;
    out.push_back({name, m});
  }
  return out;
}

/// Elementary divisors of an R-module given by invariant factors: prime powers, with 0 for free summands.
inline std::vector<Int> elementary_divisors(const std::vector<Int>& factors) {
  std::vector<Int> out;
  for (Int f : factors) {
    if (f == 0) {
      out.push_back(0);
      continue;
    }
    for (Int p = 2; p * p <= f; ++p) {
      Int q = 1;
      while (f % p == 0) {
        f /= p;
        q *= p;
      }
      if (q > 1) out.push_back(q);
    }
    if (f > 1) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace relstab
