#pragma once

#include "relstab/bigint.hpp"

#include <memory>
#include <string>
#include <vector>

namespace relstab {

/// A finite group given by its multiplication table, identity at index 0.
/// Cheap to copy: the validated table is shared and immutable.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  FiniteGroup() : FiniteGroup(validate(Table{{0}}, "C1")) {}

  /// Checks identity at 0, Latin-square rows/columns and associativity.
  static FiniteGroup validate(const Table& table, std::string name = "", std::vector<std::string> labels = {}) {
    const std::size_t n = table.size();
    if (n == 0) throw ValidationError("group table is empty");
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) throw ValidationError("group table is not square");
      for (std::size_t x : table[i])
        if (x >= n) throw ValidationError("group table entry out of range");
    }
    for (std::size_t g = 0; g < n; ++g)
      if (table[0][g] != g || table[g][0] != g) throw ValidationError("missing identity at index 0");
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<bool> row(n), col(n);
      for (std::size_t h = 0; h < n; ++h) {
        row[table[g][h]] = true;
        col[table[h][g]] = true;
      }
      for (std::size_t h = 0; h < n; ++h) {
        if (!row[h]) throw ValidationError("row " + std::to_string(g) + " is not a permutation");
        if (!col[h]) throw ValidationError("column " + std::to_string(g) + " is not a permutation");
      }
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw ValidationError("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ")");
    if (!labels.empty() && labels.size() != n) throw ValidationError("label count does not match group order");

    auto d = std::make_shared<Data>();
    d->table = table;
    d->name = std::move(name);
    d->labels = std::move(labels);
    d->inverse.resize(n);
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h)
        if (table[g][h] == 0) d->inverse[g] = h;
    // greedy generating set: smallest index not yet in the generated subgroup
    std::vector<bool> reached(n, false);
    reached[0] = true;
    std::size_t count = 1;
    for (std::size_t g = 1; g < n && count < n; ++g) {
      if (reached[g]) continue;
      d->generators.push_back(g);
      std::vector<std::size_t> frontier;
      for (std::size_t h = 0; h < n; ++h)
        if (reached[h]) frontier.push_back(h);
      while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t h : frontier)
          for (std::size_t s : d->generators) {
            std::size_t x = table[h][s];
            if (!reached[x]) {
              reached[x] = true;
              ++count;
              next.push_back(x);
            }
          }
        frontier = std::move(next);
      }
    }
    return FiniteGroup(std::move(d));
  }

  static FiniteGroup cyclic(std::size_t n) {
    if (n == 0) throw ValidationError("cyclic group order must be positive");
    Table t(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
      labels[a] = a == 0 ? "e" : a == 1 ? "x" : "x^" + std::to_string(a);
    }
    return validate(t, "C" + std::to_string(n), labels);
  }

  /// Elements (a, b) indexed a * |H| + b.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t m = g.order(), n = h.order();
    Table t(m * n, std::vector<std::size_t>(m * n));
    for (std::size_t a1 = 0; a1 < m; ++a1)
      for (std::size_t b1 = 0; b1 < n; ++b1)
        for (std::size_t a2 = 0; a2 < m; ++a2)
          for (std::size_t b2 = 0; b2 < n; ++b2)
            t[a1 * n + b1][a2 * n + b2] = g.multiply(a1, a2) * n + h.multiply(b1, b2);
    return validate(t, g.name() + "x" + h.name());
  }

  std::size_t order() const { return d_->table.size(); }
  std::size_t multiply(std::size_t g, std::size_t h) const { return d_->table[g][h]; }
  std::size_t inverse(std::size_t g) const { return d_->inverse[g]; }
  const Table& table() const { return d_->table; }
  const std::string& name() const { return d_->name; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::vector<std::size_t>& generators() const { return d_->generators; }

  std::string label(std::size_t g) const {
    return d_->labels.empty() ? "g" + std::to_string(g) : d_->labels[g];
  }

  /// True when the order is a power of p.
  bool is_p_group(const Int& p) const {
    Int n = order();
    while (n % p == 0) n /= p;
    return n == 1;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.d_ == b.d_ || a.d_->table == b.d_->table;
  }

 private:
  struct Data {
    Table table;
    std::vector<std::size_t> inverse;
    std::vector<std::size_t> generators;
    std::string name;
    std::vector<std::string> labels;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

}  // namespace relstab
