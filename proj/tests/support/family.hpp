#pragma once

// Small categories for exhaustive checks, and brute-force oracles that do
// not share code with the engine.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sammy/sammy.hpp"

namespace sammy::testing {

inline std::vector<CategoryPtr> dedupe(const std::vector<CategoryPtr>& cs) {
  std::vector<CategoryPtr> out;
  for (const auto& c : cs) {
    bool seen = false;
    for (const auto& d : out)
      if (categoriesIsomorphic(c, d)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(c);
  }
  return out;
}

/// Every preorder on n objects with at most maxMorphisms morphisms, up to
/// isomorphism.
inline std::vector<CategoryPtr> preorders(int n, int maxMorphisms) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) pairs.push_back({i, j});
  std::vector<CategoryPtr> out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) rel[i][i] = 1;
    int count = n;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) {
        rel[pairs[k].first][pairs[k].second] = 1;
        ++count;
      }
    if (count > maxMorphisms) continue;
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        for (int c = 0; c < n && transitive; ++c)
          if (rel[a][b] && rel[b][c] && !rel[a][c]) transitive = false;
    if (!transitive) continue;
    out.push_back(thinCategory(n, [&](int a, int b) { return rel[a][b] != 0; }));
  }
  return dedupe(out);
}

/// Every monoid of the given order, up to isomorphism, as a one-object
/// category. Element 0 is the unit.
inline std::vector<CategoryPtr> monoids(int order) {
  std::vector<CategoryPtr> out;
  const int free = order - 1;
  int cells = free * free;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= order;
  for (long long code = 0; code < total; ++code) {
    std::vector<int> table(order * order);
    long long c = code;
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) {
        if (a == 0) table[a * order + b] = b;
        else if (b == 0) table[a * order + b] = a;
        else {
          table[a * order + b] = static_cast<int>(c % order);
          c /= order;
        }
      }
    bool assoc = true;
    for (int a = 0; a < order && assoc; ++a)
      for (int b = 0; b < order && assoc; ++b)
        for (int d = 0; d < order && assoc; ++d)
          if (table[table[a * order + b] * order + d] != table[a * order + table[b * order + d]]) assoc = false;
    if (!assoc) continue;
    std::vector<Morphism> ms(order, Morphism{0, 0});
    out.push_back(Category::make(1, ms, {0}, [&](int f, int g) { return table[f * order + g]; }));
  }
  return dedupe(out);
}

/// Two parallel arrows a, b : 0 -> 1.
inline CategoryPtr parallelPair() {
  return Category::make(2, {{0, 0}, {1, 1}, {0, 1}, {0, 1}}, {0, 1}, [](int f, int g) {
    if (f == 0) return g;
    if (g == 1) return f;
    return -1;
  });
}

/// All categories with at most 3 objects and 6 morphisms in the catalogue:
/// every preorder, every monoid of order <= 3, the parallel pair, and the
/// sum of the group of order 2 with a point.
inline const std::vector<CategoryPtr>& smallFamily() {
  static const std::vector<CategoryPtr> family = [] {
    std::vector<CategoryPtr> v{emptyCategory()};
    for (int n = 1; n <= 3; ++n)
      for (auto& c : preorders(n, 6)) v.push_back(c);
    for (int k = 2; k <= 3; ++k)
      for (auto& c : monoids(k)) v.push_back(c);
    v.push_back(parallelPair());
    for (const auto& m : monoids(2))
      if (m->isIsomorphism(1)) v.push_back(coproductCat(m, terminalCategory()).category);
    return v;
  }();
  return family;
}

/// A fixed pseudo-random sample of 4-object preorders.
inline std::vector<CategoryPtr> fourObjectSample(int count, unsigned seed = 20240607) {
  std::mt19937 rng(seed);
  auto all = preorders(4, 16);
  std::shuffle(all.begin(), all.end(), rng);
  if (static_cast<int>(all.size()) > count) all.resize(count);
  return all;
}

// ---------------------------------------------------------------------------
// Oracles

/// Every cone over d, at every apex, by direct enumeration of leg tuples.
inline std::vector<Cone> allConesBrute(const Functor& d) {
  const auto& J = *d.source;
  const auto& C = *d.target;
  std::vector<Cone> out;
  for (int apex = 0; apex < C.objectCount(); ++apex) {
    std::vector<int> legs(J.objectCount());
    std::function<void(int)> go = [&](int j) {
      if (j == J.objectCount()) {
        for (int u = 0; u < J.morphismCount(); ++u)
          if (C.compose(legs[J.src(u)], d.onMorphism(u)) != legs[J.tgt(u)]) return;
        out.push_back(Cone{apex, legs});
        return;
      }
      for (int m = 0; m < C.morphismCount(); ++m)
        if (C.src(m) == apex && C.tgt(m) == d(j)) {
          legs[j] = m;
          go(j + 1);
        }
    };
    go(0);
  }
  return out;
}

/// Cones through which every cone factors uniquely.
inline std::vector<Cone> universalConesBrute(const Functor& d) {
  const auto& C = *d.target;
  const auto cones = allConesBrute(d);
  std::vector<Cone> out;
  for (const auto& u : cones) {
    bool universal = true;
    for (const auto& other : cones) {
      int factorings = 0;
      for (int m = 0; m < C.morphismCount(); ++m) {
        if (C.src(m) != other.apex || C.tgt(m) != u.apex) continue;
        bool ok = true;
        for (std::size_t j = 0; j < u.legs.size() && ok; ++j) ok = C.compose(m, u.legs[j]) == other.legs[j];
        factorings += ok;
      }
      if (factorings != 1) {
        universal = false;
        break;
      }
    }
    if (universal) out.push_back(u);
  }
  return out;
}

}  // namespace sammy::testing
