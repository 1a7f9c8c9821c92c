#pragma once

// Structural predicates (discrete, connected), the monotone factoring test,
// the bounded existential quantifier and negation, and lollipops.

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "sammy/engine/functor_category.hpp"
#include "sammy/engine/kan.hpp"
#include "sammy/engine/limits.hpp"
#include "sammy/engine/product.hpp"
#include "sammy/stdlib/functions.hpp"

namespace sammy::stdlib {

/// A functor is an isomorphism of categories when it is bijective on
/// objects and on morphisms.
inline bool isIsomorphismFunctor(const Functor& f) {
  if (f.source->objectCount() != f.target->objectCount() || f.source->morphismCount() != f.target->morphismCount())
    return false;
  std::vector<char> hitO(f.target->objectCount()), hitM(f.target->morphismCount());
  for (int o : f.objectMap)
    if (hitO[o]++) return false;
  for (int m : f.morphismMap)
    if (hitM[m]++) return false;
  return true;
}

/// C is discrete iff precomposition with s : 1 -> 2 is an isomorphism
/// C^2 -> C^1.
inline bool isDiscrete(const CategoryPtr& c) {
  return isIsomorphismFunctor(pow1(pointerFunctor(arrowCategory(), 0), identityFunctor(c)));
}

/// C is connected iff there are exactly two functors C -> 1 + 1.
inline bool isConnected(const CategoryPtr& c) {
  int count = 0;
  forEachFunctor(c, discreteCategory(2), [&](const Functor&) { return ++count > 2; });
  return count == 2;
}

/// Graph criteria used to cross-check the two predicates above.
inline bool isDiscreteByGraph(const Category& c) {
  for (int m = 0; m < c.morphismCount(); ++m)
    if (!c.isIdentity(m)) return false;
  return true;
}

inline bool isConnectedByGraph(const Category& c) {
  if (c.objectCount() == 0) return false;
  std::vector<int> parent(c.objectCount());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& m : c.morphisms()) parent[find(m.src)] = find(m.tgt);
  for (int o = 0; o < c.objectCount(); ++o)
    if (find(o) != find(0)) return false;
  return true;
}

/// The inclusion 2 -> 2~ (identity on objects).
inline Functor arrowIntoIso() { return functorFromObjectMap(arrowCategory(), isoCategory(), {0, 1}); }

/// NOT : 2~ -> 2~ swapping the objects.
inline Functor notFunctor() {
  const auto iso = isoCategory();
  return functorFromObjectMap(iso, iso, {1, 0});
}

/// The functor g : A -> 2 with inc . g == f exactly, i.e. the lifting whose
/// transformation is the identity. inc is injective on objects and both
/// categories are thin, so g is forced by its object map and exists iff f
/// never sends a morphism from 1 back to 0.
inline std::optional<Functor> strictLiftThroughArrow(const Functor& f) {
  const auto& A = *f.source;
  for (const auto& m : A.morphisms())
    if (f(m.src) > f(m.tgt)) return std::nullopt;
  return functorFromObjectMap(f.source, arrowCategory(), f.objectMap);
}

struct HaltShape {
  bool factors = false;
  int value = 0;
};

/// Factors a 0/1 sequence omega_N -> 2~ strictly through 2 -> 2~. When it
/// factors the value is the colimit of the lifted chain.
inline HaltShape monotoneFactorHalt(const Functor& f) {
  auto lifted = strictLiftThroughArrow(f);
  if (!lifted) return {false, 0};
  return {true, colimit(*lifted).apex};
}

/// Exists y <= N. psi(x, y) = 1, for psi : omega_i^n x omega_i -> 2~.
///
/// 1. restrict psi to omega_d^n x omega_d;
/// 2. change the target to 2 by a strict lifting;
/// 3. left Kan extend along the projection to omega_d^n (a join over y);
/// 4. include back into 2~ and extend over omega_i^n by the object map.
inline Functor existsQuantifier(const Functor& psi, int arity, int bound) {
  const auto iso = isoCategory();
  if (!sameCategory(psi.target, iso)) throw Error(ErrorKind::SourceTargetMismatch, "quantifier: predicate must land in 2~");
  const auto discrete = discreteCategory(bound + 1);
  const Product full = productCat(std::vector<CategoryPtr>(arity + 1, discrete));
  const Functor restricted = functorFromObjectMap(full.category, iso, psi.objectMap);
  const auto lifted = strictLiftThroughArrow(restricted);
  if (!lifted) throw Error(ErrorKind::NoKanLifting, "predicate does not factor through 2");
  const Product xs = productCat(std::vector<CategoryPtr>(arity, discrete));
  Functor projection{full.category, xs.category, std::vector<int>(full.category->objectCount()),
                     std::vector<int>(full.category->morphismCount())};
  for (int o = 0; o < full.category->objectCount(); ++o) {
    auto parts = full.objectParts(o);
    parts.pop_back();
    projection.objectMap[o] = xs.object(parts);
    projection.morphismMap[full.category->identity(o)] = xs.category->identity(projection.objectMap[o]);
  }
  const KanResult ext = kanExtLeft(projection, *lifted);
  const Functor back = comp(ext.functor, arrowIntoIso());
  const Product domain = numberPower(NumberKind::Groupoid, bound, arity);
  return functorFromObjectMap(domain.category, iso, back.objectMap);
}

inline Functor negate(const Functor& psi) { return comp(psi, notFunctor()); }

inline Functor forAllQuantifier(const Functor& psi, int arity, int bound) {
  return negate(existsQuantifier(negate(psi), arity, bound));
}

/// Predicate functor omega_i^k -> 2~ from a boolean function.
inline Functor predicateFunctor(int arity, int bound, const std::function<bool(const std::vector<int>&)>& p) {
  const Product d = numberPower(NumberKind::Groupoid, bound, arity);
  std::vector<int> objs(d.category->objectCount());
  for (int o = 0; o < static_cast<int>(objs.size()); ++o) objs[o] = p(d.objectParts(o)) ? 1 : 0;
  return functorFromObjectMap(d.category, isoCategory(), objs);
}

// ---------------------------------------------------------------------------
// Lollipops

struct Lollipop {
  CategoryPtr category;
  /// omega_N -> L(m, n): k |-> k below n, then around the cycle.
  Functor projection;
};

/// Thin category on 0..n-1: a tail 0 -> ... -> m followed by a cycle
/// m -> ... -> n-1 -> m, so the cycle objects are mutually isomorphic.
inline Lollipop lollipop(int m, int n, int bound) {
  if (m < 0 || m >= n) throw Error(ErrorKind::Format, "lollipop needs 0 <= m < n");
  Lollipop l;
  l.category = thinCategory(n, [m](int i, int j) { return i <= j || (i >= m && j >= m); });
  std::vector<int> objs(bound + 1);
  for (int k = 0; k <= bound; ++k) objs[k] = k < n ? k : m + (k - m) % (n - m);
  l.projection = functorFromObjectMap(chainCategory(bound), l.category, objs);
  return l;
}

/// Whether r : omega_N -> 2~ factors through the lollipop projection.
inline bool rationalFactorTest(const Functor& r, int m, int n) {
  const int bound = r.source->objectCount() - 1;
  const Lollipop l = lollipop(m, n, bound);
  bool found = false;
  forEachFunctor(l.category, isoCategory(), [&](const Functor& h) {
    return found = comp(l.projection, h).objectMap == r.objectMap;
  });
  return found;
}

/// Oracle: r is eventually periodic with preperiod <= m and period dividing
/// n - m, on the available data.
inline bool eventuallyPeriodic(const std::vector<int>& r, int m, int n) {
  for (int k = m; k < static_cast<int>(r.size()); ++k)
    if (k + (n - m) < static_cast<int>(r.size()) && r[k] != r[k + (n - m)]) return false;
  return true;
}

}  // namespace sammy::stdlib
