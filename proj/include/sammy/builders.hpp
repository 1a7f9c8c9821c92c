#pragma once

// Small named categories and the functors between them that everything else
// is assembled from.

#include <functional>
#include <vector>

#include "sammy/category.hpp"
#include "sammy/validate.hpp"

namespace sammy {

/// Thin category on n objects from a preorder; morphisms are listed in
/// lexicographic (source, target) order.
inline CategoryPtr thinCategory(int n, const std::function<bool(int, int)>& leq) {
  std::vector<Morphism> ms;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a == b || leq(a, b)) ms.push_back({a, b});
  return Category::thin(n, std::move(ms));
}

inline CategoryPtr emptyCategory() { return Category::thin(0, {}); }
inline CategoryPtr terminalCategory() { return Category::thin(1, {{0, 0}}); }
/// 0 -> 1. Morphism ids: id0 = 0, the arrow = 1, id1 = 2.
inline CategoryPtr arrowCategory() { return thinCategory(2, [](int a, int b) { return a <= b; }); }
/// Two objects with a unique isomorphism between them.
inline CategoryPtr isoCategory() { return thinCategory(2, [](int, int) { return true; }); }

/// Total order 0 -> 1 -> ... -> N.
inline CategoryPtr chainCategory(int N) { return thinCategory(N + 1, [](int a, int b) { return a <= b; }); }
inline CategoryPtr discreteCategory(int n) { return thinCategory(n, [](int, int) { return false; }); }
/// Codiscrete: exactly one morphism between any two objects.
inline CategoryPtr codiscreteCategory(int n) { return thinCategory(n, [](int, int) { return true; }); }

/// The tape alphabet categories: objects 0, 1, blank(2). The dotted one has
/// 0 <-> 1 and both pointing to blank; the hatted one is codiscrete.
inline CategoryPtr threeDot() {
  return thinCategory(3, [](int a, int b) { return b == 2 || (a < 2 && b < 2); });
}
inline CategoryPtr threeHat() { return codiscreteCategory(3); }

inline Functor identityFunctor(const CategoryPtr& c) {
  Functor f{c, c, {}, {}};
  f.objectMap.resize(c->objectCount());
  std::iota(f.objectMap.begin(), f.objectMap.end(), 0);
  f.morphismMap.resize(c->morphismCount());
  std::iota(f.morphismMap.begin(), f.morphismMap.end(), 0);
  return f;
}

/// Constant functor at an object.
inline Functor constantFunctor(const CategoryPtr& a, const CategoryPtr& b, int object) {
  return Functor{a, b, std::vector<int>(a->objectCount(), object),
                 std::vector<int>(a->morphismCount(), b->identity(object))};
}

/// P_n : 1 -> c picking out one object.
inline Functor pointerFunctor(const CategoryPtr& c, int object) {
  return constantFunctor(terminalCategory(), c, object);
}

/// The functor 2 -> c picking out morphism m.
inline Functor arrowFunctor(const CategoryPtr& c, int m) {
  const int s = c->src(m), t = c->tgt(m);
  return Functor{arrowCategory(), c, {s, t}, {c->identity(s), m, c->identity(t)}};
}

/// The unique functor c -> 1.
inline Functor toTerminal(const CategoryPtr& c) { return constantFunctor(c, terminalCategory(), 0); }

/// The unique functor 0 -> c.
inline Functor fromEmpty(const CategoryPtr& c) { return Functor{emptyCategory(), c, {}, {}}; }

/// Functor into a thin category given only its object map; each morphism
/// goes to the unique morphism between the images. Throws when an image
/// hom-set is empty.
inline Functor functorFromObjectMap(const CategoryPtr& a, const CategoryPtr& b, std::vector<int> objectMap) {
  if (!b->isThin()) throw Error(ErrorKind::KindError, "object-map functors need a thin target");
  Functor f{a, b, std::move(objectMap), std::vector<int>(a->morphismCount())};
  for (int m = 0; m < a->morphismCount(); ++m) {
    const int img = b->between(f.objectMap[a->src(m)], f.objectMap[a->tgt(m)]);
    if (img < 0) throw Error(ErrorKind::ValidationFailed, "object map is not monotone for the target order");
    f.morphismMap[m] = img;
  }
  return f;
}

inline NatTrans identityNat(const Functor& f) {
  NatTrans t{f, f, std::vector<int>(f.source->objectCount())};
  for (int o = 0; o < f.source->objectCount(); ++o) t.components[o] = f.target->identity(f(o));
  return t;
}

inline bool isIdentityNat(const NatTrans& t) {
  for (int o = 0; o < static_cast<int>(t.components.size()); ++o)
    if (!t.source.target->isIdentity(t.components[o])) return false;
  return true;
}

}  // namespace sammy
