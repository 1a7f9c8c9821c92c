#pragma once

// Enumeration of functors and natural transformations, and the functor
// category built from them.

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "sammy/builders.hpp"
#include "sammy/engine/basic.hpp"

namespace sammy {

namespace detail {

/// Composable triples (f, g, g.f) of a category grouped by the largest
/// morphism id involved, so a backtracking assignment in id order can check
/// each triple as soon as it is complete.
inline std::vector<std::vector<std::array<int, 3>>> triplesByLast(const Category& a) {
  std::vector<std::vector<std::array<int, 3>>> out(a.morphismCount());
  for (int f = 0; f < a.morphismCount(); ++f)
    for (int o = 0; o < a.objectCount(); ++o)
      for (int g : a.hom(a.tgt(f), o)) {
        const int h = a.compose(f, g);
        out[std::max({f, g, h})].push_back({f, g, h});
      }
  return out;
}

}  // namespace detail

/// Visits every functor a -> b in lexicographic order of (object map,
/// morphism map). The visitor returns true to stop.
inline void forEachFunctor(const CategoryPtr& a, const CategoryPtr& b, const std::function<bool(const Functor&)>& visit) {
  const Category& A = *a;
  const Category& B = *b;
  const int n = A.objectCount();
  const int m = A.morphismCount();
  if (n > 0 && B.objectCount() == 0) return;
  Functor f{a, b, std::vector<int>(n, -1), std::vector<int>(m, -1)};
  // Morphisms grouped by the larger endpoint for pruning object assignments.
  std::vector<std::vector<int>> byObject(n);
  for (int x = 0; x < m; ++x) byObject[std::max(A.src(x), A.tgt(x))].push_back(x);
  std::vector<std::vector<std::array<int, 3>>> triples;
  if (!B.isThin()) triples = detail::triplesByLast(A);

  std::function<bool(int)> morphisms = [&](int x) -> bool {
    if (x == m) return visit(f);
    const int s = f.objectMap[A.src(x)], t = f.objectMap[A.tgt(x)];
    auto check = [&]() {
      for (const auto& tr : triples[x])
        if (f.morphismMap[tr[2]] != B.compose(f.morphismMap[tr[0]], f.morphismMap[tr[1]])) return false;
      return true;
    };
    if (A.isIdentity(x)) {
      f.morphismMap[x] = B.identity(s);
      if (check() && morphisms(x + 1)) return true;
      return false;
    }
    for (int c : B.hom(s, t)) {
      f.morphismMap[x] = c;
      if (check() && morphisms(x + 1)) return true;
    }
    f.morphismMap[x] = -1;
    return false;
  };

  std::function<bool(int)> objects = [&](int o) -> bool {
    if (o == n) {
      if (B.isThin()) {
        for (int x = 0; x < m; ++x) f.morphismMap[x] = B.between(f.objectMap[A.src(x)], f.objectMap[A.tgt(x)]);
        return visit(f);
      }
      return morphisms(0);
    }
    for (int c = 0; c < B.objectCount(); ++c) {
      f.objectMap[o] = c;
      bool ok = true;
      for (int x : byObject[o])
        if (B.hom(f.objectMap[A.src(x)], f.objectMap[A.tgt(x)]).empty()) {
          ok = false;
          break;
        }
      if (ok && objects(o + 1)) return true;
    }
    f.objectMap[o] = -1;
    return false;
  };
  objects(0);
}

inline std::vector<Functor> allFunctors(const CategoryPtr& a, const CategoryPtr& b, std::size_t cap = SIZE_MAX) {
  std::vector<Functor> out;
  forEachFunctor(a, b, [&](const Functor& f) {
    out.push_back(f);
    if (out.size() > cap) throw Error(ErrorKind::SizeLimit, "functor enumeration");
    return false;
  });
  return out;
}

/// Visits every natural transformation f => g in lexicographic order of
/// components.
inline void forEachNat(const Functor& f, const Functor& g, const std::function<bool(const NatTrans&)>& visit) {
  const Category& A = *f.source;
  const Category& B = *f.target;
  const int n = A.objectCount();
  NatTrans t{f, g, std::vector<int>(n, -1)};
  std::vector<std::vector<int>> byObject(n);
  for (int x = 0; x < A.morphismCount(); ++x) byObject[std::max(A.src(x), A.tgt(x))].push_back(x);
  std::function<bool(int)> go = [&](int o) -> bool {
    if (o == n) return visit(t);
    for (int c : B.hom(f(o), g(o))) {
      t.components[o] = c;
      bool ok = true;
      if (!B.isThin())
        for (int x : byObject[o]) {
          const int s = A.src(x), e = A.tgt(x);
          if (B.compose(t.components[s], g.onMorphism(x)) != B.compose(f.onMorphism(x), t.components[e])) {
            ok = false;
            break;
          }
        }
      if (ok && go(o + 1)) return true;
    }
    t.components[o] = -1;
    return false;
  };
  go(0);
}

inline std::vector<NatTrans> allNats(const Functor& f, const Functor& g) {
  std::vector<NatTrans> out;
  forEachNat(f, g, [&](const NatTrans& t) {
    out.push_back(t);
    return false;
  });
  return out;
}

/// The functor category b^a together with the functors and transformations
/// its objects and morphisms stand for.
struct FunctorCategory {
  CategoryPtr category;
  std::vector<Functor> functors;
  std::vector<NatTrans> transformations;
  std::map<std::vector<int>, int> functorIndex;

  int indexOf(const Functor& f) const {
    std::vector<int> key = f.objectMap;
    key.insert(key.end(), f.morphismMap.begin(), f.morphismMap.end());
    auto it = functorIndex.find(key);
    return it == functorIndex.end() ? -1 : it->second;
  }
  int indexOf(const NatTrans& t) const {
    const int s = indexOf(t.source), e = indexOf(t.target);
    if (s < 0 || e < 0) return -1;
    for (int m : category->hom(s, e))
      if (transformations[m].components == t.components) return m;
    return -1;
  }
};

inline FunctorCategory functorCategory(const CategoryPtr& a, const CategoryPtr& b) {
  const auto& lim = limits();
  FunctorCategory fc;
  fc.functors = allFunctors(a, b, lim.maxObjects);
  const int n = static_cast<int>(fc.functors.size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> key = fc.functors[i].objectMap;
    key.insert(key.end(), fc.functors[i].morphismMap.begin(), fc.functors[i].morphismMap.end());
    fc.functorIndex.emplace(std::move(key), i);
  }
  std::vector<Morphism> ms;
  std::vector<int> identities(n, -1);
  std::map<std::vector<int>, int> natIndex;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      forEachNat(fc.functors[i], fc.functors[j], [&](const NatTrans& t) {
        std::vector<int> key{i, j};
        key.insert(key.end(), t.components.begin(), t.components.end());
        const int id = static_cast<int>(ms.size());
        natIndex.emplace(std::move(key), id);
        if (i == j && isIdentityNat(t)) identities[i] = id;
        ms.push_back({i, j});
        fc.transformations.push_back(t);
        if (ms.size() > lim.maxMorphisms) throw Error(ErrorKind::SizeLimit, "functor category morphisms");
        return false;
      });
  const auto& B = *b;
  fc.category = Category::make(n, std::move(ms), std::move(identities), [&](int x, int y) {
    const auto& s = fc.transformations[x];
    const auto& t = fc.transformations[y];
    std::vector<int> key{fc.indexOf(s.source), fc.indexOf(t.target)};
    for (std::size_t o = 0; o < s.components.size(); ++o) key.push_back(B.compose(s.components[o], t.components[o]));
    return natIndex.at(key);
  });
  return fc;
}

/// Evaluation at an object of the exponent: B^A -> B.
inline Functor evaluationFunctor(const FunctorCategory& fc, const CategoryPtr& target, int object) {
  Functor e{fc.category, target, std::vector<int>(fc.functors.size()), std::vector<int>(fc.transformations.size())};
  for (std::size_t i = 0; i < fc.functors.size(); ++i) e.objectMap[i] = fc.functors[i].objectMap[object];
  for (std::size_t m = 0; m < fc.transformations.size(); ++m) e.morphismMap[m] = fc.transformations[m].components[object];
  return e;
}

inline CategoryPtr pow0(const CategoryPtr& a, const CategoryPtr& b) { return functorCategory(a, b).category; }

/// For f : A -> B and g : C -> D, the functor C^B -> D^A sending h to
/// g . h . f and transformations by whiskering.
inline Functor pow1(const Functor& f, const Functor& g) {
  const auto from = functorCategory(f.target, g.source);
  const auto to = functorCategory(f.source, g.target);
  Functor r{from.category, to.category, std::vector<int>(from.functors.size()),
            std::vector<int>(from.transformations.size())};
  for (std::size_t i = 0; i < from.functors.size(); ++i)
    r.objectMap[i] = to.indexOf(comp(comp(f, from.functors[i]), g));
  for (std::size_t m = 0; m < from.transformations.size(); ++m)
    r.morphismMap[m] = to.indexOf(whiskerRight(g, whiskerLeft(from.transformations[m], f)));
  return r;
}

}  // namespace sammy
