#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "sammy/engine/basic.hpp"

namespace sammy {

struct CommaObject {
  int left;   // a in A
  int right;  // b in B
  int arrow;  // f : L(a) -> R(b) in C
};

struct CommaMorphism {
  int left;   // u : a -> a'
  int right;  // v : b -> b'
};

/// (L | R): objects are arrows L(a) -> R(b), morphisms commuting squares
/// R(v) . f == f' . L(u). Objects are ordered by (a, b, f).
struct CommaCategory {
  CategoryPtr category;
  Functor projLeft;
  Functor projRight;
  std::vector<CommaObject> objects;
  std::vector<CommaMorphism> morphisms;

  int findObject(int a, int b, int f) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i].left == a && objects[i].right == b && objects[i].arrow == f) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

inline CommaCategory buildComma(const Functor& l, const Functor& r, bool isoOnly) {
  if (!sameCategory(l.target, r.target))
    throw Error(ErrorKind::SourceTargetMismatch, "comma: functors have different targets");
  const auto& A = *l.source;
  const auto& B = *r.source;
  const auto& C = *l.target;
  CommaCategory cc;
  std::map<std::tuple<int, int, int>, int> objIdx;
  for (int a = 0; a < A.objectCount(); ++a)
    for (int b = 0; b < B.objectCount(); ++b)
      for (int f : C.hom(l(a), r(b))) {
        if (isoOnly && !C.isIsomorphism(f)) continue;
        objIdx[{a, b, f}] = static_cast<int>(cc.objects.size());
        cc.objects.push_back({a, b, f});
        if (cc.objects.size() > limits().maxObjects) throw Error(ErrorKind::SizeLimit, "comma category objects");
      }
  std::vector<Morphism> ms;
  // (source object, target object, u, v): in a monoid one (u, v) can square
  // off against several target arrows.
  std::map<std::tuple<int, int, int, int>, int> morIdx;
  for (int x = 0; x < static_cast<int>(cc.objects.size()); ++x)
    for (int y = 0; y < static_cast<int>(cc.objects.size()); ++y) {
      const auto& o1 = cc.objects[x];
      const auto& o2 = cc.objects[y];
      for (int u : A.hom(o1.left, o2.left))
        for (int v : B.hom(o1.right, o2.right))
          if (C.compose(o1.arrow, r.onMorphism(v)) == C.compose(l.onMorphism(u), o2.arrow)) {
            morIdx[{x, y, u, v}] = static_cast<int>(ms.size());
            ms.push_back({x, y});
            cc.morphisms.push_back({u, v});
            if (ms.size() > limits().maxMorphisms) throw Error(ErrorKind::SizeLimit, "comma category morphisms");
          }
    }
  std::vector<int> ids;
  for (int x = 0; x < static_cast<int>(cc.objects.size()); ++x)
    ids.push_back(morIdx.at({x, x, A.identity(cc.objects[x].left), B.identity(cc.objects[x].right)}));
  cc.category = Category::make(static_cast<int>(cc.objects.size()), ms, ids, [&](int f, int g) {
    return morIdx.at({ms[f].src, ms[g].tgt, A.compose(cc.morphisms[f].left, cc.morphisms[g].left),
                      B.compose(cc.morphisms[f].right, cc.morphisms[g].right)});
  });
  cc.projLeft = Functor{cc.category, l.source, {}, {}};
  cc.projRight = Functor{cc.category, r.source, {}, {}};
  for (const auto& o : cc.objects) {
    cc.projLeft.objectMap.push_back(o.left);
    cc.projRight.objectMap.push_back(o.right);
  }
  for (const auto& m : cc.morphisms) {
    cc.projLeft.morphismMap.push_back(m.left);
    cc.projRight.morphismMap.push_back(m.right);
  }
  return cc;
}

}  // namespace detail

inline CommaCategory comma(const Functor& l, const Functor& r) { return detail::buildComma(l, r, false); }

/// Iso-comma: only invertible arrows L(a) -> R(b) are objects.
inline CommaCategory isoComma(const Functor& l, const Functor& r) { return detail::buildComma(l, r, true); }

}  // namespace sammy
