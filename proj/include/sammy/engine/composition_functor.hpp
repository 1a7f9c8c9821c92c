#pragma once

#include "sammy/engine/functor_category.hpp"
#include "sammy/engine/product.hpp"
#include "sammy/validate.hpp"

namespace sammy {

struct CompositionFunctor {
  /// C^2 x_C C^2: pairs of arrows (f, g) with target(f) = source(g).
  Pullback pairs;
  /// The arrow category C^2 with the functors its objects stand for.
  FunctorCategory arrows;
  /// (f, g) |-> g . f, on squares by pasting.
  Functor composite;
};

inline CompositionFunctor compositionFunctor(const CategoryPtr& c) {
  const auto two = arrowCategory();
  CompositionFunctor out;
  out.arrows = functorCategory(two, c);
  const Functor atTarget = pow1(pointerFunctor(two, 1), identityFunctor(c));
  const Functor atSource = pow1(pointerFunctor(two, 0), identityFunctor(c));
  out.pairs = pullback(atTarget, atSource);
  const auto& P = *out.pairs.category;
  const auto& C = *c;
  const auto& fc = out.arrows;
  auto arrowOf = [&](int functorIndex) { return fc.functors[functorIndex].onMorphism(1); };
  Functor h{out.pairs.category, fc.category, std::vector<int>(P.objectCount()), std::vector<int>(P.morphismCount())};
  for (int o = 0; o < P.objectCount(); ++o) {
    const int f = arrowOf(out.pairs.projLeft(o)), g = arrowOf(out.pairs.projRight(o));
    h.objectMap[o] = fc.indexOf(arrowFunctor(c, C.compose(f, g)));
  }
  for (int m = 0; m < P.morphismCount(); ++m) {
    const auto& left = fc.transformations[out.pairs.projLeft.onMorphism(m)];
    const auto& right = fc.transformations[out.pairs.projRight.onMorphism(m)];
    const int s = h.objectMap[P.src(m)], t = h.objectMap[P.tgt(m)];
    const std::vector<int> components{left.components[0], right.components[1]};
    h.morphismMap[m] = -1;
    for (int x : fc.category->hom(s, t))
      if (fc.transformations[x].components == components) h.morphismMap[m] = x;
  }
  out.composite = std::move(h);
  requireValid(out.composite, "composition functor");
  return out;
}

}  // namespace sammy
