#pragma once

#include "sammy/builders.hpp"
#include "sammy/category.hpp"

namespace sammy {

inline CategoryPtr op0(const CategoryPtr& c) {
  std::vector<Morphism> ms;
  ms.reserve(c->morphismCount());
  for (const auto& m : c->morphisms()) ms.push_back({m.tgt, m.src});
  if (c->isThin()) return Category::thin(c->objectCount(), std::move(ms));
  const auto m = static_cast<std::size_t>(c->morphismCount());
  std::vector<int> table(m * m, -1);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) table[f * m + g] = c->rawTable(static_cast<int>(g), static_cast<int>(f));
  return Category::dense(c->objectCount(), std::move(ms), c->identities(), std::move(table));
}

inline Functor op1(const Functor& f) {
  return Functor{op0(f.source), op0(f.target), f.objectMap, f.morphismMap};
}

/// Opposite of a natural transformation F => G, running G^op => F^op.
inline NatTrans opNat(const NatTrans& t) { return NatTrans{op1(t.target), op1(t.source), t.components}; }

/// g after f. Requires target(f) to equal source(g).
inline Functor comp(const Functor& f, const Functor& g) {
  if (!sameCategory(f.target, g.source))
    throw Error(ErrorKind::SourceTargetMismatch, "Comp: target of the first functor is not the source of the second");
  Functor h{f.source, g.target, std::vector<int>(f.objectMap.size()), std::vector<int>(f.morphismMap.size())};
  for (std::size_t o = 0; o < f.objectMap.size(); ++o) h.objectMap[o] = g.objectMap[f.objectMap[o]];
  for (std::size_t m = 0; m < f.morphismMap.size(); ++m) h.morphismMap[m] = g.morphismMap[f.morphismMap[m]];
  return h;
}

/// b . a for a : F => G and b : G => H.
inline NatTrans vcomp(const NatTrans& a, const NatTrans& b) {
  if (!sameFunctor(a.target, b.source))
    throw Error(ErrorKind::SourceTargetMismatch, "Vcomp: target of the first transformation is not the source of the second");
  const auto& B = *a.source.target;
  NatTrans r{a.source, b.target, std::vector<int>(a.components.size())};
  for (std::size_t o = 0; o < a.components.size(); ++o) r.components[o] = B.compose(a.components[o], b.components[o]);
  return r;
}

/// Horizontal composite of a : F => G (A -> B) and b : H => K (B -> C),
/// running H F => K G with component K(a_x) . b_{F x}.
inline NatTrans hcomp(const NatTrans& a, const NatTrans& b) {
  if (!sameCategory(a.source.target, b.source.source))
    throw Error(ErrorKind::SourceTargetMismatch, "Hcomp: transformations do not chain");
  const auto& C = *b.source.target;
  NatTrans r{comp(a.source, b.source), comp(a.target, b.target), std::vector<int>(a.components.size())};
  for (std::size_t x = 0; x < a.components.size(); ++x)
    r.components[x] = C.compose(b.components[a.source(static_cast<int>(x))], b.target.onMorphism(a.components[x]));
  return r;
}

/// alpha H : F H => G H for alpha : F => G and H into the source of F.
inline NatTrans whiskerLeft(const NatTrans& alpha, const Functor& h) {
  NatTrans r{comp(h, alpha.source), comp(h, alpha.target), std::vector<int>(h.objectMap.size())};
  for (std::size_t a = 0; a < h.objectMap.size(); ++a) r.components[a] = alpha.components[h.objectMap[a]];
  return r;
}

/// K alpha : K F => K G.
inline NatTrans whiskerRight(const Functor& k, const NatTrans& alpha) {
  NatTrans r{comp(alpha.source, k), comp(alpha.target, k), std::vector<int>(alpha.components.size())};
  for (std::size_t a = 0; a < alpha.components.size(); ++a) r.components[a] = k.morphismMap[alpha.components[a]];
  return r;
}

}  // namespace sammy
