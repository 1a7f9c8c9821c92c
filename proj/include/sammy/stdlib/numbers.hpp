#pragma once

// Truncated natural-number categories, successor, pointers, predecessor,
// and the colimit-style routes that rebuild them from small pieces.

#include <string>

#include "sammy/builders.hpp"
#include "sammy/engine/comma.hpp"
#include "sammy/engine/kan.hpp"
#include "sammy/engine/presentation.hpp"
#include "sammy/engine/product.hpp"

namespace sammy::stdlib {

enum class NumberKind { Chain, Discrete, Groupoid, ChainWithTop };

inline std::string numberKindName(NumberKind k) {
  switch (k) {
    case NumberKind::Chain: return "omega";
    case NumberKind::Discrete: return "omega_d";
    case NumberKind::Groupoid: return "omega_i";
    case NumberKind::ChainWithTop: return "omega_bar";
  }
  return "omega";
}

inline NumberKind numberKindByName(const std::string& s) {
  if (s == "omega" || s == "chain") return NumberKind::Chain;
  if (s == "omega_d" || s == "discrete") return NumberKind::Discrete;
  if (s == "omega_i" || s == "groupoid") return NumberKind::Groupoid;
  if (s == "omega_bar" || s == "chain-with-top") return NumberKind::ChainWithTop;
  throw Error(ErrorKind::Format, "unknown number category '" + s + "'");
}

/// Numbers 0..bound; the chain-with-top variant has one more object, the
/// top, at index bound + 1.
struct NumberCategory {
  NumberKind kind = NumberKind::Chain;
  int bound = 0;
  CategoryPtr category;

  int top() const { return kind == NumberKind::ChainWithTop ? bound + 1 : bound; }
};

inline NumberCategory buildNumberCategory(NumberKind kind, int bound) {
  if (bound < 0) throw Error(ErrorKind::SizeLimit, "negative bound");
  NumberCategory nc{kind, bound, nullptr};
  switch (kind) {
    case NumberKind::Chain: nc.category = chainCategory(bound); break;
    case NumberKind::Discrete: nc.category = discreteCategory(bound + 1); break;
    case NumberKind::Groupoid: nc.category = codiscreteCategory(bound + 1); break;
    case NumberKind::ChainWithTop: nc.category = chainCategory(bound + 1); break;
  }
  return nc;
}

/// k |-> k + 1, clamped so the bound (and the top, if any) are fixed.
inline Functor successor(const NumberCategory& nc) {
  std::vector<int> objs(nc.category->objectCount());
  for (int k = 0; k < static_cast<int>(objs.size()); ++k) objs[k] = k >= nc.bound ? k : k + 1;
  if (nc.kind == NumberKind::Discrete) {
    // Discrete categories are not thin-ordered; every morphism is an identity.
    Functor f{nc.category, nc.category, objs, std::vector<int>(nc.category->morphismCount())};
    for (int m = 0; m < nc.category->morphismCount(); ++m) f.morphismMap[m] = nc.category->identity(objs[nc.category->src(m)]);
    return f;
  }
  return functorFromObjectMap(nc.category, nc.category, objs);
}

inline Functor pointer(int n, const NumberCategory& nc) {
  if (n < 0 || n >= nc.category->objectCount())
    throw Error(ErrorKind::SizeLimit, "pointer " + std::to_string(n) + " is beyond the truncation");
  return pointerFunctor(nc.category, n);
}

/// The pointer one step down, as the left Kan lifting of p along the
/// successor. P_0 lifts to P_0 because of clamping at the bottom.
inline Functor predecessor(const Functor& p, const NumberCategory& nc) {
  return kanLiftLeft(successor(nc), p).functor;
}

/// Object index of a pointer functor.
inline int pointedObject(const Functor& p) { return p(0); }

// ---------------------------------------------------------------------------
// Construction routes through presentations, comma categories and
// coequalizers. Each returns a category the tests compare with the direct
// builders above.

/// omega as the coslice under the one object of the monoid <a | a^(N+1) =
/// a^(N+2)>, keeping the objects below the absorbing element.
inline CategoryPtr omegaViaCoslice(int bound) {
  PresentedCategory monoid;
  monoid.objects = 1;
  monoid.generators = {{0, 0}};
  monoid.relations = {{Path{0, std::vector<int>(bound + 1, 0)}, Path{0, std::vector<int>(bound + 2, 0)}}};
  const auto tab = saturate(monoid, bound + 4);
  const auto& M = tab.category;
  const auto coslice = comma(pointerFunctor(M, 0), identityFunctor(M));
  const int a = tab.generatorImage[0];
  std::vector<int> keep;
  for (int o = 0; o < coslice.category->objectCount(); ++o) {
    const int f = coslice.objects[o].arrow;
    if (M->compose(f, a) != f) keep.push_back(o);
  }
  return subcategory(coslice.category, keep).category;
}

/// omega_d as the core of omega: keep exactly the morphisms that occur as
/// objects of the iso-comma category (Id | Id).
inline CategoryPtr omegaDiscreteViaIsoComma(int bound) {
  const auto w = chainCategory(bound);
  const auto iso = isoComma(identityFunctor(w), identityFunctor(w));
  std::vector<char> invertible(w->morphismCount(), 0);
  for (const auto& o : iso.objects) invertible[o.arrow] = 1;
  std::vector<int> all(w->objectCount());
  std::iota(all.begin(), all.end(), 0);
  return subcategory(w, all, [&](int m) { return invertible[m] != 0; }).category;
}

/// omega_i from the integer groupoid truncated to -N..N (objects 0..N are the
/// non-negatives, N+1..2N stand for -1..-N) by the coequalizer of the
/// inclusion k |-> -k of the chain and the constant functor at 0.
inline CategoryPtr omegaGroupoidViaCoequalizer(int bound) {
  const auto z = codiscreteCategory(2 * bound + 1);
  const auto w = chainCategory(bound);
  std::vector<int> negate(bound + 1, 0);
  for (int k = 1; k <= bound; ++k) negate[k] = bound + k;
  const auto p = coequalizerPresented(functorFromObjectMap(w, z, negate), constantFunctor(w, z, 0));
  return saturate(p).category;
}

}  // namespace sammy::stdlib
