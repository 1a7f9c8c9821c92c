#pragma once

// Number-theoretic functions as functors between powers of omega_i:
// initial functions, the constructibility square, bounded primitive
// recursion and bounded minimization.

#include <functional>
#include <map>
#include <vector>

#include "sammy/engine/kan.hpp"
#include "sammy/iso.hpp"
#include "sammy/engine/presentation.hpp"
#include "sammy/engine/product.hpp"
#include "sammy/stdlib/numbers.hpp"

namespace sammy::stdlib {

using FunctionTable = std::map<std::vector<int>, int>;

/// omega_i^k truncated at `bound`, with its projections.
inline Product numberPower(NumberKind kind, int bound, int k) {
  const auto base = buildNumberCategory(kind, bound).category;
  return productCat(std::vector<CategoryPtr>(k, base));
}

/// Functor omega_i^k -> omega_i from an arbitrary function, clamped into
/// the truncation.
inline Functor functionFunctor(int arity, int bound, const std::function<int(const std::vector<int>&)>& f) {
  const Product p = numberPower(NumberKind::Groupoid, bound, arity);
  const auto target = codiscreteCategory(bound + 1);
  std::vector<int> objs(p.category->objectCount());
  for (int o = 0; o < static_cast<int>(objs.size()); ++o) objs[o] = std::clamp(f(p.objectParts(o)), 0, bound);
  return functorFromObjectMap(p.category, target, objs);
}

/// The zero function: P_0 after the unique functor to 1.
inline Functor zeroFunction(int arity, int bound) {
  const Product p = numberPower(NumberKind::Groupoid, bound, arity);
  return comp(toTerminal(p.category), pointerFunctor(codiscreteCategory(bound + 1), 0));
}

inline Functor projectionFunction(int arity, int index, int bound) {
  return numberPower(NumberKind::Groupoid, bound, arity).projections.at(index);
}

inline Functor successorFunction(int bound) { return successor(buildNumberCategory(NumberKind::Groupoid, bound)); }

/// F . (P_x1 x ... x P_xk) == P_f(x) for every row of the table.
inline bool constructibleFunctionCheck(const Functor& f, int arity, const FunctionTable& table) {
  const int base = f.target->objectCount();
  for (const auto& [args, value] : table) {
    if (static_cast<int>(args.size()) != arity) return false;
    int idx = 0;
    for (int x : args) {
      if (x < 0 || x >= base) return false;
      idx = idx * base + x;
    }
    if (value < 0 || value >= base) return false;
    const Functor tuple = pointerFunctor(f.source, idx);
    if (!sameFunctor(comp(tuple, f), pointerFunctor(f.target, value))) return false;
  }
  return true;
}

/// All tuples over 0..bound of the given arity, first coordinate most
/// significant.
inline std::vector<std::vector<int>> allTuples(int arity, int bound) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < arity; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out)
      for (int x = 0; x <= bound; ++x) {
        auto u = t;
        u.push_back(x);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

/// f at a tuple of numbers 0..base-1.
inline int evaluate(const Functor& f, const std::vector<int>& args, int base) {
  int idx = 0;
  for (int x : args) idx = idx * base + x;
  return f(idx);
}

/// H(x, 0) = F(x), H(x, n+1) = G(x, H(x, n), n+1), for n < bound.
///
/// The recursion variable lives on a groupoid chain grown one object at a
/// time: each round glues a fresh 2~ onto the last object by a pushout and
/// saturates it, then defines H on the new object through G. The finished
/// chain is identified with omega_i by the recorded object order.
inline Functor primitiveRecursion(const Functor& f, const Functor& g, int arity, int bound) {
  const auto groupoid = codiscreteCategory(bound + 1);
  if (!sameCategory(f.target, groupoid) || !sameCategory(g.target, groupoid))
    throw Error(ErrorKind::SourceTargetMismatch, "recursion: functors must land in omega_i at the same bound");
  const auto xs = allTuples(arity, bound);
  std::vector<std::vector<int>> values(xs.size());  // values[x][n]
  for (std::size_t i = 0; i < xs.size(); ++i) values[i].push_back(evaluate(f, xs[i], bound + 1));

  CategoryPtr chain = terminalCategory();
  std::vector<int> position{0};  // chain object holding recursion stage n
  const auto iso = isoCategory();
  for (int n = 0; n < bound; ++n) {
    const auto glued = saturate(pushoutPresented(pointerFunctor(chain, position.back()), pointerFunctor(iso, 0)));
    // Objects of chain come first in the coproduct, then the two of 2~.
    for (auto& p : position) p = glued.quotient->objectMap[p];
    position.push_back(glued.quotient->objectMap[chain->objectCount() + 1]);
    chain = glued.category;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto args = xs[i];
      args.push_back(values[i][n]);
      args.push_back(n + 1);
      values[i].push_back(evaluate(g, args, bound + 1));
    }
  }
  if (chain->objectCount() != bound + 1 || !categoriesIsomorphic(chain, groupoid))
    throw Error(ErrorKind::ValidationFailed, "recursion chain is not omega_i");

  const Product domain = numberPower(NumberKind::Groupoid, bound, arity + 1);
  std::vector<int> objs(domain.category->objectCount());
  for (int o = 0; o < static_cast<int>(objs.size()); ++o) {
    auto parts = domain.objectParts(o);
    const int n = parts.back();
    parts.pop_back();
    int x = 0;
    for (int v : parts) x = x * (bound + 1) + v;
    objs[o] = values[x][n];
  }
  return functorFromObjectMap(domain.category, groupoid, objs);
}

/// G(x) = least y with F(x, y) = 0 (object 0 of 2~).
///
/// The zeros of F form a full subcategory of omega_d^k x omega (a pullback
/// along the point 0 of 2~); the left Kan lifting of x |-> (x, 0) along its
/// inclusion picks the least zero above each x.
inline Functor muMinimization(const Functor& f, int arity, int bound) {
  const auto iso = isoCategory();
  if (!sameCategory(f.target, iso)) throw Error(ErrorKind::SourceTargetMismatch, "minimization: predicate must land in 2~");
  for (const auto& x : allTuples(arity, bound)) {
    bool found = false;
    for (int y = 0; y <= bound && !found; ++y) {
      auto args = x;
      args.push_back(y);
      found = evaluate(f, args, bound + 1) == 0;
    }
    if (!found) throw Error(ErrorKind::NoWitness, "some argument has no zero within the truncation");
  }
  const auto discrete = discreteCategory(bound + 1);
  const auto w = chainCategory(bound);
  std::vector<CategoryPtr> factors(arity, discrete);
  factors.push_back(w);
  const Product d = productCat(factors);
  // F read on omega_d^k x omega through the shared object indexing.
  const Functor onD = functorFromObjectMap(d.category, iso, f.objectMap);
  const Pullback zeros = pullback(onD, pointerFunctor(iso, 0));
  const Functor inclusion = zeros.projLeft;

  const Product xs = productCat(std::vector<CategoryPtr>(arity, discrete));
  Functor start{xs.category, d.category, std::vector<int>(xs.category->objectCount()),
                std::vector<int>(xs.category->morphismCount())};
  for (int o = 0; o < xs.category->objectCount(); ++o) {
    auto parts = xs.objectParts(o);
    parts.push_back(0);
    start.objectMap[o] = d.object(parts);
    start.morphismMap[xs.category->identity(o)] = d.category->identity(start.objectMap[o]);
  }
  KanResult lift;
  try {
    lift = kanLiftLeft(inclusion, start);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoKanLifting || e.kind() == ErrorKind::NoLimit)
      throw Error(ErrorKind::NoWitness, "some argument has no zero within the truncation");
    throw;
  }
  const auto groupoid = codiscreteCategory(bound + 1);
  const Product domain = numberPower(NumberKind::Groupoid, bound, arity);
  std::vector<int> objs(domain.category->objectCount());
  for (int o = 0; o < static_cast<int>(objs.size()); ++o) objs[o] = d.objectParts(inclusion(lift.functor(o))).back();
  Functor g = functorFromObjectMap(domain.category, groupoid, objs);

  // Scan cross-check.
  for (int o = 0; o < static_cast<int>(objs.size()); ++o) {
    auto parts = domain.objectParts(o);
    int least = -1;
    for (int y = 0; y <= bound && least < 0; ++y) {
      auto args = parts;
      args.push_back(y);
      if (evaluate(f, args, bound + 1) == 0) least = y;
    }
    if (least != objs[o]) throw Error(ErrorKind::ValidationFailed, "minimization disagrees with the scan");
  }
  return g;
}

}  // namespace sammy::stdlib
