#pragma once

#include <map>
#include <vector>

#include "sammy/builders.hpp"
#include "sammy/engine/basic.hpp"

namespace sammy {

struct Product {
  CategoryPtr category;
  std::vector<Functor> projections;
  std::vector<CategoryPtr> factors;

  /// Object index of a tuple of factor objects.
  int object(const std::vector<int>& parts) const {
    int idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i]->objectCount() + parts[i];
    return idx;
  }
  int morphism(const std::vector<int>& parts) const {
    int idx = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i]->morphismCount() + parts[i];
    return idx;
  }
  std::vector<int> objectParts(int idx) const { return split(idx, true); }
  std::vector<int> morphismParts(int idx) const { return split(idx, false); }

 private:
  std::vector<int> split(int idx, bool objects) const {
    std::vector<int> parts(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      const int base = objects ? factors[i]->objectCount() : factors[i]->morphismCount();
      parts[i] = idx % base;
      idx /= base;
    }
    return parts;
  }
};

/// n-ary product; objects and morphisms are mixed-radix tuples with the first
/// factor most significant.
inline Product productCat(const std::vector<CategoryPtr>& factors) {
  Product p;
  p.factors = factors;
  std::size_t n = 1, m = 1;
  for (const auto& f : factors) {
    n *= static_cast<std::size_t>(f->objectCount());
    m *= static_cast<std::size_t>(f->morphismCount());
  }
  checkSize(n, m, "product category");
  std::vector<Morphism> ms(m);
  for (std::size_t x = 0; x < m; ++x) {
    auto parts = p.morphismParts(static_cast<int>(x));
    std::vector<int> s(parts.size()), t(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      s[i] = factors[i]->src(parts[i]);
      t[i] = factors[i]->tgt(parts[i]);
    }
    ms[x] = {p.object(s), p.object(t)};
  }
  std::vector<int> ids(n);
  for (std::size_t o = 0; o < n; ++o) {
    auto parts = p.objectParts(static_cast<int>(o));
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = factors[i]->identity(parts[i]);
    ids[o] = p.morphism(parts);
  }
  p.category = Category::make(static_cast<int>(n), std::move(ms), std::move(ids), [&](int f, int g) {
    auto a = p.morphismParts(f), b = p.morphismParts(g);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = factors[i]->compose(a[i], b[i]);
    return p.morphism(a);
  });
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Functor pr{p.category, factors[i], std::vector<int>(n), std::vector<int>(m)};
    for (std::size_t o = 0; o < n; ++o) pr.objectMap[o] = p.objectParts(static_cast<int>(o))[i];
    for (std::size_t x = 0; x < m; ++x) pr.morphismMap[x] = p.morphismParts(static_cast<int>(x))[i];
    p.projections.push_back(std::move(pr));
  }
  return p;
}

inline Product productCat(const CategoryPtr& a, const CategoryPtr& b) { return productCat({a, b}); }

/// Tuple <F_1, ..., F_k> : X -> product of the targets.
inline Functor tupleFunctor(const Product& p, const std::vector<Functor>& parts) {
  const auto& X = parts.front().source;
  Functor r{X, p.category, std::vector<int>(X->objectCount()), std::vector<int>(X->morphismCount())};
  std::vector<int> buf(parts.size());
  for (int o = 0; o < X->objectCount(); ++o) {
    for (std::size_t i = 0; i < parts.size(); ++i) buf[i] = parts[i](o);
    r.objectMap[o] = p.object(buf);
  }
  for (int x = 0; x < X->morphismCount(); ++x) {
    for (std::size_t i = 0; i < parts.size(); ++i) buf[i] = parts[i].onMorphism(x);
    r.morphismMap[x] = p.morphism(buf);
  }
  return r;
}

/// Componentwise product of functors between the given products.
inline Functor productFunctor(const Product& from, const Product& to, const std::vector<Functor>& parts) {
  std::vector<Functor> legs;
  for (std::size_t i = 0; i < parts.size(); ++i) legs.push_back(comp(from.projections[i], parts[i]));
  return tupleFunctor(to, legs);
}

struct Coproduct {
  CategoryPtr category;
  std::vector<Functor> injections;
  std::vector<int> objectOffset;
  std::vector<int> morphismOffset;
};

inline Coproduct coproductCat(const std::vector<CategoryPtr>& parts) {
  Coproduct c;
  int n = 0, m = 0;
  for (const auto& p : parts) {
    c.objectOffset.push_back(n);
    c.morphismOffset.push_back(m);
    n += p->objectCount();
    m += p->morphismCount();
  }
  checkSize(static_cast<std::size_t>(n), static_cast<std::size_t>(m), "coproduct category");
  std::vector<Morphism> ms;
  std::vector<int> ids;
  std::vector<int> owner;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& x : parts[i]->morphisms()) {
      ms.push_back({x.src + c.objectOffset[i], x.tgt + c.objectOffset[i]});
      owner.push_back(static_cast<int>(i));
    }
    for (int id : parts[i]->identities()) ids.push_back(id + c.morphismOffset[i]);
  }
  c.category = Category::make(n, std::move(ms), std::move(ids), [&](int f, int g) {
    const int i = owner[f];
    const int off = c.morphismOffset[i];
    return parts[i]->compose(f - off, g - off) + off;
  });
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Functor inj{parts[i], c.category, {}, {}};
    for (int o = 0; o < parts[i]->objectCount(); ++o) inj.objectMap.push_back(o + c.objectOffset[i]);
    for (int x = 0; x < parts[i]->morphismCount(); ++x) inj.morphismMap.push_back(x + c.morphismOffset[i]);
    c.injections.push_back(std::move(inj));
  }
  return c;
}

inline Coproduct coproductCat(const CategoryPtr& a, const CategoryPtr& b) { return coproductCat({a, b}); }

struct Pullback {
  CategoryPtr category;
  Functor projLeft;
  Functor projRight;
};

/// Strict pullback of l : A -> C and r : B -> C: pairs agreeing in C.
inline Pullback pullback(const Functor& l, const Functor& r) {
  if (!sameCategory(l.target, r.target)) throw Error(ErrorKind::SourceTargetMismatch, "pullback over different categories");
  const auto& A = *l.source;
  const auto& B = *r.source;
  std::vector<std::pair<int, int>> objs, mors;
  std::map<std::pair<int, int>, int> objIdx, morIdx;
  for (int a = 0; a < A.objectCount(); ++a)
    for (int b = 0; b < B.objectCount(); ++b)
      if (l(a) == r(b)) {
        objIdx[{a, b}] = static_cast<int>(objs.size());
        objs.push_back({a, b});
      }
  std::vector<Morphism> ms;
  for (int u = 0; u < A.morphismCount(); ++u)
    for (int v = 0; v < B.morphismCount(); ++v)
      if (l.onMorphism(u) == r.onMorphism(v)) {
        morIdx[{u, v}] = static_cast<int>(mors.size());
        mors.push_back({u, v});
        ms.push_back({objIdx.at({A.src(u), B.src(v)}), objIdx.at({A.tgt(u), B.tgt(v)})});
      }
  checkSize(objs.size(), ms.size(), "pullback");
  std::vector<int> ids;
  for (auto [a, b] : objs) ids.push_back(morIdx.at({A.identity(a), B.identity(b)}));
  Pullback p;
  p.category = Category::make(static_cast<int>(objs.size()), std::move(ms), std::move(ids), [&](int f, int g) {
    return morIdx.at({A.compose(mors[f].first, mors[g].first), B.compose(mors[f].second, mors[g].second)});
  });
  p.projLeft = Functor{p.category, l.source, {}, {}};
  p.projRight = Functor{p.category, r.source, {}, {}};
  for (auto [a, b] : objs) {
    p.projLeft.objectMap.push_back(a);
    p.projRight.objectMap.push_back(b);
  }
  for (auto [u, v] : mors) {
    p.projLeft.morphismMap.push_back(u);
    p.projRight.morphismMap.push_back(v);
  }
  return p;
}

struct Subcategory {
  CategoryPtr category;
  Functor inclusion;
};

/// Subcategory on the chosen objects and the morphisms accepted by keep
/// (identities are always kept). The caller guarantees closure under
/// composition; validate() the result when unsure.
inline Subcategory subcategory(const CategoryPtr& c, const std::vector<int>& objects,
                               const std::function<bool(int)>& keep = nullptr) {
  const auto& C = *c;
  std::vector<int> newObj(C.objectCount(), -1);
  for (std::size_t i = 0; i < objects.size(); ++i) newObj[objects[i]] = static_cast<int>(i);
  std::vector<int> newMor(C.morphismCount(), -1), oldMor;
  std::vector<Morphism> ms;
  for (int x = 0; x < C.morphismCount(); ++x) {
    if (newObj[C.src(x)] < 0 || newObj[C.tgt(x)] < 0) continue;
    if (keep && !C.isIdentity(x) && !keep(x)) continue;
    newMor[x] = static_cast<int>(ms.size());
    oldMor.push_back(x);
    ms.push_back({newObj[C.src(x)], newObj[C.tgt(x)]});
  }
  std::vector<int> ids;
  for (int o : objects) ids.push_back(newMor[C.identity(o)]);
  Subcategory s;
  s.category = Category::make(static_cast<int>(objects.size()), std::move(ms), std::move(ids),
                              [&](int f, int g) { return newMor[C.compose(oldMor[f], oldMor[g])]; });
  s.inclusion = Functor{s.category, c, objects, oldMor};
  return s;
}

}  // namespace sammy
